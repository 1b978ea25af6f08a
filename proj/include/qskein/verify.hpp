#pragma once

// Verification suites shared by the CLI `verify` subcommand and the
// acceptance runner: the identity sweeps that cross-validate the closed
// formulas against their independent recursive constructions.

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qskein/classical.hpp"
#include "qskein/curves.hpp"
#include "qskein/sphere.hpp"

namespace qskein {

struct check_result {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Random element with at most max_terms words of length <= max_degree and
// small random coefficients; may normalize to zero.
inline algebra_elem random_elem(int n, int max_degree, int max_terms, std::mt19937_64& rng) {
    const std::vector<chord> gens = all_chords(n);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> wlen(0, max_degree);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> qexp(-3, 3);
    std::uniform_int_distribution<int> vexp(-2, 2);
    std::uniform_int_distribution<int> vslot(1, n);
    std::uniform_int_distribution<int> coef(-9, 9);
    algebra_elem out(n);
    const int t = nterms(rng);
    for (int s = 0; s < t; ++s) {
        word w;
        const int d = wlen(rng);
        for (int k = 0; k < d; ++k) w.push_back(gens[pick(rng)]);
        const int c = coef(rng);
        if (c == 0) continue;
        ring_elem r = ring_elem::q_half(n, qexp(rng), c);
        r *= ring_elem::v(n, vslot(rng), vexp(rng));
        out.add_term(std::move(w), std::move(r));
    }
    return out;
}

namespace detail {

inline check_result make_result(const std::string& name, bool pass, const std::string& why = "") {
    return {name, pass, pass ? "ok" : why};
}

}  // namespace detail

// gamma closed formula vs the eta recursion, all ordered pairs.
inline check_result suite_gamma(int n) {
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const algebra_elem lhs = normalize(gamma_plus(i, j, n));
            const algebra_elem rhs = normalize(eta(i, next_vertex(i, n), j, n));
            if (lhs != rhs) {
                std::ostringstream why;
                why << "gamma/eta disagree at (i,j)=(" << i << "," << j << ")";
                return detail::make_result("gamma", false, why.str());
            }
        }
    return detail::make_result("gamma", true);
}

inline std::vector<int> full_set(int n) {
    std::vector<int> I(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) I[static_cast<size_t>(k)] = k + 1;
    return I;
}

// delta closed formula vs Möbius inversion, nu recursion vs closed form,
// and the forward subset transform, on subsets of [n].
inline check_result suite_delta(int n) {
    if (delta_closed(n) != delta_subset(full_set(n), n))
        return detail::make_result("delta", false, "delta_closed != delta_subset([n])");
    const size_t cap = 5;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> I;
        for (int k = 0; k < n; ++k)
            if (mask & (std::uint64_t{1} << k)) I.push_back(k + 1);
        if (I.size() > cap) continue;
        if (normalize(nu(I, n, nu_method::recursive)) != normalize(nu(I, n, nu_method::closed)))
            return detail::make_result("delta", false, "nu recursive != nu closed");
        // forward transform: nu_I == sum_{J⊆I} q^{|I|/2-|J|} delta_J
        algebra_elem forward(n);
        const size_t m = I.size();
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
            std::vector<int> J;
            for (size_t k = 0; k < m; ++k)
                if (sub & (std::uint64_t{1} << k)) J.push_back(I[k]);
            forward += ring_elem::q_half(n, static_cast<int>(m) - 2 * static_cast<int>(J.size())) *
                       delta_subset(J, n);
        }
        if (normalize(forward) != normalize(nu(I, n, nu_method::recursive)))
            return detail::make_result("delta", false, "Möbius transform pair not inverse");
    }
    return detail::make_result("delta", true);
}

// bar(gamma_ii^+) == q gamma_ii^+ + (q^{-1/2}-q^{3/2}) v_i^{-1} delta, and
// the ideal-membership certificate built from the exported generators.
inline check_result suite_master(int n) {
    const algebra_elem delta = delta_closed(n);
    for (int i = 1; i <= n; ++i) {
        const algebra_elem g = gamma_plus(i, i, n);
        const ring_elem coeff =
            (ring_elem::q_half(n, -1) - ring_elem::q_half(n, 3)) * ring_elem::v(n, i, -1);
        if (normalize(bar(g)) != normalize(ring_elem::q_half(n, 2) * g + coeff * delta)) {
            std::ostringstream why;
            why << "master identity fails at i=" << i;
            return detail::make_result("master", false, why.str());
        }
    }
    if (!verify_conjugate_waterdrop(n))
        return detail::make_result("master", false, "conjugate-waterdrop certificate fails");
    return detail::make_result("master", true);
}

// randomized_normalize must agree with normalize exactly.
inline check_result suite_confluence(int n, int elements = 500, int seeds = 3) {
    std::mt19937_64 rng(0xC0FFEEu + static_cast<unsigned>(n));
    for (int t = 0; t < elements; ++t) {
        const algebra_elem a = random_elem(n, 4, 5, rng);
        const algebra_elem nf = normalize(a);
        for (int s = 1; s <= seeds; ++s)
            if (randomized_normalize(a, static_cast<std::uint64_t>(s)) != nf) {
                std::ostringstream why;
                why << "strategy disagreement on element " << t << " seed " << s;
                return detail::make_result("confluence", false, why.str());
            }
    }
    return detail::make_result("confluence", true);
}

// Plücker residuals, the straightening rank oracle, and agreement of the
// classical and quantum reduction paths.
inline check_result suite_classical(int n, int random_trials = 200) {
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    if (!plucker_residual(i, j, k, l, n).is_zero())
                        return detail::make_result("classical", false, "nonzero Plücker residual");
    if (n >= 3 && n <= 6)
        for (int d = 0; d <= 3; ++d)
            if (!straightening_rank_oracle(n, d)) {
                std::ostringstream why;
                why << "rank oracle fails at (n,d)=(" << n << "," << d << ")";
                return detail::make_result("classical", false, why.str());
            }
    std::mt19937_64 rng(0xBA5E5u + static_cast<unsigned>(n));
    for (int t = 0; t < random_trials; ++t)
        if (!specialization_commutes_check(random_elem(n, 3, 4, rng)))
            return detail::make_result("classical", false, "specialization does not commute");
    return detail::make_result("classical", true);
}

inline std::vector<check_result> run_suites(const std::string& which, int n) {
    std::vector<check_result> out;
    const bool all = which == "all";
    if (all || which == "gamma") out.push_back(suite_gamma(n));
    if (all || which == "delta") out.push_back(suite_delta(n));
    if (all || which == "master") out.push_back(suite_master(n));
    if (all || which == "confluence") out.push_back(suite_confluence(n));
    if (all || which == "classical") out.push_back(suite_classical(n));
    if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
    return out;
}

}  // namespace qskein
