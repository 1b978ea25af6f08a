#pragma once

// Explicit constructions of the named curve classes: the waterdrops w_i
// and their conjugates, the outside arcs gamma_ij^±, the eta recursion,
// the polygon products mu_I, the stair classes nu_I, and the enclosing
// loops delta_I / delta. Formula and recursion routes are kept separate
// so they can cross-validate each other.

#include <stdexcept>
#include <vector>

#include "qskein/algebra.hpp"
#include "qskein/rewrite.hpp"

namespace qskein {

// w_i = (q^{1/2} - q^{5/2}) v_i^{-1}; conjugated variant inverts q^{1/2}.
// Also serves as the beta_ii := conjugated waterdrop convention.
inline ring_elem waterdrop(int n, int i, bool conjugated) {
    check_vertex(i, n, "waterdrop");
    const int sgn = conjugated ? -1 : 1;
    return (ring_elem::q_half(n, sgn) - ring_elem::q_half(n, 5 * sgn)) * ring_elem::v(n, i, -1);
}

// The loop value of a circle enclosing nothing: -q^2 - q^{-2}.
inline ring_elem trivial_loop(int n) {
    return -(ring_elem::q_half(n, 4) + ring_elem::q_half(n, -4));
}

namespace detail {

// Path word beta_{p0 p1} beta_{p1 p2} ... as an element; a degenerate
// single step beta_ii contributes the scalar conjugated waterdrop.
inline algebra_elem path_word(int n, const std::vector<int>& pts) {
    word w;
    ring_elem c = ring_elem::one(n);
    for (size_t k = 0; k + 1 < pts.size(); ++k) {
        if (pts[k] == pts[k + 1])
            c *= waterdrop(n, pts[k], true);
        else
            w.push_back(make_chord(pts[k], pts[k + 1], n));
    }
    return algebra_elem::monomial(n, std::move(w), std::move(c));
}

}  // namespace detail

// The clockwise outside arc from v_i to v_j as an alternating sum over all
// clockwise paths: for I ⊆ (i,j) in walk order, the path i -> I -> j enters
// with sign (-1)^{|(i,j)\I|} and weight q^{|(i,j)| - |I|/2} prod v_{i_k}.
// The counterclockwise arc gamma_ij^- is gamma_plus(j, i, n).
inline algebra_elem gamma_plus(int i, int j, int n) {
    if (n < 2) throw std::invalid_argument("gamma_plus: requires n >= 2");
    check_vertex(i, n, "gamma_plus");
    check_vertex(j, n, "gamma_plus");
    const std::vector<int> between = cyclic_interval(i, j, n);
    const size_t m = between.size();
    algebra_elem out(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> pts{i};
        ring_elem c = ring_elem::one(n);
        for (size_t k = 0; k < m; ++k) {
            if (mask & (std::uint64_t{1} << k)) {
                pts.push_back(between[k]);
                c *= ring_elem::v(n, between[k]);
            }
        }
        pts.push_back(j);
        const size_t taken = pts.size() - 2;
        const int sign = ((m - taken) % 2 == 0) ? 1 : -1;
        c *= ring_elem::q_half(n, 2 * static_cast<int>(m) - static_cast<int>(taken), sign);
        out += c * detail::path_word(n, pts);
    }
    return out;
}

// eta_{ikj} = q^{1/2} v_k b_ik eta_{k,k+1,j} - q eta_{i,k+1,j}, with
// eta_ijj = b_ij and eta_iii the conjugated waterdrop. eta(i, i+1, j)
// rebuilds gamma_plus(i, j) independently of the closed formula.
inline algebra_elem eta(int i, int k, int j, int n) {
    check_vertex(i, n, "eta");
    check_vertex(k, n, "eta");
    check_vertex(j, n, "eta");
    if (k != j) {
        const std::vector<int> dom = cyclic_interval(i, j, n);
        bool ok = false;
        for (int v : dom) ok = ok || (v == k);
        if (!ok) throw std::invalid_argument("eta: k outside (i,j) ∪ {j}");
    }
    if (k == j) {
        if (i == j) return algebra_elem::scalar(waterdrop(n, i, true));
        return algebra_elem::generator(n, make_chord(i, j, n));
    }
    const int k1 = next_vertex(k, n);
    const ring_elem head = ring_elem::q_half(n, 1) * ring_elem::v(n, k);
    algebra_elem out = head * (algebra_elem::generator(n, make_chord(i, k, n)) * eta(k, k1, j, n));
    out -= ring_elem::q_half(n, 2) * eta(i, k1, j, n);
    return out;
}

// Ordered edge product of the convex polygon on I (elements increasing):
// mu_I = (prod v_i) b_{i1 i2} ... b_{i_m i1}; conventions mu_{i} = v_i w̄_i
// and mu_∅ = -q^2 - q^{-2}.
inline algebra_elem mu(const std::vector<int>& I, int n) {
    for (size_t k = 0; k < I.size(); ++k) {
        check_vertex(I[k], n, "mu");
        if (k + 1 < I.size() && I[k] >= I[k + 1])
            throw std::invalid_argument("mu: subset must be strictly increasing");
    }
    if (I.empty()) return algebra_elem::scalar(trivial_loop(n));
    if (I.size() == 1)
        return algebra_elem::scalar(ring_elem::v(n, I[0]) * waterdrop(n, I[0], true));
    ring_elem c = ring_elem::one(n);
    word w;
    for (size_t k = 0; k < I.size(); ++k) {
        c *= ring_elem::v(n, I[k]);
        w.push_back(make_chord(I[k], I[(k + 1) % I.size()], n));
    }
    return algebra_elem::monomial(n, std::move(w), std::move(c));
}

enum class nu_method { recursive, closed };

// Stair class over I. Recursive route: nu_I = q^{-1} mu_I + (q^{1/2}-q^{-3/2}) nu_{I≥2}
// with nu_{i} = v_i w_i and nu_∅ = -q^2 - q^{-2}. Closed route evaluates
//   nu_I = (q^{1/2}-q^{-3/2})^{|I|-1} v_{i_m} w_{i_m}
//        + sum_{j=1}^{|I|-1} q^{-1} (q^{1/2}-q^{-3/2})^{j-1} mu_{I≥j}.
inline algebra_elem nu(const std::vector<int>& I, int n, nu_method method) {
    if (I.empty()) return algebra_elem::scalar(trivial_loop(n));
    if (I.size() == 1)
        return algebra_elem::scalar(ring_elem::v(n, I[0]) * waterdrop(n, I[0], false));
    const ring_elem step = ring_elem::q_half(n, 1) - ring_elem::q_half(n, -3);
    const ring_elem qinv = ring_elem::q_half(n, -2);
    if (method == nu_method::recursive) {
        const std::vector<int> tail(I.begin() + 1, I.end());
        return qinv * mu(I, n) + step * nu(tail, n, nu_method::recursive);
    }
    const int last = I.back();
    const ring_elem tail = ring_elem::v(n, last) * waterdrop(n, last, false);
    ring_elem step_pow = ring_elem::one(n);
    for (size_t j = 1; j < I.size(); ++j) step_pow *= step;  // step^{|I|-1}
    algebra_elem out = algebra_elem::scalar(step_pow * tail);
    ring_elem coeff = qinv;
    for (size_t j = 0; j + 1 < I.size(); ++j) {
        const std::vector<int> suffix(I.begin() + static_cast<long>(j), I.end());
        out += coeff * mu(suffix, n);
        coeff *= step;
    }
    return out;
}

// Loop class enclosing the convex hull of I, by Möbius inversion of the
// subset transform nu_I = sum_{J⊆I} q^{|I|/2-|J|} delta_J:
//   delta_I = sum_{J⊆I} (-1)^{|I|-|J|} q^{|I|-|J|/2} nu_J, normalized.
inline algebra_elem delta_subset(const std::vector<int>& I, int n) {
    for (size_t k = 0; k < I.size(); ++k) {
        check_vertex(I[k], n, "delta_subset");
        if (k + 1 < I.size() && I[k] >= I[k + 1])
            throw std::invalid_argument("delta_subset: subset must be strictly increasing");
    }
    const size_t m = I.size();
    algebra_elem out(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> J;
        for (size_t k = 0; k < m; ++k)
            if (mask & (std::uint64_t{1} << k)) J.push_back(I[k]);
        const int sign = ((m - J.size()) % 2 == 0) ? 1 : -1;
        // weight (-1)^{|I|-|J|} q^{|I| - |J|/2}
        const ring_elem c =
            ring_elem::q_half(n, 2 * static_cast<int>(m) - static_cast<int>(J.size()), sign);
        out += c * nu(J, n, nu_method::recursive);
    }
    return normalize(out);
}

// The big circle around all n punctures, by the closed alternating-polygon
// formula; must agree with delta_subset([n], n).
inline algebra_elem delta_closed(int n) {
    if (n < 2) throw std::invalid_argument("delta_closed: requires n >= 2");
    const int csign = (n % 2 == 0) ? -1 : 1;
    algebra_elem out = algebra_elem::scalar(
        ring_elem::q_half(n, 2 * (n - 2), csign) + ring_elem::q_half(n, -2 * (n - 2), csign));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> I;
        for (int k = 0; k < n; ++k)
            if (mask & (std::uint64_t{1} << k)) I.push_back(k + 1);
        if (I.size() < 2) continue;
        ring_elem c = ring_elem::one(n);
        word w;
        for (size_t k = 0; k < I.size(); ++k) {
            c *= ring_elem::v(n, I[k]);
            w.push_back(make_chord(I[k], I[(k + 1) % I.size()], n));
        }
        const int sign = ((n - static_cast<int>(I.size())) % 2 == 0) ? 1 : -1;
        c *= ring_elem::q_half(
            n, 2 * (n - 2 * I[0] + 1) - static_cast<int>(I.size()), sign);
        out += algebra_elem::monomial(n, std::move(w), std::move(c));
    }
    return normalize(out);
}

}  // namespace qskein
