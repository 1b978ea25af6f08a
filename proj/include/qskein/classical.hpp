#pragma once

// The q = 1 specialization: commutative monomials in the chord generators
// over Z[v_i^{±}], the Plücker relations, and exact rank oracles for the
// straightening-law basis. The straightening here is a separate code path
// from the quantum rewriting engine so the two can cross-validate.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qskein/algebra.hpp"
#include "qskein/rewrite.hpp"

namespace qskein {

using bigrat = boost::multiprecision::cpp_rational;

// Element of the commutative image: words are sorted multisets of chords,
// coefficients are q-free.
class classical_elem {
public:
    using term_map = std::map<word, ring_elem, word_order>;

    classical_elem() = default;
    explicit classical_elem(int n) : n_(n) {}

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const term_map& terms() const { return terms_; }

    void add_term(word w, ring_elem c) {
        std::sort(w.begin(), w.end());
        c = specialize_q1(c);
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const classical_elem& a, const classical_elem& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const classical_elem& a, const classical_elem& b) { return !(a == b); }

    friend classical_elem operator+(const classical_elem& a, const classical_elem& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("classical add: puncture counts differ");
        classical_elem r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }

    friend classical_elem operator-(const classical_elem& a) {
        classical_elem r(a.n_);
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend classical_elem operator-(const classical_elem& a, const classical_elem& b) {
        return a + (-b);
    }

    friend classical_elem operator*(const classical_elem& a, const classical_elem& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("classical mul: puncture counts differ");
        classical_elem r(a.n_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(std::move(w), ca * cb);
            }
        return r;
    }

private:
    int n_ = 0;
    term_map terms_;
};

// q^{1/2} -> 1 on coefficients, words commutatively sorted.
inline classical_elem classicalize(const algebra_elem& a) {
    classical_elem r(a.n());
    for (const auto& [w, c] : a.terms()) r.add_term(w, c);
    return r;
}

// Straighten every crossing with the q = 1 Ptolemy rule
// b_ik b_jl = b_ij b_kl + b_il b_jk; implemented directly on commutative
// monomials, independent of the quantum rewriting path.
inline classical_elem classical_normal_form(const classical_elem& a) {
    const int n = a.n();
    classical_elem result(n);
    std::map<word, ring_elem, word_order> pending(a.terms().begin(), a.terms().end());
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const word& w = node.key();
        const ring_elem& c = node.mapped();
        if (c.is_zero()) continue;
        size_t pa = w.size(), pb = w.size();
        for (size_t i = 0; i < w.size() && pa == w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                if (crosses(w[i], w[j], n)) {
                    pa = i;
                    pb = j;
                    break;
                }
        if (pa == w.size()) {
            result.add_term(w, c);
            continue;
        }
        const pair_crossing lab = canonical_ptolemy_labels(w[pa], w[pb], n);
        word rest;
        for (size_t t = 0; t < w.size(); ++t)
            if (t != pa && t != pb) rest.push_back(w[t]);
        for (const auto& [c1, c2] : {std::pair{make_chord(lab.i, lab.j, n), make_chord(lab.k, lab.l, n)},
                                     std::pair{make_chord(lab.i, lab.l, n), make_chord(lab.j, lab.k, n)}}) {
            word child = rest;
            child.push_back(c1);
            child.push_back(c2);
            std::sort(child.begin(), child.end());
            auto it = pending.find(child);
            if (it == pending.end())
                pending.emplace(std::move(child), c);
            else
                it->second += c;
        }
    }
    return result;
}

// classicalize(normalize(b_ik b_jl - b_ij b_kl - b_il b_jk)); always zero.
inline classical_elem plucker_residual(int i, int j, int k, int l, int n) {
    if (!(is_cw_cyclic(i, j, k) && is_cw_cyclic(j, k, l) && is_cw_cyclic(i, k, l)))
        throw std::invalid_argument("plucker_residual: labels not in cyclic order");
    auto gen = [&](int x, int y) { return algebra_elem::generator(n, make_chord(x, y, n)); };
    const algebra_elem expr =
        gen(i, k) * gen(j, l) - gen(i, j) * gen(k, l) - gen(i, l) * gen(j, k);
    return classicalize(normalize(expr));
}

// True iff the quantum and classical reduction paths agree on a:
// classicalize(normalize(a)) == classical_normal_form(classicalize(a)).
inline bool specialization_commutes_check(const algebra_elem& a) {
    return classicalize(normalize(a)) == classical_normal_form(classicalize(a));
}

namespace detail {

// Degree-d commutative monomials over the chords of [n], lex order.
inline std::vector<word> monomials_of_degree(int n, int d) {
    const std::vector<chord> gens = all_chords(n);
    std::vector<word> out;
    word cur;
    auto extend = [&](auto&& self, size_t first) -> void {
        if (static_cast<int>(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (size_t g = first; g < gens.size(); ++g) {
            cur.push_back(gens[g]);
            self(self, g);
            cur.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

// Online sparse row-echelon rank over the rationals; deterministic
// (rows in given order, pivot on the smallest column).
class sparse_rational_rank {
public:
    void add_row(std::map<int, bigrat> row) {
        while (!row.empty()) {
            const int lead = row.begin()->first;
            auto pivot = pivots_.find(lead);
            if (pivot == pivots_.end()) {
                const bigrat inv = bigrat(1) / row.begin()->second;
                for (auto& [col, val] : row) val *= inv;
                pivots_.emplace(lead, std::move(row));
                return;
            }
            const bigrat f = row.begin()->second;
            for (const auto& [col, val] : pivot->second) {
                auto it = row.find(col);
                if (it == row.end()) {
                    row.emplace(col, -f * val);
                } else {
                    it->second -= f * val;
                    if (it->second == 0) row.erase(it);
                }
            }
        }
    }

    size_t rank() const { return pivots_.size(); }

private:
    std::map<int, std::map<int, bigrat>> pivots_;
};

}  // namespace detail

// Exact check that the degree-d component of Q[b_ij] modulo the Plücker
// relations has rank |enumerate_basis(n, d)|.
inline bool straightening_rank_oracle(int n, int d) {
    if (n < 3 || n > 6 || d < 0 || d > 3)
        throw std::invalid_argument("straightening_rank_oracle: out-of-range parameters");
    const std::vector<word> monos = detail::monomials_of_degree(n, d);
    std::map<word, int, word_order> index;
    for (size_t t = 0; t < monos.size(); ++t) index.emplace(monos[t], static_cast<int>(t));

    detail::sparse_rational_rank rk;
    if (d >= 2) {
        const std::vector<word> lower = detail::monomials_of_degree(n, d - 2);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l)
                        for (const word& u : lower) {
                            auto col = [&](chord c1, chord c2) {
                                word m = u;
                                m.push_back(c1);
                                m.push_back(c2);
                                std::sort(m.begin(), m.end());
                                return index.at(m);
                            };
                            std::map<int, bigrat> row;
                            row[col(chord{i, k}, chord{j, l})] += 1;
                            row[col(chord{i, j}, chord{k, l})] -= 1;
                            row[col(chord{i, l}, chord{j, k})] -= 1;
                            rk.add_row(std::move(row));
                        }
    }
    const size_t quotient_rank = monos.size() - rk.rank();
    return quotient_rank == enumerate_basis(n, d).size();
}

}  // namespace qskein
