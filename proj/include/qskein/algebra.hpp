#pragma once

// The free algebra R<beta_ij>: noncommutative words in the chord
// generators with coefficients in the commutative ring R. Multiplication
// here is raw concatenation; the rewriting system lives in rewrite.hpp.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qskein/chords.hpp"
#include "qskein/ring.hpp"

namespace qskein {

using word = std::vector<chord>;

// Deterministic total order on words: length first, then letter-lex.
struct word_order {
    bool operator()(const word& x, const word& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    }
};

class algebra_elem {
public:
    using term_map = std::map<word, ring_elem, word_order>;

    algebra_elem() = default;
    explicit algebra_elem(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("algebra_elem: negative puncture count");
    }

    static algebra_elem zero(int n) { return algebra_elem(n); }

    static algebra_elem scalar(ring_elem c) {
        algebra_elem e(c.n());
        e.add_term(word{}, std::move(c));
        return e;
    }

    static algebra_elem one(int n) { return scalar(ring_elem::one(n)); }

    static algebra_elem generator(int n, chord c) {
        check_vertex(c.b, n, "algebra_elem::generator");
        algebra_elem e(n);
        e.add_term(word{c}, ring_elem::one(n));
        return e;
    }

    static algebra_elem monomial(int n, word w, ring_elem c) {
        if (c.n() != n) throw std::invalid_argument("algebra_elem::monomial: coefficient n differs");
        for (const chord& l : w) check_vertex(l.b, n, "algebra_elem::monomial");
        algebra_elem e(n);
        e.add_term(std::move(w), std::move(c));
        return e;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const term_map& terms() const { return terms_; }

    void add_term(word w, ring_elem c) {
        if (c.n() != n_) throw std::invalid_argument("algebra_elem::add_term: coefficient n differs");
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const algebra_elem& a, const algebra_elem& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const algebra_elem& a, const algebra_elem& b) { return !(a == b); }

    friend algebra_elem operator+(const algebra_elem& a, const algebra_elem& b) {
        require_same_n(a, b, "algebra add");
        algebra_elem r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }

    friend algebra_elem operator-(const algebra_elem& a) {
        algebra_elem r(a.n_);
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend algebra_elem operator-(const algebra_elem& a, const algebra_elem& b) { return a + (-b); }

    // Stacking product: bilinear extension of word concatenation.
    friend algebra_elem operator*(const algebra_elem& a, const algebra_elem& b) {
        require_same_n(a, b, "algebra mul");
        algebra_elem r(a.n_);
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(std::move(w), ca * cb);
            }
        }
        return r;
    }

    friend algebra_elem operator*(const ring_elem& c, const algebra_elem& a) {
        algebra_elem r(a.n_);
        for (const auto& [w, cw] : a.terms_) r.add_term(w, c * cw);
        return r;
    }
    friend algebra_elem operator*(const algebra_elem& a, const ring_elem& c) { return c * a; }

    algebra_elem& operator+=(const algebra_elem& b) {
        require_same_n(*this, b, "algebra add");
        for (const auto& [w, c] : b.terms_) add_term(w, c);
        return *this;
    }
    algebra_elem& operator-=(const algebra_elem& b) { return *this += -b; }
    algebra_elem& operator*=(const algebra_elem& b) { return *this = *this * b; }

    static void require_same_n(const algebra_elem& a, const algebra_elem& b, const char* what) {
        if (a.n_ != b.n_)
            throw std::invalid_argument(std::string(what) + ": puncture counts differ");
    }

private:
    int n_ = 0;
    term_map terms_;
};

// sum coeffs[t] * elems[t]
inline algebra_elem linear_combine(const std::vector<ring_elem>& coeffs,
                                   const std::vector<algebra_elem>& elems) {
    if (coeffs.size() != elems.size())
        throw std::invalid_argument("linear_combine: length mismatch");
    if (elems.empty()) return algebra_elem::zero(0);
    algebra_elem r(elems.front().n());
    for (size_t t = 0; t < elems.size(); ++t) r += coeffs[t] * elems[t];
    return r;
}

// The bar anti-automorphism: reverse each word, invert q^{1/2} in each
// coefficient. Generators and the v_i are fixed.
inline algebra_elem bar(const algebra_elem& a) {
    algebra_elem r(a.n());
    for (const auto& [w, c] : a.terms()) {
        word rev(w.rbegin(), w.rend());
        r.add_term(std::move(rev), bar(c));
    }
    return r;
}

}  // namespace qskein
