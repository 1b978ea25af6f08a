#pragma once

// Exact arithmetic in the commutative coefficient ring
//   R = Z[q^{±1/2}, v_1^{±}, ..., v_n^{±}].
// Half-integer q-exponents are stored as integer counts of q^{1/2},
// so q^{a/2} has qhalf = a. Coefficients are arbitrary-precision.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qskein {

using bigint = boost::multiprecision::cpp_int;

// One Laurent monomial q^{qhalf/2} * prod v_i^{vexp[i-1]}, used as a map key.
struct scalar_monomial {
    int qhalf = 0;
    std::vector<int> vexp;

    friend bool operator==(const scalar_monomial& a, const scalar_monomial& b) {
        return a.qhalf == b.qhalf && a.vexp == b.vexp;
    }
    friend bool operator<(const scalar_monomial& a, const scalar_monomial& b) {
        if (a.qhalf != b.qhalf) return a.qhalf < b.qhalf;
        return a.vexp < b.vexp;
    }
};

class ring_elem {
public:
    ring_elem() = default;
    explicit ring_elem(int n) : n_(check_n(n)) {}

    static ring_elem zero(int n) { return ring_elem(n); }

    static ring_elem integer(int n, bigint c) {
        ring_elem r(n);
        r.add_term(scalar_monomial{0, std::vector<int>(static_cast<size_t>(n), 0)}, std::move(c));
        return r;
    }

    static ring_elem one(int n) { return integer(n, 1); }

    // q^{a/2}
    static ring_elem q_half(int n, int a, bigint c = 1) {
        ring_elem r(n);
        r.add_term(scalar_monomial{a, std::vector<int>(static_cast<size_t>(n), 0)}, std::move(c));
        return r;
    }

    // v_i^e, 1-based i
    static ring_elem v(int n, int i, int e = 1) {
        if (i < 1 || i > n) throw std::invalid_argument("ring_elem::v: vertex index out of range");
        ring_elem r(n);
        std::vector<int> ve(static_cast<size_t>(n), 0);
        ve[static_cast<size_t>(i - 1)] = e;
        r.add_term(scalar_monomial{0, std::move(ve)}, bigint(1));
        return r;
    }

    static ring_elem monomial(int n, int qhalf, std::vector<int> vexp, bigint c) {
        if (static_cast<int>(vexp.size()) != n)
            throw std::invalid_argument("ring_elem::monomial: vexp length must equal n");
        ring_elem r(n);
        r.add_term(scalar_monomial{qhalf, std::move(vexp)}, std::move(c));
        return r;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<scalar_monomial, bigint>& terms() const { return terms_; }

    // True iff a single term with coefficient ±1 (a unit of R).
    bool is_unit_monomial() const {
        return terms_.size() == 1 &&
               (terms_.begin()->second == 1 || terms_.begin()->second == -1);
    }

    void add_term(scalar_monomial m, bigint c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const ring_elem& a, const ring_elem& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ring_elem& a, const ring_elem& b) { return !(a == b); }

    friend ring_elem operator+(const ring_elem& a, const ring_elem& b) {
        require_same_n(a, b, "ring add");
        ring_elem r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend ring_elem operator-(const ring_elem& a) {
        ring_elem r(a.n_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend ring_elem operator-(const ring_elem& a, const ring_elem& b) { return a + (-b); }

    friend ring_elem operator*(const ring_elem& a, const ring_elem& b) {
        require_same_n(a, b, "ring mul");
        ring_elem r(a.n_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                scalar_monomial m{ma.qhalf + mb.qhalf, ma.vexp};
                for (size_t i = 0; i < m.vexp.size(); ++i) m.vexp[i] += mb.vexp[i];
                r.add_term(std::move(m), ca * cb);
            }
        }
        return r;
    }

    ring_elem& operator+=(const ring_elem& b) { return *this = *this + b; }
    ring_elem& operator-=(const ring_elem& b) { return *this = *this - b; }
    ring_elem& operator*=(const ring_elem& b) { return *this = *this * b; }

    // The unique u with u * m == 1 when *this is a single ±1 monomial.
    ring_elem unit_inverse() const {
        if (!is_unit_monomial())
            throw std::invalid_argument("unit_inverse: element is not a unit monomial");
        const auto& [m, c] = *terms_.begin();
        scalar_monomial inv{-m.qhalf, m.vexp};
        for (auto& e : inv.vexp) e = -e;
        ring_elem r(n_);
        r.add_term(std::move(inv), c);  // c is ±1, self-inverse
        return r;
    }

    static void require_same_n(const ring_elem& a, const ring_elem& b, const char* what) {
        if (a.n_ != b.n_)
            throw std::invalid_argument(std::string(what) + ": puncture counts differ");
    }

private:
    static int check_n(int n) {
        if (n < 0) throw std::invalid_argument("ring_elem: negative puncture count");
        return n;
    }

    int n_ = 0;
    std::map<scalar_monomial, bigint> terms_;
};

// Set q^{1/2} = 1: every qhalf exponent becomes 0, colliding terms merge.
inline ring_elem specialize_q1(const ring_elem& a) {
    ring_elem r(a.n());
    for (const auto& [m, c] : a.terms()) r.add_term(scalar_monomial{0, m.vexp}, c);
    return r;
}

struct qhalf_factorization {
    int k = 0;        // maximal power of (q^{1/2} - 1)
    ring_elem rest;   // cofactor, nonzero at q^{1/2} = 1
};

namespace detail {

// Exact division by (q^{1/2} - 1). Requires specialize_q1(a) == 0; works
// per v-exponent group as univariate Laurent division in q^{1/2}.
inline ring_elem divide_qhalf_minus_one(const ring_elem& a) {
    std::map<std::vector<int>, std::map<int, bigint>> groups;
    for (const auto& [m, c] : a.terms()) groups[m.vexp][m.qhalf] = c;
    ring_elem r(a.n());
    for (auto& [ve, poly] : groups) {
        const int lo = poly.begin()->first;
        const int hi = poly.rbegin()->first;
        // p(Q) = Q^lo * sum_{d>=0} c_d Q^d; divide the polynomial part by (Q-1).
        std::vector<bigint> coeff(static_cast<size_t>(hi - lo + 1));
        for (const auto& [e, c] : poly) coeff[static_cast<size_t>(e - lo)] = c;
        bigint carry = 0;  // Horner from the top: quotient digit at degree d-1 is c_d + carry
        for (size_t d = coeff.size(); d-- > 1;) {
            carry += coeff[d];
            r.add_term(scalar_monomial{static_cast<int>(d) - 1 + lo, ve}, carry);
        }
        if (carry + coeff[0] != 0)
            throw std::invalid_argument("divide_qhalf_minus_one: not divisible");
    }
    return r;
}

}  // namespace detail

// a = (q^{1/2} - 1)^k * rest with k maximal, i.e. specialize_q1(rest) != 0.
inline qhalf_factorization factor_qhalf_minus_one(const ring_elem& a) {
    if (a.is_zero())
        throw std::invalid_argument("factor_qhalf_minus_one: undefined for zero input");
    qhalf_factorization f{0, a};
    while (specialize_q1(f.rest).is_zero()) {
        f.rest = detail::divide_qhalf_minus_one(f.rest);
        ++f.k;
    }
    return f;
}

// q^{1/2} -> q^{-1/2}, the coefficient half of the bar anti-involution.
inline ring_elem bar(const ring_elem& a) {
    ring_elem r(a.n());
    for (const auto& [m, c] : a.terms()) r.add_term(scalar_monomial{-m.qhalf, m.vexp}, c);
    return r;
}

}  // namespace qskein
