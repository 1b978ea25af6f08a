#pragma once

// Canonical text and JSON forms for ring and algebra elements. Element
// terms are listed leading-first (word length descending, then letter-lex
// descending); ring terms ascend in (qhalf, vexp). Both forms are
// deterministic and round-trip exactly.
//
// Text atoms: Q is q^{1/2}, q is q, v(i) a vertex class, b(i,j) a chord.

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qskein/algebra.hpp"

namespace qskein {

using json = nlohmann::ordered_json;

namespace detail {

inline long long to_int64(const bigint& c) {
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
        throw std::overflow_error("coefficient exceeds the JSON integer range");
    return static_cast<long long>(c);
}

inline void append_power(std::vector<std::string>& parts, const std::string& base, int e) {
    if (e == 0) return;
    if (e == 1)
        parts.push_back(base);
    else
        parts.push_back(base + "^" + std::to_string(e));
}

// |c| * q-part * v-part (word appended by the caller); sign handled outside.
inline std::vector<std::string> monomial_parts(const bigint& c, const scalar_monomial& m) {
    std::vector<std::string> parts;
    if (m.qhalf != 0) {
        if (m.qhalf % 2 == 0)
            append_power(parts, "q", m.qhalf / 2);
        else
            append_power(parts, "Q", m.qhalf);
    }
    for (size_t i = 0; i < m.vexp.size(); ++i)
        append_power(parts, "v(" + std::to_string(i + 1) + ")", m.vexp[i]);
    bigint a = c < 0 ? bigint(-c) : c;
    if (a != 1 || parts.empty()) parts.insert(parts.begin(), a.str());
    return parts;
}

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline void append_word(std::vector<std::string>& parts, const word& w) {
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        append_power(parts, "b(" + std::to_string(w[i].a) + "," + std::to_string(w[i].b) + ")",
                     static_cast<int>(j - i));
        i = j;
    }
}

struct signed_text {
    bool negative = false;
    std::string body;
};

inline std::string join_signed(const std::vector<signed_text>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].negative ? "-" : "";
        else
            out += terms[i].negative ? " - " : " + ";
        out += terms[i].body;
    }
    return out;
}

}  // namespace detail

inline std::string to_text(const ring_elem& r) {
    std::vector<detail::signed_text> terms;
    for (const auto& [m, c] : r.terms())
        terms.push_back({c < 0, detail::join(detail::monomial_parts(c, m), "*")});
    return detail::join_signed(terms);
}

inline std::string to_text(const algebra_elem& a) {
    std::vector<detail::signed_text> terms;
    const auto& tm = a.terms();
    for (auto it = tm.rbegin(); it != tm.rend(); ++it) {
        const auto& [w, c] = *it;
        if (c.terms().size() == 1) {
            const auto& [m, coef] = *c.terms().begin();
            std::vector<std::string> parts = detail::monomial_parts(coef, m);
            if (!w.empty() && parts.size() == 1 && parts[0] == "1") parts.clear();
            detail::append_word(parts, w);
            terms.push_back({coef < 0, detail::join(parts, "*")});
        } else {
            std::vector<std::string> parts{"(" + to_text(c) + ")"};
            detail::append_word(parts, w);
            terms.push_back({false, detail::join(parts, "*")});
        }
    }
    return detail::join_signed(terms);
}

inline json to_json(const ring_elem& r) {
    json terms = json::array();
    for (const auto& [m, c] : r.terms())
        terms.push_back(json{{"qh", m.qhalf}, {"v", m.vexp}, {"c", detail::to_int64(c)}});
    return terms;
}

inline json to_json(const algebra_elem& a) {
    json terms = json::array();
    const auto& tm = a.terms();
    for (auto it = tm.rbegin(); it != tm.rend(); ++it) {
        json w = json::array();
        for (const chord& c : it->first) w.push_back(json::array({c.a, c.b}));
        terms.push_back(json{{"word", std::move(w)}, {"coeff", to_json(it->second)}});
    }
    return json{{"n", a.n()}, {"terms", std::move(terms)}};
}

inline ring_elem ring_from_json(const json& j, int n) {
    ring_elem r(n);
    for (const auto& t : j) {
        std::vector<int> ve = t.at("v").get<std::vector<int>>();
        if (static_cast<int>(ve.size()) != n)
            throw std::invalid_argument("ring_from_json: vexp length differs from n");
        r.add_term(scalar_monomial{t.at("qh").get<int>(), std::move(ve)},
                   bigint(t.at("c").get<long long>()));
    }
    return r;
}

inline algebra_elem elem_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    algebra_elem a(n);
    for (const auto& t : j.at("terms")) {
        word w;
        for (const auto& c : t.at("word")) w.push_back(make_chord(c.at(0), c.at(1), n));
        a.add_term(std::move(w), ring_from_json(t.at("coeff"), n));
    }
    return a;
}

}  // namespace qskein
