#pragma once

// The ideal J presenting the sphere algebra: Ptolemy and quantum
// commutation generators (which already vanish in the plane algebra and
// are exported for completeness), plus the gamma relations and the big
// circle relation, whose normalized nonzero elements generate the kernel
// of the plane-to-sphere map.

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qskein/curves.hpp"
#include "qskein/io.hpp"

namespace qskein {

struct relation {
    std::string family;        // PTOLEMY | QCOMM1 | QCOMM2 | GAMMA | BIGCIRCLE
    std::vector<int> indices;  // the vertex labels in the family's canonical order
    algebra_elem element;

    std::string label() const {
        std::string s = family;
        if (!indices.empty()) {
            s += "(";
            for (size_t i = 0; i < indices.size(); ++i)
                s += (i ? "," : "") + std::to_string(indices[i]);
            s += ")";
        }
        return s;
    }
};

struct relation_set {
    int n = 0;
    std::vector<relation> relations;

    std::map<std::string, int> counts() const {
        std::map<std::string, int> c;
        for (const auto& r : relations) ++c[r.family];
        return c;
    }
};

// Generators of J for the n-punctured sphere. GAMMA(i,j) is the normalized
// difference of the two outside arcs (with gamma_ii^- the plain waterdrop);
// BIGCIRCLE is normalize(delta + q^2 + q^{-2}). The PTOLEMY/QCOMM entries
// are the raw defining relations of the plane algebra and are checked to
// normalize to zero on construction.
inline relation_set ideal_generators(int n) {
    if (n < 2) throw std::invalid_argument("ideal_generators: requires n >= 2");
    relation_set rs;
    rs.n = n;
    auto gen = [&](int x, int y) { return algebra_elem::generator(n, make_chord(x, y, n)); };
    const ring_elem qq = ring_elem::q_half(n, 2);
    const ring_elem qqi = ring_elem::q_half(n, -2);

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l) {
                    // both product orientations of the crossing ik x jl
                    rs.relations.push_back(
                        {"PTOLEMY", {i, j, k, l},
                         gen(i, k) * gen(j, l) - qq * gen(i, l) * gen(j, k) -
                             qqi * gen(i, j) * gen(k, l)});
                    rs.relations.push_back(
                        {"PTOLEMY", {j, k, l, i},
                         gen(j, l) * gen(i, k) - qq * gen(i, j) * gen(k, l) -
                             qqi * gen(j, k) * gen(i, l)});
                    rs.relations.push_back(
                        {"QCOMM1", {i, j, k, l},
                         gen(i, j) * gen(k, l) - gen(k, l) * gen(i, j)});
                }
                rs.relations.push_back(
                    {"QCOMM2", {i, j, k},
                     gen(j, k) * gen(i, j) - qq * gen(i, j) * gen(j, k) -
                         (ring_elem::q_half(n, -1) - ring_elem::q_half(n, 3)) *
                             ring_elem::v(n, j, -1) * gen(i, k)});
            }
    for (const auto& r : rs.relations)
        if (!normalize(r.element).is_zero())
            throw std::logic_error("ideal_generators: defining relation " + r.label() +
                                   " does not normalize to zero");

    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const algebra_elem minus = i == j
                                           ? algebra_elem::scalar(waterdrop(n, i, false))
                                           : gamma_plus(j, i, n);
            rs.relations.push_back({"GAMMA", {i, j}, normalize(gamma_plus(i, j, n) - minus)});
        }
    rs.relations.push_back(
        {"BIGCIRCLE", {}, normalize(delta_closed(n) - algebra_elem::scalar(trivial_loop(n)))});

    std::sort(rs.relations.begin(), rs.relations.end(), [](const relation& a, const relation& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.indices < b.indices;
    });
    return rs;
}

inline const algebra_elem& find_relation(const relation_set& rs, const std::string& family,
                                         const std::vector<int>& indices) {
    for (const auto& r : rs.relations)
        if (r.family == family && r.indices == indices) return r.element;
    throw std::invalid_argument("find_relation: no entry " + family);
}

// Ideal-membership certificate for the derived conjugate-waterdrop identity:
//   bar(gamma_ii^+) - w̄_i == q * GAMMA(i,i) + (q^{-1/2} - q^{3/2}) v_i^{-1} * BIGCIRCLE
// as normalized elements, for every i.
inline bool verify_conjugate_waterdrop(int n) {
    const relation_set rs = ideal_generators(n);
    const algebra_elem& big = find_relation(rs, "BIGCIRCLE", {});
    for (int i = 1; i <= n; ++i) {
        const algebra_elem lhs =
            normalize(bar(gamma_plus(i, i, n)) - algebra_elem::scalar(waterdrop(n, i, true)));
        const ring_elem coeff =
            (ring_elem::q_half(n, -1) - ring_elem::q_half(n, 3)) * ring_elem::v(n, i, -1);
        const algebra_elem rhs = normalize(
            ring_elem::q_half(n, 2) * find_relation(rs, "GAMMA", {i, i}) + coeff * big);
        if (lhs != rhs) return false;
    }
    return true;
}

// At n = 2 the exported ideal must be principal: every nonzero generator a
// unit-monomial multiple of v1 v2 b12^2 - 2 + q^2 + q^{-2}.
inline bool small_n_presentation_check(int n) {
    if (n != 2) throw std::invalid_argument("small_n_presentation_check: defined for n == 2");
    const algebra_elem rel =
        algebra_elem::monomial(2, word{chord{1, 2}, chord{1, 2}},
                               ring_elem::v(2, 1) * ring_elem::v(2, 2)) +
        algebra_elem::scalar(ring_elem::integer(2, -2) + ring_elem::q_half(2, 4) +
                             ring_elem::q_half(2, -4));
    const word lead{chord{1, 2}, chord{1, 2}};
    for (const auto& r : ideal_generators(2).relations) {
        if (r.element.is_zero()) continue;
        auto it = r.element.terms().find(lead);
        if (it == r.element.terms().end()) return false;
        if (!it->second.is_unit_monomial()) return false;
        // candidate unit u = leadcoeff(g) / (v1 v2); check g == u * rel exactly
        const ring_elem u = it->second * (ring_elem::v(2, 1) * ring_elem::v(2, 2)).unit_inverse();
        if (r.element != u * rel) return false;
    }
    return true;
}

// Deterministic JSON export: label-family counts in the header, relations
// sorted by label family then indices; byte-identical across runs.
inline json relations_to_json(const relation_set& rs) {
    json counts = json::object();
    for (const auto& [family, k] : rs.counts()) counts[family] = k;
    json rels = json::array();
    for (const auto& r : rs.relations)
        rels.push_back(json{{"label", r.label()}, {"element", to_json(r.element)}});
    return json{{"n", rs.n}, {"counts", std::move(counts)}, {"relations", std::move(rels)}};
}

inline void export_relations(int n, const std::string& path) {
    const json j = relations_to_json(ideal_generators(n));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("export_relations: cannot open " + path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("export_relations: write failed for " + path);
}

}  // namespace qskein
