#pragma once

// Cyclic combinatorics of n punctures v_1..v_n arranged clockwise on a
// circle. Vertices are 1-based; clockwise means increasing index mod n.

#include <stdexcept>
#include <variant>
#include <vector>

namespace qskein {

// The chord generator b_{ij}, stored with a < b (b_{ji} = b_{ij}).
struct chord {
    int a = 0;
    int b = 0;

    friend bool operator==(const chord& x, const chord& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const chord& x, const chord& y) { return !(x == y); }
    friend bool operator<(const chord& x, const chord& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
    friend bool operator>(const chord& x, const chord& y) { return y < x; }

    int other(int v) const { return v == a ? b : a; }
    bool has(int v) const { return v == a || v == b; }
};

inline void check_vertex(int i, int n, const char* what) {
    if (i < 1 || i > n) throw std::invalid_argument(std::string(what) + ": vertex out of range");
}

inline chord make_chord(int i, int j, int n) {
    check_vertex(i, n, "make_chord");
    check_vertex(j, n, "make_chord");
    if (i == j) throw std::invalid_argument("make_chord: no single-vertex generator");
    return i < j ? chord{i, j} : chord{j, i};
}

inline int next_vertex(int i, int n) { return i % n + 1; }

// All chords for the given n, in the generator total order.
inline std::vector<chord> all_chords(int n) {
    std::vector<chord> cs;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) cs.push_back(chord{i, j});
    return cs;
}

// Vertices strictly between i and j walking clockwise, in walk order
// (i+1 smallest). (i,i) is everything except i, so it is never empty.
inline std::vector<int> cyclic_interval(int i, int j, int n) {
    check_vertex(i, n, "cyclic_interval");
    check_vertex(j, n, "cyclic_interval");
    std::vector<int> out;
    for (int w = next_vertex(i, n); w != j; w = next_vertex(w, n)) out.push_back(w);
    return out;
}

// True iff (x, y, z) are distinct and appear in clockwise cyclic order.
inline bool is_cw_cyclic(int x, int y, int z) {
    return (x < y && y < z) || (y < z && z < x) || (z < x && x < y);
}

// Interleaving criterion: all four endpoints distinct and exactly one
// endpoint of c2 lies strictly inside the arc (c1.a, c1.b).
inline bool crosses(const chord& c1, const chord& c2, int n) {
    check_vertex(c1.b, n, "crosses");
    check_vertex(c2.b, n, "crosses");
    if (c1.has(c2.a) || c1.has(c2.b)) return false;
    const bool a_in = is_cw_cyclic(c1.a, c2.a, c1.b);
    const bool b_in = is_cw_cyclic(c1.a, c2.b, c1.b);
    return a_in != b_in;
}

struct pair_identical {};
struct pair_disjoint {};
struct pair_shared {
    int shared = 0;
    // True iff (other(c2), shared, other(c1)) is clockwise cyclic, i.e. the
    // quantum commutation relation applies to the product c1*c2 directly.
    bool cw = false;
};
struct pair_crossing {
    int i = 0, j = 0, k = 0, l = 0;  // clockwise cyclic, {i,k} = c1, {j,l} = c2
};

using pair_class = std::variant<pair_identical, pair_disjoint, pair_shared, pair_crossing>;

// Clockwise-cyclic labels (i,j,k,l) with {i,k} = c1, {j,l} = c2; of the two
// admissible labelings, i is the smaller endpoint of c1.
inline pair_crossing canonical_ptolemy_labels(const chord& c1, const chord& c2, int n) {
    if (!crosses(c1, c2, n))
        throw std::invalid_argument("canonical_ptolemy_labels: chords do not cross");
    // With i = c1.a < c1.b = k, exactly one endpoint of c2 lies in (i, k);
    // clockwise order around the circle is (i, inside, k, outside).
    const int i = c1.a, k = c1.b;
    const int j = is_cw_cyclic(i, c2.a, k) ? c2.a : c2.b;
    const int l = c2.other(j);
    return pair_crossing{i, j, k, l};
}

inline pair_class classify_pair(const chord& c1, const chord& c2, int n) {
    if (c1 == c2) return pair_identical{};
    if (crosses(c1, c2, n)) return canonical_ptolemy_labels(c1, c2, n);
    if (c1.has(c2.a) || c1.has(c2.b)) {
        const int s = c1.has(c2.a) ? c2.a : c2.b;
        return pair_shared{s, is_cw_cyclic(c2.other(s), s, c1.other(s))};
    }
    return pair_disjoint{};
}

}  // namespace qskein
