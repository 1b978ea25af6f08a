#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <vector>

#include "qskein/chords.hpp"
#include "qskein/rewrite.hpp"

using namespace qskein;

namespace {

// Brute-force crossing test: walk the circle and check that the endpoints
// of the two chords alternate (1,2,1,2 or 2,1,2,1).
bool crosses_brute(const chord& c1, const chord& c2, int n) {
    if (c1.has(c2.a) || c1.has(c2.b)) return false;
    std::vector<int> pattern;
    for (int v = 1; v <= n; ++v) {
        if (c1.has(v)) pattern.push_back(1);
        if (c2.has(v)) pattern.push_back(2);
    }
    return pattern.size() == 4 && pattern[0] != pattern[1] && pattern[0] == pattern[2];
}

}  // namespace

TEST_CASE("cyclic_interval") {
    CHECK(cyclic_interval(2, 5, 5) == std::vector<int>{3, 4});
    CHECK(cyclic_interval(5, 2, 5) == std::vector<int>{1});
    CHECK(cyclic_interval(3, 3, 5) == std::vector<int>{4, 5, 1, 2});
    CHECK(cyclic_interval(1, 2, 2).empty());
    CHECK_THROWS_AS(cyclic_interval(0, 2, 5), std::invalid_argument);
}

TEST_CASE("crosses basics") {
    CHECK(crosses(chord{1, 3}, chord{2, 4}, 4));
    CHECK_FALSE(crosses(chord{1, 2}, chord{3, 4}, 4));
    CHECK_FALSE(crosses(chord{1, 2}, chord{2, 3}, 4));
}

TEST_CASE("crosses agrees with brute force and is symmetric, exhaustively") {
    for (int n = 2; n <= 9; ++n) {
        const auto cs = all_chords(n);
        for (const chord& c1 : cs)
            for (const chord& c2 : cs) {
                CAPTURE(n, c1.a, c1.b, c2.a, c2.b);
                CHECK(crosses(c1, c2, n) == crosses_brute(c1, c2, n));
                CHECK(crosses(c1, c2, n) == crosses(c2, c1, n));
            }
    }
}

TEST_CASE("classify_pair is total and exhaustive") {
    for (int n = 2; n <= 9; ++n) {
        const auto cs = all_chords(n);
        for (const chord& c1 : cs)
            for (const chord& c2 : cs) {
                const pair_class pc = classify_pair(c1, c2, n);
                if (c1 == c2) {
                    CHECK(std::holds_alternative<pair_identical>(pc));
                } else if (crosses(c1, c2, n)) {
                    REQUIRE(std::holds_alternative<pair_crossing>(pc));
                    const auto& x = std::get<pair_crossing>(pc);
                    // labels clockwise cyclic with {i,k} = c1, {j,l} = c2
                    CHECK(is_cw_cyclic(x.i, x.j, x.k));
                    CHECK(is_cw_cyclic(x.j, x.k, x.l));
                    CHECK(chord{std::min(x.i, x.k), std::max(x.i, x.k)} == c1);
                    CHECK(chord{std::min(x.j, x.l), std::max(x.j, x.l)} == c2);
                    CHECK(x.i == c1.a);
                } else if (c1.has(c2.a) || c1.has(c2.b)) {
                    CHECK(std::holds_alternative<pair_shared>(pc));
                } else {
                    CHECK(std::holds_alternative<pair_disjoint>(pc));
                }
                // n = 3 admits no 4-subsets, hence no crossings
                if (n == 3) CHECK_FALSE(std::holds_alternative<pair_crossing>(pc));
            }
    }
}

TEST_CASE("classify_pair named examples") {
    SECTION("shared endpoint with clockwise triple") {
        const pair_class pc = classify_pair(chord{2, 3}, chord{1, 2}, 3);
        REQUIRE(std::holds_alternative<pair_shared>(pc));
        const auto& sh = std::get<pair_shared>(pc);
        CHECK(sh.shared == 2);
        CHECK(sh.cw);  // (1, 2, 3) is clockwise cyclic
    }
    SECTION("identical") {
        CHECK(std::holds_alternative<pair_identical>(classify_pair(chord{1, 3}, chord{1, 3}, 4)));
    }
    SECTION("crossing with labels from brute force") {
        const pair_class pc = classify_pair(chord{2, 5}, chord{3, 7}, 8);
        REQUIRE(std::holds_alternative<pair_crossing>(pc));
        const auto& x = std::get<pair_crossing>(pc);
        CHECK(x.i == 2);
        CHECK(x.j == 3);
        CHECK(x.k == 5);
        CHECK(x.l == 7);
    }
}

TEST_CASE("canonical Ptolemy labels") {
    auto as_tuple = [](const pair_crossing& x) { return std::array<int, 4>{x.i, x.j, x.k, x.l}; };
    CHECK(as_tuple(canonical_ptolemy_labels(chord{1, 3}, chord{2, 4}, 4)) ==
          std::array<int, 4>{1, 2, 3, 4});
    CHECK(as_tuple(canonical_ptolemy_labels(chord{2, 4}, chord{1, 3}, 4)) ==
          std::array<int, 4>{2, 3, 4, 1});
    CHECK(as_tuple(canonical_ptolemy_labels(chord{2, 5}, chord{3, 7}, 8)) ==
          std::array<int, 4>{2, 3, 5, 7});
    CHECK_THROWS_AS(canonical_ptolemy_labels(chord{1, 2}, chord{3, 4}, 4), std::invalid_argument);
}
