#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qskein/curves.hpp"
#include "qskein/rewrite.hpp"
#include "qskein/verify.hpp"

using namespace qskein;

TEST_CASE("stacking product on words") {
    const int n = 4;
    const auto b12 = algebra_elem::generator(n, chord{1, 2});
    const auto b34 = algebra_elem::generator(n, chord{3, 4});
    const auto prod = b12 * b34;
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms().begin()->first == word{chord{1, 2}, chord{3, 4}});
    CHECK(prod.terms().begin()->second == ring_elem::one(n));
}

TEST_CASE("scalars multiply through") {
    const int n = 3;
    const auto b12 = algebra_elem::generator(n, chord{1, 2});
    const auto b23 = algebra_elem::generator(n, chord{2, 3});
    const auto lhs = (ring_elem::q_half(n, 1) * b12) * (ring_elem::v(n, 3) * b23);
    algebra_elem expect(n);
    expect.add_term(word{chord{1, 2}, chord{2, 3}},
                    ring_elem::q_half(n, 1) * ring_elem::v(n, 3));
    CHECK(lhs == expect);
    CHECK(algebra_elem::one(n) * lhs == lhs);
    CHECK_THROWS_AS(algebra_elem::one(2) * algebra_elem::one(3), std::invalid_argument);
}

TEST_CASE("linear_combine") {
    const int n = 4;
    const auto x = algebra_elem::generator(n, chord{1, 3}) * algebra_elem::generator(n, chord{2, 4});
    SECTION("cancellation") {
        CHECK(linear_combine({ring_elem::one(n), -ring_elem::one(n)}, {x, x}).is_zero());
    }
    SECTION("builds the Ptolemy right-hand side") {
        const auto t1 = algebra_elem::generator(n, chord{1, 4}) * algebra_elem::generator(n, chord{2, 3});
        const auto t2 = algebra_elem::generator(n, chord{1, 2}) * algebra_elem::generator(n, chord{3, 4});
        const auto rhs =
            linear_combine({ring_elem::q_half(n, 2), ring_elem::q_half(n, -2)}, {t1, t2});
        CHECK(rhs == normalize(x));
    }
    SECTION("empty input") { CHECK(linear_combine({}, {}).is_zero()); }
    SECTION("length mismatch") {
        CHECK_THROWS_AS(linear_combine({ring_elem::one(n)}, {}), std::invalid_argument);
    }
}

TEST_CASE("bar involution on words and scalars") {
    const int n = 3;
    const auto b12 = algebra_elem::generator(n, chord{1, 2});
    const auto b23 = algebra_elem::generator(n, chord{2, 3});
    SECTION("definition") {
        const auto x = ring_elem::q_half(n, 1) * (b12 * b23);
        algebra_elem expect(n);
        expect.add_term(word{chord{2, 3}, chord{1, 2}}, ring_elem::q_half(n, -1));
        CHECK(bar(x) == expect);
    }
    SECTION("involution and anti-automorphism on random elements") {
        std::mt19937_64 rng(29u);
        for (int t = 0; t < 200; ++t) {
            const algebra_elem x = random_elem(n, 3, 4, rng);
            const algebra_elem y = random_elem(n, 3, 4, rng);
            CHECK(bar(bar(x)) == x);
            CHECK(bar(x * y) == bar(y) * bar(x));
        }
    }
    SECTION("waterdrop conjugation") {
        CHECK(bar(waterdrop(n, 1, false)) == waterdrop(n, 1, true));
        // w̄_i == q w_i + (q^{-1/2} - q^{3/2})(-q^2 - q^{-2}) v_i^{-1}
        const ring_elem rhs =
            ring_elem::q_half(n, 2) * waterdrop(n, 1, false) +
            (ring_elem::q_half(n, -1) - ring_elem::q_half(n, 3)) * trivial_loop(n) *
                ring_elem::v(n, 1, -1);
        CHECK(waterdrop(n, 1, true) == rhs);
    }
}

TEST_CASE("scalars are central after normalization") {
    std::mt19937_64 rng(31u);
    const int n = 4;
    const ring_elem c = ring_elem::q_half(n, 1) * ring_elem::v(n, 2, -1);
    for (int t = 0; t < 100; ++t) {
        const algebra_elem x = random_elem(n, 3, 4, rng);
        CHECK(normalize(c * x) == normalize(x * c));
    }
}
