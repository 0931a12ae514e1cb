#include <doctest.h>

#include <set>

#include "spreadlab/rational.hpp"
#include "spreadlab/rng.hpp"

using namespace spreadlab;

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(7, 2) > Rational(10, 3));
    CHECK(-Rational(1, 2) < Rational(0));
    CHECK(Rational(3, 1).str() == "3/1");
}

TEST_CASE("rational parsing") {
    CHECK(Rational::from_string("3/2") == Rational(3, 2));
    CHECK(Rational::from_string("0.45") == Rational(9, 20));
    CHECK(Rational::from_string("2") == Rational(2));
    CHECK(Rational::from_string("-0.5") == Rational(-1, 2));
    CHECK(Rational::from_string("1/2") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational ceil and floor") {
    CHECK(rational_ceil(Rational(7, 2)) == Rational(4));
    CHECK(rational_ceil(Rational(-7, 2)) == Rational(-3));
    CHECK(rational_ceil(Rational(4)) == Rational(4));
    CHECK(rational_floor(Rational(7, 2)) == Rational(3));
    CHECK(rational_floor(Rational(-7, 2)) == Rational(-4));
}

TEST_CASE("rational additions accumulate exactly") {
    Rational sum(0);
    for (int i = 0; i < 40320; ++i) sum += Rational(1, 40320);
    CHECK(sum == Rational(1));
}

TEST_CASE("rational overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("keyed uniforms are deterministic and in range") {
    for (std::uint64_t c = 0; c < 1000; ++c) {
        double u = keyed_uniform(42, c);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(u == keyed_uniform(42, c));
    }
    CHECK(keyed_uniform(42, 7) != keyed_uniform(43, 7));
}

TEST_CASE("derive_seed separates streams") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 100; ++s)
        for (std::uint64_t i = 0; i < 10; ++i) seen.insert(derive_seed(1, s, i));
    CHECK(seen.size() == 1000);
}

TEST_CASE("SplitMix below() respects bounds and is roughly uniform") {
    SplitMix rng(7);
    int counts[5] = {0};
    for (int i = 0; i < 50000; ++i) {
        auto v = rng.below(5);
        REQUIRE(v < 5);
        ++counts[v];
    }
    for (int c : counts) {
        CHECK(c > 9000);
        CHECK(c < 11000);
    }
}
