#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "gentle/linalg.hpp"
#include "gentle/rational.hpp"

using gentle::Matrix;
using gentle::Rational;

TEST_CASE("normal form") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, -4).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    const Rational a(1, 3), b(-5, 6);
    CHECK(a + b == Rational(-1, 2));
    CHECK(a - b == Rational(7, 6));
    CHECK(a * b == Rational(-5, 18));
    CHECK(a / b == Rational(-2, 5));
    CHECK(b < a);
    CHECK(-b == Rational(5, 6));
}

TEST_CASE("string round trip") {
    for (const auto& s : {"0", "-3", "7/2", "-11/13"}) CHECK(Rational::parse(s).str() == s);
    CHECK(Rational::parse("4/-6") == Rational(-2, 3));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("overflow is reported, not wrapped") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    // large intermediate products that reduce back into range are fine
    const Rational x(std::int64_t{1} << 40, 3);
    CHECK(x * Rational(3, std::int64_t{1} << 40) == Rational(1));
}

TEST_CASE("field axioms against double arithmetic") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int it = 0; it < 500; ++it) {
        const int p = d(rng), q = std::abs(d(rng)) + 1, r = d(rng), s = std::abs(d(rng)) + 1;
        const Rational a(p, q), b(r, s);
        CHECK((a + b) - b == a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        const double exact = static_cast<double>(p) / q + static_cast<double>(r) / s;
        const Rational sum = a + b;
        CHECK(static_cast<double>(sum.num()) / static_cast<double>(sum.den()) == doctest::Approx(exact));
    }
}

TEST_CASE("linear algebra basics") {
    Matrix m(3, 3);
    // rank 2: third row is the sum of the first two
    const int vals[3][3] = {{1, 2, 3}, {0, 1, 4}, {1, 3, 7}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
    CHECK(gentle::rank(m) == 2);
    CHECK(gentle::determinant(m) == Rational(0));
    CHECK_FALSE(gentle::invertible_mod_prime(m));
    auto ns = gentle::nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(gentle::is_zero_vector(m.apply(ns[0])));
    m(2, 2) = 8;
    CHECK(gentle::determinant(m) == Rational(1));
    CHECK(gentle::invertible_mod_prime(m));
    auto x = gentle::solve(m, {1, 1, 1});
    REQUIRE(x);
    CHECK(m.apply(*x) == gentle::Vector{1, 1, 1});
}
