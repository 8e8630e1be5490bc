#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwalk/exact.hpp"
#include "gwalk/errors.hpp"

#include <cmath>
#include <random>

using namespace gwalk;

TEST_CASE("radical squares to the radicand") {
    const ExtScalar root2(Rational(0), Rational(1), 2);
    const ExtScalar sq = root2 * root2;
    CHECK(sq.rat() == Rational(2));
    CHECK(sq.irr() == Rational(0));
}

TEST_CASE("additive inverse cancels") {
    const ExtScalar one = ExtScalar::rational(Rational(1), 2);
    const ExtScalar minus_one = ExtScalar::rational(Rational(-1), 2);
    CHECK((one + minus_one).is_zero());
}

TEST_CASE("coin row norm at k=3 is exactly one") {
    // (2/3 * sqrt(2))^2 + (1/3)^2, checked against plain rational
    // arithmetic.
    const ExtScalar diag(Rational(0), Rational(2, 3), 2);
    const ExtScalar refl = ExtScalar::rational(Rational(1, 3), 2);
    const ExtScalar total = diag * diag + refl * refl;
    const Rational expected = Rational(2, 3) * Rational(2, 3) * 2 + Rational(1, 9);
    REQUIRE(expected == Rational(1));
    CHECK(total == ExtScalar::rational(expected, 2));
}

TEST_CASE("perfect-square radicand folds into the rational part") {
    const ExtScalar a(Rational(1, 2), Rational(3), 1);  // 1/2 + 3*sqrt(1)
    CHECK(a.rat() == Rational(7, 2));
    CHECK(a.irr() == Rational(0));
    const ExtScalar b(Rational(0), Rational(5), 9);  // 5*sqrt(9) = 15
    CHECK(b.rat() == Rational(15));
}

TEST_CASE("mismatched radicands are a usage error") {
    const ExtScalar a(Rational(1), Rational(1), 2);
    const ExtScalar b(Rational(1), Rational(1), 3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("exact sign") {
    CHECK(ExtScalar(Rational(0), Rational(1), 2).sign() == 1);
    CHECK(ExtScalar(Rational(-1, 3), Rational(0), 2).sign() == -1);
    // 2 - 3*sqrt(2): 4 < 18 forces negativity.
    CHECK(ExtScalar(Rational(2), Rational(-3), 2).sign() == -1);
    // 3 - 2*sqrt(2) > 0: 9 > 8.
    CHECK(ExtScalar(Rational(3), Rational(-2), 2).sign() == 1);
    CHECK(ExtScalar(Rational(-3), Rational(2), 2).sign() == -1);
    CHECK(ExtScalar().sign() == 0);
    CHECK(ExtScalar(Rational(0), Rational(0), 19).sign() == 0);
}

TEST_CASE("sign is zero only for the zero element") {
    const ExtScalar nonzero(Rational(0), Rational(1, 1000000), 19);
    CHECK(nonzero.sign() == 1);
    CHECK(ExtScalar(Rational(0), Rational(0), 19).sign() == 0);
}

TEST_CASE("sign respects multiplication on randomized inputs") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 12);
    const std::uint64_t radicands[] = {2, 3, 5, 19};
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t rad = radicands[trial % 4];
        const ExtScalar a(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), rad);
        const ExtScalar b(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), rad);
        CHECK((a * b).sign() == a.sign() * b.sign());
        const double approx = a.to_double();
        if (std::abs(approx) > 1e-9)
            CHECK((approx > 0 ? 1 : -1) == a.sign());
    }
}

TEST_CASE("rational_from_string handles integers, fractions and decimals") {
    CHECK(rational_from_string("123") == Rational(123));
    CHECK(rational_from_string("-4/7") == Rational(-4, 7));
    CHECK(rational_from_string("2.75") == Rational(11, 4));
    CHECK(rational_from_string("-0.5") == Rational(-1, 2));
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("abc"), ParseError);
}
