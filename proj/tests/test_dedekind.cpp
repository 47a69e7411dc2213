#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicrank/dedekind.hpp"

#include <numeric>

using namespace bicrank;

TEST_CASE("sawtooth") {
    CHECK(sawtooth(Rational(1, 2)) == 0);
    CHECK(sawtooth(Rational(3)) == 0);
    CHECK(sawtooth(Rational(1, 3)) == Rational(-1, 6));
    CHECK(sawtooth(Rational(2, 3)) == Rational(1, 6));
    CHECK(sawtooth(Rational(-1, 3)) == Rational(1, 6));
    CHECK(sawtooth(Rational(7, 3)) == Rational(-1, 6));
}

TEST_CASE("dedekind sums") {
    CHECK(dedekind_sum(1, 1) == 0);
    CHECK(dedekind_sum(1, 3) == Rational(1, 18));
    CHECK(dedekind_sum(2, 3) == Rational(-1, 18));
    CHECK(dedekind_sum(1, 2) == 0);
    CHECK(dedekind_sum(1, 4) == Rational(1, 8));
    CHECK_THROWS_AS(dedekind_sum(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(dedekind_sum(1, 0), std::invalid_argument);
}

TEST_CASE("reciprocity s(d,c)+s(c,d) = -1/4 + (c/d + d/c + 1/(cd))/12") {
    for (long c = 1; c <= 60; ++c) {
        for (long d = 1; d < c; ++d) {
            if (std::gcd(d, c) != 1) continue;
            const Rational lhs = dedekind_sum(d, c) + dedekind_sum(c, d);
            const mpz_class cd = mpz_class(c) * d;
            Rational rhs = Rational(-1, 4) +
                           (Rational(c, d) + Rational(d, c) + Rational(mpz_class(1), cd)) / 12;
            rhs.canonicalize();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("rational angles") {
    CHECK(RationalAngle(Rational(5, 4)).turns() == Rational(1, 4));
    CHECK(RationalAngle(Rational(-1, 9)).turns() == Rational(8, 9));
    CHECK(RationalAngle(Rational(3)).turns() == 0);
    const RationalAngle a(Rational(3, 4)), b(Rational(1, 2));
    CHECK((a + b).turns() == Rational(1, 4));
    CHECK((a - b).turns() == Rational(1, 4));
}

TEST_CASE("omega multipliers") {
    CHECK(omega(1, 1, 3).turns() == Rational(8, 9));
    CHECK(omega(2, 1, 3).turns() == Rational(1, 9));
    CHECK(omega(1, 1, 4).turns() == Rational(3, 4));
    CHECK(omega(3, 1, 4).turns() == Rational(1, 4));
    CHECK_THROWS_AS(omega(3, 1, 3), std::invalid_argument);   // gcd(3,3) != 1
    CHECK_THROWS_AS(omega(2, 3, 4), std::invalid_argument);   // gcd(2,12) != 1
    CHECK_THROWS_AS(omega(1, 1, 5), std::invalid_argument);
}
