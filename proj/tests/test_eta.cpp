#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicrank/eta.hpp"
#include "oracles.hpp"

using namespace bicrank;

namespace {

PowerSeries from_longs(const std::vector<long>& v) {
    std::vector<Int> c(v.begin(), v.end());
    return PowerSeries(std::move(c));
}

} // namespace

TEST_CASE("pochhammer basic expansions") {
    SUBCASE("(q;q) to order 5") {
        CHECK(pochhammer(1, 1, 1, 5) == from_longs({1, -1, -1, 0, 0, 1}));
    }
    SUBCASE("1/(q;q)^2 counts 2-colored partitions") {
        const PowerSeries p2 = pochhammer(1, 1, -2, 4);
        CHECK(p2 == from_longs({1, 2, 5, 10, 20}));
        for (long n = 0; n <= 4; ++n)
            CHECK(p2[n] == oracles::enumerate_colored_partitions(n));
    }
    SUBCASE("factor starting above the order") {
        CHECK(pochhammer(3, 7, 1, 2) == PowerSeries::one(2));
    }
    SUBCASE("zero exponent") {
        CHECK(pochhammer(2, 5, 0, 6) == PowerSeries::one(6));
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(pochhammer(0, 1, 1, 3), std::invalid_argument);
        CHECK_THROWS_AS(pochhammer(3, 2, 1, 3), std::invalid_argument);
        CHECK_THROWS_AS(pochhammer(1, 1, 1, -1), std::invalid_argument);
    }
}

TEST_CASE("pentagonal fast path matches the naive product") {
    for (long b : {1L, 2L, 3L}) {
        const PowerSeries fast = pochhammer(b, b, 1, 500);
        const auto naive = oracles::naive_pochhammer(b, b, 500);
        for (long n = 0; n <= 500; ++n) CHECK(fast[n] == naive[n]);
    }
    SUBCASE("support is exactly the generalized pentagonal numbers, signs +-1") {
        const PowerSeries f = pochhammer(1, 1, 1, 500);
        for (long n = 0; n <= 500; ++n)
            CHECK((f[n] == 0 || f[n] == 1 || f[n] == -1));
    }
}

TEST_CASE("1/(q;q) against the partition-number oracle to 2000") {
    const PowerSeries inv = pochhammer(1, 1, -1, 2000);
    const auto p = oracles::partition_numbers(2000);
    for (long n = 0; n <= 2000; ++n) CHECK(inv[n] == p[n]);
}

TEST_CASE("negated-argument factors") {
    // (-q;q)_inf = 1/(q;q^2)_inf: partitions into distinct parts vs odd parts.
    const PowerSeries dist = pochhammer(1, 1, 1, 60, true);
    const PowerSeries odd = invert(pochhammer(1, 2, 1, 60));
    CHECK(dist == odd);
}

TEST_CASE("eta_quotient") {
    SUBCASE("(q;q)^4/(q^3;q^3)^2, the mod-3 difference") {
        const PowerSeries s = eta_quotient({{{1, 1, 4}, {3, 3, -2}}}, 5);
        CHECK(s == from_longs({1, -4, 2, 10, -13, 0}));
    }
    SUBCASE("(q;q)^4/((q^2;q^2)(q^4;q^4)), the mod-4 difference") {
        const PowerSeries s = eta_quotient({{{1, 1, 4}, {2, 2, -1}, {4, 4, -1}}}, 4);
        CHECK(s == from_longs({1, -4, 3, 4, 0}));
    }
    SUBCASE("empty spec") {
        CHECK(eta_quotient({}, 3) == PowerSeries::one(3));
    }
    SUBCASE("pairs of partitions into distinct odd parts") {
        const PowerSeries s = alternate(eta_quotient({{{1, 2, 2}}}, 4));
        for (long n = 0; n <= 4; ++n)
            CHECK(s[n] == oracles::enumerate_distinct_odd_pairs(n));
    }
}

TEST_CASE("lambert_P") {
    const PowerSeries p = lambert_P(12);
    CHECK(p[0] == 1);
    CHECK(p[1] == 5);  // 6 from the Lambert term, -1 from (q;q)
}

TEST_CASE("cubic theta lattice sum") {
    // Recover the lattice factor as cubic_theta/(q;q) and compare it
    // against a literal count of (m,n) with m^2+mn+n^2 = e.
    const long order = 20;
    const PowerSeries lattice =
        cubic_theta(order) * invert(pochhammer(1, 1, 1, order));
    CHECK(lattice[0] == 1);
    CHECK(lattice[1] == 6);
    for (long e = 0; e <= order; ++e) {
        long count = 0;
        for (long m = -order; m <= order; ++m)
            for (long n = -order; n <= order; ++n)
                if (m * m + m * n + n * n == e) ++count;
        CHECK(lattice[e] == count);
    }
}

TEST_CASE("both P(q) forms agree to order 300") {
    CHECK(lambert_P(300) == cubic_theta(300));
}

TEST_CASE("gauss theta") {
    const PowerSeries g = gauss_theta(12);
    for (long n = 0; n <= 12; ++n) {
        const bool oblong = n == 0 || n == 2 || n == 6 || n == 12;
        CHECK(g[n] == (oblong ? 1 : 0));
    }
    CHECK(gauss_theta(1) == PowerSeries(std::vector<Int>{1, 0}));

    SUBCASE("Jacobi triple product form (q^4;q^4)^2/(q^2;q^2) to 300") {
        CHECK(gauss_theta(300) == eta_quotient({{{4, 4, 2}, {2, 2, -1}}}, 300));
    }
}
