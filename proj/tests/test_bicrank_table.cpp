#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicrank/bicrank_table.hpp"
#include "oracles.hpp"

using namespace bicrank;

TEST_CASE("small rows") {
    const BicrankTable t = BicrankTable::build(6);

    SUBCASE("row 0 is the constant 1") {
        CHECK(t.row(0).coeff(0) == 1);
        CHECK(t.row(0).trimmed().min_deg() == 0);
        CHECK(t.row(0).trimmed().max_deg() == 0);
    }
    SUBCASE("row 1 is z^-2 + z^-1 - 2 + z + z^2") {
        const LaurentPoly& r = t.row(1);
        CHECK(r.coeff(-2) == 1);
        CHECK(r.coeff(-1) == 1);
        CHECK(r.coeff(0) == -2);
        CHECK(r.coeff(1) == 1);
        CHECK(r.coeff(2) == 1);
    }
    SUBCASE("row sums are p_{-2}(n)") {
        const auto p2 = oracles::colored_partition_numbers(6);
        for (long n = 0; n <= 6; ++n) CHECK(t.row(n).sum() == p2[n]);
    }
}

TEST_CASE("symmetry and support bound") {
    const BicrankTable t = BicrankTable::build(40);
    for (long n = 0; n <= 40; ++n) {
        const LaurentPoly& r = t.row(n);
        CHECK(r.min_deg() >= -2 * n);
        CHECK(r.max_deg() <= 2 * n);
        for (long d = 0; d <= r.max_deg(); ++d) CHECK(r.coeff(d) == r.coeff(-d));
    }
}

TEST_CASE("class counts") {
    const BicrankTable t = BicrankTable::build(12);
    SUBCASE("row 1, modulus 2") {
        CHECK(t.class_count(0, 2, 1) == 0);
        CHECK(t.class_count(1, 2, 1) == 2);
    }
    SUBCASE("single class recovers p_{-2}") {
        const auto p2 = oracles::colored_partition_numbers(12);
        for (long n = 0; n <= 12; ++n) CHECK(t.class_count(0, 1, n) == p2[n]);
    }
    SUBCASE("row 0") {
        CHECK(t.class_count(0, 5, 0) == 1);
        for (long j = 1; j < 5; ++j) CHECK(t.class_count(j, 5, 0) == 0);
    }
    SUBCASE("bad arguments") {
        CHECK_THROWS_AS(t.class_count(3, 3, 1), std::invalid_argument);
        CHECK_THROWS_AS(t.class_count(0, 2, 13), std::out_of_range);
    }
}

TEST_CASE("order cap") {
    CHECK_THROWS_AS(BicrankTable::build(100, 50), std::invalid_argument);
}

TEST_CASE("folded class counts match the full table") {
    const BicrankTable t = BicrankTable::build(60);
    for (long k : {2L, 3L, 4L, 5L}) {
        const auto folded = class_counts_mod(k, 60);
        for (long n = 0; n <= 60; ++n)
            for (long j = 0; j < k; ++j)
                CHECK(folded[n][j] == t.class_count(j, k, n));
    }
}

TEST_CASE("diff_series frozen prefixes") {
    const std::vector<long> d2 = {1, -2, 1, -2, 4};
    const std::vector<long> d3 = {1, -4, 2, 10, -13, 0};
    const std::vector<long> d4 = {1, -4, 3, 4, 0};
    const PowerSeries s2 = diff_series(2, 4);
    const PowerSeries s3 = diff_series(3, 5);
    const PowerSeries s4 = diff_series(4, 4);
    for (size_t i = 0; i < d2.size(); ++i) CHECK(s2[i] == d2[i]);
    for (size_t i = 0; i < d3.size(); ++i) CHECK(s3[i] == d3[i]);
    for (size_t i = 0; i < d4.size(); ++i) CHECK(s4[i] == d4[i]);
    CHECK_THROWS_AS(diff_series(5, 4), std::invalid_argument);
}

TEST_CASE("roots-of-unity specializations against the table") {
    const BicrankTable t = BicrankTable::build(200);
    const CheckReport rep = verify_specializations(t, 200);
    CHECK(rep.pass);
    CHECK(rep.detail.empty());
}

TEST_CASE("mod-5 structure") {
    const BicrankTable t = BicrankTable::build(104);
    const CheckReport rep = verify_mod5(t, 20);
    CHECK(rep.pass);

    SUBCASE("hand values at n=0") {
        const auto p2 = oracles::colored_partition_numbers(7);
        CHECK(p2[2] == 5);
        CHECK(p2[4] == 20);
        CHECK(p2[7] == 110);
        for (long j = 0; j < 5; ++j) {
            CHECK(t.class_count(j, 5, 2) == 1);
            CHECK(t.class_count(j, 5, 4) == 4);
        }
    }
    SUBCASE("bound exceeding the table order is rejected") {
        CHECK_THROWS_AS(verify_mod5(t, 21), std::invalid_argument);
    }
}

TEST_CASE("sign reports") {
    SUBCASE("mod 2: strict alternation, no exceptions") {
        const SignReport r = sign_report(2, 600);
        CHECK(r.exceptions.empty());
    }
    SUBCASE("mod 3: only n=5, a zero") {
        const SignReport r = sign_report(3, 600);
        REQUIRE(r.exceptions.size() == 1);
        CHECK(r.exceptions[0].first == 5);
        CHECK(r.exceptions[0].second == 0);
    }
    SUBCASE("mod 4: n=4 and n=56 vanish, n=20 lands on the wrong side") {
        const SignReport r = sign_report(4, 600);
        REQUIRE(r.exceptions.size() == 3);
        CHECK(r.exceptions[0].first == 4);
        CHECK(r.exceptions[0].second == 0);
        CHECK(r.exceptions[1].first == 20);
        CHECK(r.exceptions[1].second == 1);
        CHECK(r.exceptions[2].first == 56);
        CHECK(r.exceptions[2].second == 0);
        CHECK(diff_series(4, 20)[20] == 2);
    }
    SUBCASE("expected_sign table") {
        CHECK(expected_sign(2, 6) == 1);
        CHECK(expected_sign(2, 7) == -1);
        CHECK(expected_sign(3, 7) == -1);
        CHECK(expected_sign(3, 8) == 1);
        CHECK(expected_sign(4, 11) == 1);   // 11 = 3 (mod 8)
        CHECK(expected_sign(4, 12) == -1);  // 12 = 4 (mod 8)
        CHECK_THROWS_AS(expected_sign(5, 1), std::invalid_argument);
    }
}

TEST_CASE("alternated mod-2 difference is strictly positive") {
    const PowerSeries s = alternate(diff_series(2, 1500));
    for (long n = 0; n <= 1500; ++n) CHECK(s[n] > 0);
}

TEST_CASE("odd-index mod-4 congruence") {
    const CheckReport rep = mod4_odd_congruence(2000);
    CHECK(rep.pass);
    const PowerSeries d4 = diff_series(4, 3);
    CHECK(d4[1] == -4);
    CHECK(d4[3] == 4);
}
