#include "bicrank/bicrank_table.hpp"

#include <algorithm>
#include <sstream>

namespace bicrank {

namespace {

long floor_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

constexpr std::array<long, 4> kWeights = {1, -1, 2, -2};

} // namespace

LaurentPoly LaurentPoly::trimmed() const {
    long lo = min_deg_, hi = max_deg();
    while (lo < hi && coeff(lo) == 0) ++lo;
    while (hi > lo && coeff(hi) == 0) --hi;
    LaurentPoly out(lo, hi);
    for (long d = lo; d <= hi; ++d) out.at(d) = coeff(d);
    return out;
}

Int LaurentPoly::sum() const {
    Int s = 0;
    for (const Int& v : c_) s += v;
    return s;
}

BicrankTable BicrankTable::build(long order, long max_order) {
    if (order < 0) throw std::invalid_argument("BicrankTable: negative order");
    if (order > max_order)
        throw std::invalid_argument("BicrankTable: order exceeds cap of " +
                                    std::to_string(max_order));

    // Row n lives on z-degrees [-2n, 2n]; each unit of q-weight carries
    // z-weight at most 2, so the window never overflows during the fold.
    std::vector<LaurentPoly> rows;
    rows.reserve(static_cast<size_t>(order) + 1);
    const PowerSeries qq2 = pochhammer(1, 1, 2, order);
    for (long n = 0; n <= order; ++n) {
        rows.emplace_back(n == 0 ? LaurentPoly(0, 0) : LaurentPoly(-2 * n, 2 * n));
        rows.back().at(0) = qq2[n];
    }

    // Fold in 1/(1 - z^w q^j) via T[n] += z^w * T[n-j]. Weight order is
    // fixed so runs are reproducible bit-for-bit.
    for (long w : kWeights) {
        for (long j = 1; j <= order; ++j) {
            for (long n = j; n <= order; ++n) {
                const LaurentPoly& src = rows[static_cast<size_t>(n - j)];
                LaurentPoly& dst = rows[static_cast<size_t>(n)];
                for (long d = src.min_deg(); d <= src.max_deg(); ++d) {
                    const Int& v = src.coeff(d);
                    if (v != 0) dst.at(d + w) += v;
                }
            }
        }
    }
    return BicrankTable(std::move(rows));
}

const LaurentPoly& BicrankTable::row(long n) const {
    if (n < 0 || n > order()) throw std::out_of_range("BicrankTable: row index");
    return rows_[static_cast<size_t>(n)];
}

Int BicrankTable::class_count(long j, long k, long n) const {
    if (k < 1) throw std::invalid_argument("class_count: modulus must be >= 1");
    if (j < 0 || j >= k) throw std::invalid_argument("class_count: need 0 <= j < k");
    const LaurentPoly& r = row(n);
    Int s = 0;
    for (long d = r.min_deg(); d <= r.max_deg(); ++d)
        if (floor_mod(d, k) == j) s += r.coeff(d);
    return s;
}

std::vector<std::vector<Int>> class_counts_mod(long k, long order) {
    if (k < 1) throw std::invalid_argument("class_counts_mod: modulus must be >= 1");
    if (order < 0) throw std::invalid_argument("class_counts_mod: negative order");

    const PowerSeries qq2 = pochhammer(1, 1, 2, order);
    std::vector<std::vector<Int>> rows(static_cast<size_t>(order) + 1,
                                       std::vector<Int>(static_cast<size_t>(k)));
    for (long n = 0; n <= order; ++n) rows[static_cast<size_t>(n)][0] = qq2[n];

    for (long w : kWeights) {
        for (long j = 1; j <= order; ++j) {
            for (long n = j; n <= order; ++n) {
                const auto& src = rows[static_cast<size_t>(n - j)];
                auto& dst = rows[static_cast<size_t>(n)];
                for (long r = 0; r < k; ++r) {
                    if (src[static_cast<size_t>(r)] != 0)
                        dst[static_cast<size_t>(floor_mod(r + w, k))] +=
                            src[static_cast<size_t>(r)];
                }
            }
        }
    }
    return rows;
}

PowerSeries diff_series(int k, long order) {
    switch (k) {
        case 2:
            return eta_quotient({{{1, 2, 2}}}, order);
        case 3:
            return eta_quotient({{{1, 1, 4}, {3, 3, -2}}}, order);
        case 4:
            return eta_quotient({{{1, 1, 4}, {2, 2, -1}, {4, 4, -1}}}, order);
        default:
            throw std::invalid_argument("diff_series: modulus must be 2, 3 or 4");
    }
}

CheckReport verify_specializations(const BicrankTable& table, long bound) {
    if (bound > table.order())
        throw std::invalid_argument("verify_specializations: bound exceeds table order");
    CheckReport rep;
    const PowerSeries d2 = diff_series(2, bound);
    const PowerSeries d3 = diff_series(3, bound);
    const PowerSeries d4 = diff_series(4, bound);

    auto fail = [&rep](int k, long n, const std::string& msg) -> const CheckReport& {
        rep.pass = false;
        rep.fail_k = k;
        rep.fail_n = n;
        rep.detail = msg;
        return rep;
    };

    for (long n = 0; n <= bound; ++n) {
        if (table.class_count(0, 2, n) - table.class_count(1, 2, n) != d2[n])
            return fail(2, n, "mod-2 class difference != (q;q^2)^2 coefficient");
        if (table.class_count(0, 3, n) - table.class_count(1, 3, n) != d3[n])
            return fail(3, n, "mod-3 class difference != eta-quotient coefficient");
        if (table.class_count(0, 4, n) - table.class_count(2, 4, n) != d4[n])
            return fail(4, n, "mod-4 class difference != eta-quotient coefficient");
        if (table.class_count(1, 3, n) != table.class_count(2, 3, n))
            return fail(3, n, "M*(1,3,n) != M*(2,3,n)");
        if (table.class_count(1, 4, n) != table.class_count(3, 4, n))
            return fail(4, n, "M*(1,4,n) != M*(3,4,n)");
    }
    return rep;
}

CheckReport verify_mod5(const BicrankTable& table, long bound) {
    if (5 * bound + 4 > table.order())
        throw std::invalid_argument("verify_mod5: need 5*bound+4 <= table order");
    CheckReport rep;
    const PowerSeries p2 = p2_series(table.order());

    auto fail = [&rep](long n, const std::string& msg) -> const CheckReport& {
        rep.pass = false;
        rep.fail_k = 5;
        rep.fail_n = n;
        rep.detail = msg;
        return rep;
    };

    for (long n = 0; n <= bound; ++n) {
        for (long c = 2; c <= 4; ++c) {
            const long idx = 5 * n + c;
            if (!mpz_divisible_ui_p(p2[idx].get_mpz_t(), 5))
                return fail(idx, "p_{-2} not divisible by 5");
        }
        for (long c : {2L, 4L}) {
            const long idx = 5 * n + c;
            const Int want = p2[idx] / 5;
            for (long j = 0; j < 5; ++j)
                if (table.class_count(j, 5, idx) != want)
                    return fail(idx, "class count != p_{-2}/5 at residue " +
                                         std::to_string(j));
        }
        const long idx3 = 5 * n + 3;
        const Int base = table.class_count(0, 5, idx3);
        for (long j = 1; j < 5; ++j) {
            const Int gap = table.class_count(j, 5, idx3) - base;
            if (!mpz_divisible_ui_p(gap.get_mpz_t(), 5))
                return fail(idx3, "class counts not congruent mod 5");
        }
    }
    return rep;
}

int expected_sign(int k, long n) {
    switch (k) {
        case 2:
            return (n % 2 == 0) ? 1 : -1;
        case 3:
            return (n % 3 == 1) ? -1 : 1;
        case 4: {
            const long r = n % 8;
            return (r == 0 || r == 2 || r == 3 || r == 7) ? 1 : -1;
        }
        default:
            throw std::invalid_argument("expected_sign: modulus must be 2, 3 or 4");
    }
}

SignReport sign_report(int k, const PowerSeries& diff) {
    SignReport rep;
    rep.k = k;
    rep.order = diff.order();
    for (long n = 0; n <= diff.order(); ++n) {
        const int s = sgn(diff[n]);
        if (s != expected_sign(k, n)) rep.exceptions.emplace_back(n, s);
    }
    return rep;
}

SignReport sign_report(int k, long order) { return sign_report(k, diff_series(k, order)); }

CheckReport mod4_odd_congruence(long order) {
    CheckReport rep;
    const PowerSeries d4 = diff_series(4, order);
    for (long n = 1; n <= order; n += 2) {
        if (!mpz_divisible_ui_p(d4[n].get_mpz_t(), 4)) {
            rep.pass = false;
            rep.fail_k = 4;
            rep.fail_n = n;
            rep.detail = "odd-index mod-4 difference not divisible by 4";
            return rep;
        }
    }
    return rep;
}

} // namespace bicrank
