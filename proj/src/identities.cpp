#include "bicrank/identities.hpp"

#include "bicrank/bicrank_table.hpp"
#include "bicrank/eta.hpp"

#include <stdexcept>

namespace bicrank {

namespace {

PowerSeries eq(std::initializer_list<PochFactor> f, long n) {
    return eta_quotient(EtaQuotientSpec{f}, n);
}

// Arithmetic-progression slice of a difference series: coefficient i is
// the (m*i + r)-th coefficient of diff_series(k).
PowerSeries diff_slice(int k, long r, long m, long n) {
    return dissect(diff_series(k, m * n + r), r, m);
}

std::vector<IdentityCase> make_catalog() {
    std::vector<IdentityCase> cat;

    // (q;q) = (q^12,q^15,q^27;q^27) - q (q^6,q^21,q^27;q^27) - q^2 (q^3,q^24,q^27;q^27)
    cat.push_back({"f1-3dissect", IdentityKind::Equality,
        [](long n) { return pochhammer(1, 1, 1, n); },
        [](long n) {
            return eq({{12, 27, 1}, {15, 27, 1}, {27, 27, 1}}, n) -
                   shifted(eq({{6, 27, 1}, {21, 27, 1}, {27, 27, 1}}, n), 1) -
                   shifted(eq({{3, 27, 1}, {24, 27, 1}, {27, 27, 1}}, n), 2);
        }});

    // (q;q)^3 = P(q^3) - 3q (q^9;q^9)^3
    cat.push_back({"f3-3dissect", IdentityKind::Equality,
        [](long n) { return eq({{1, 1, 3}}, n); },
        [](long n) {
            return compose_power(lambert_P(n), 3) -
                   3 * shifted(eq({{9, 9, 3}}, n), 1);
        }});

    // Lambert and lattice-sum forms of P(q).
    cat.push_back({"P-two-forms", IdentityKind::Equality,
        [](long n) { return lambert_P(n); },
        [](long n) { return cubic_theta(n); }});

    // (q;q)^4 = (q^4)^10/((q^2)^2 (q^8)^4) - 4q (q^2)^2 (q^8)^4/(q^4)^2
    cat.push_back({"entry25", IdentityKind::Equality,
        [](long n) { return eq({{1, 1, 4}}, n); },
        [](long n) {
            return eq({{4, 4, 10}, {2, 2, -2}, {8, 8, -4}}, n) -
                   4 * shifted(eq({{2, 2, 2}, {8, 8, 4}, {4, 4, -2}}, n), 1);
        }});

    // 1/(q;q) = (q^16;q^16)/(q^2;q^2)^2 ((-q^6,-q^10;q^16) + q(-q^2,-q^14;q^16))
    cat.push_back({"two-dissect", IdentityKind::Equality,
        [](long n) { return eq({{1, 1, -1}}, n); },
        [](long n) {
            const PowerSeries front = eq({{16, 16, 1}, {2, 2, -2}}, n);
            const PowerSeries even = eq({{6, 16, 1, true}, {10, 16, 1, true}}, n);
            const PowerSeries odd = eq({{2, 16, 1, true}, {14, 16, 1, true}}, n);
            return front * (even + shifted(odd, 1));
        }});

    // 3n-slice of the mod-3 difference:
    //   ((q^4,q^5,q^9;q^9) P(q) + 3q (q,q^8,q^9;q^9)(q^3;q^3)^3) / (q;q)^2
    cat.push_back({"gf-3n", IdentityKind::Equality,
        [](long n) { return diff_slice(3, 0, 3, n); },
        [](long n) {
            const PowerSeries num =
                eq({{4, 9, 1}, {5, 9, 1}, {9, 9, 1}}, n) * lambert_P(n) +
                3 * shifted(eq({{1, 9, 1}, {8, 9, 1}, {9, 9, 1}, {3, 3, 3}}, n), 1);
            return num * eq({{1, 1, -2}}, n);
        }});

    // 3n+1 slice: -(3 (q^4,q^5,q^9;q^9)(q^3;q^3)^3 + (q^2,q^7,q^9;q^9) P(q)) / (q;q)^2
    cat.push_back({"gf-3n1", IdentityKind::Equality,
        [](long n) { return diff_slice(3, 1, 3, n); },
        [](long n) {
            const PowerSeries num =
                3 * eq({{4, 9, 1}, {5, 9, 1}, {9, 9, 1}, {3, 3, 3}}, n) +
                eq({{2, 9, 1}, {7, 9, 1}, {9, 9, 1}}, n) * lambert_P(n);
            return -(num * eq({{1, 1, -2}}, n));
        }});

    // 3n+2 slice: (q^9;q^9)/(q;q)^2 (3 (q^2,q^7;q^9)(q^3;q^3)^3 - (q,q^8;q^9) P(q))
    cat.push_back({"gf-3n2", IdentityKind::Equality,
        [](long n) { return diff_slice(3, 2, 3, n); },
        [](long n) {
            const PowerSeries inner =
                3 * eq({{2, 9, 1}, {7, 9, 1}, {3, 3, 3}}, n) -
                eq({{1, 9, 1}, {8, 9, 1}}, n) * lambert_P(n);
            return eq({{9, 9, 1}, {1, 1, -2}}, n) * inner;
        }});

    // Mod-4 difference split:
    //   (q^4)^9/((q^2)^3 (q^8)^4) - 4q (q^2)(q^8)^4/(q^4)^3
    cat.push_back({"add-M4", IdentityKind::Equality,
        [](long n) { return diff_series(4, n); },
        [](long n) {
            return eq({{4, 4, 9}, {2, 2, -3}, {8, 8, -4}}, n) -
                   4 * shifted(eq({{2, 2, 1}, {8, 8, 4}, {4, 4, -3}}, n), 1);
        }});

    // Even part: (q^2)^9 / ((q)^3 (q^4)^4)
    cat.push_back({"add-M04-2n", IdentityKind::Equality,
        [](long n) { return diff_slice(4, 0, 2, n); },
        [](long n) { return eq({{2, 2, 9}, {1, 1, -3}, {4, 4, -4}}, n); }});

    // 4n slice with q -> -q.
    cat.push_back({"gf-4n", IdentityKind::Equality,
        [](long n) { return alternate(diff_slice(4, 0, 4, n)); },
        [](long n) {
            const PowerSeries front = eq({{2, 2, 2}, {8, 8, 1}, {1, 1, -2}, {4, 4, -2}}, n);
            const PowerSeries inner =
                eq({{3, 8, 1}, {5, 8, 1}, {4, 4, 5}, {8, 8, -2}}, n) -
                2 * shifted(eq({{1, 8, 1}, {7, 8, 1}, {2, 2, 2}, {8, 8, 2}, {4, 4, -1}}, n), 1);
            return front * inner;
        }});

    // 4n+2 slice with q -> -q.
    cat.push_back({"gf-4n2", IdentityKind::Equality,
        [](long n) { return alternate(diff_slice(4, 2, 4, n)); },
        [](long n) {
            const PowerSeries front = eq({{2, 2, 2}, {8, 8, 1}, {1, 1, -2}, {4, 4, -2}}, n);
            const PowerSeries inner =
                2 * eq({{3, 8, 1}, {5, 8, 1}, {2, 2, 2}, {8, 8, 2}, {4, 4, -1}}, n) +
                eq({{1, 8, 1}, {7, 8, 1}, {4, 4, 5}, {8, 8, -2}}, n);
            return front * inner;
        }});

    // (q^3;q^3)^3/(q;q): 3-core partitions, nonnegative coefficients.
    cat.push_back({"3core-nonneg", IdentityKind::NonNegative,
        [](long n) { return eq({{3, 3, 3}, {1, 1, -1}}, n); }, nullptr});

    // Strict signs of the 3n and 3n+1 slices.
    cat.push_back({"gf3n-positive", IdentityKind::AllPositive,
        [](long n) { return diff_slice(3, 0, 3, n); }, nullptr});
    cat.push_back({"gf3n1-negative", IdentityKind::AllNegative,
        [](long n) { return diff_slice(3, 1, 3, n); }, nullptr});

    // Odd part of the mod-4 difference after q -> -q: all negative.
    cat.push_back({"g-neg", IdentityKind::AllNegative,
        [](long n) { return alternate(diff_slice(4, 1, 2, n)); }, nullptr});

    // Open sign patterns; surveyed, never asserted.
    cat.push_back({"sign-4n", IdentityKind::SignSurvey,
        [](long n) { return alternate(diff_slice(4, 0, 4, n)); }, nullptr});
    cat.push_back({"sign-4n2", IdentityKind::SignSurvey,
        [](long n) { return alternate(diff_slice(4, 2, 4, n)); }, nullptr});

    return cat;
}

} // namespace

const std::vector<IdentityCase>& identity_catalog() {
    static const std::vector<IdentityCase> cat = make_catalog();
    return cat;
}

const IdentityCase& find_identity(const std::string& id) {
    for (const IdentityCase& c : identity_catalog())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown identity id: " + id);
}

IdentityVerdict verify_identity(const std::string& id, long order) {
    const IdentityCase& c = find_identity(id);
    if (c.kind != IdentityKind::Equality)
        throw std::invalid_argument("verify_identity: '" + id + "' is not an equality entry");
    IdentityVerdict v;
    v.id = id;
    v.order = order;
    const PowerSeries lhs = c.lhs(order);
    const PowerSeries rhs = c.rhs(order);
    if (lhs.order() < order || rhs.order() < order)
        throw std::logic_error("identity builder returned a short series");
    if (auto miss = first_mismatch(truncated(lhs, order), truncated(rhs, order))) {
        v.pass = false;
        v.first_fail = *miss;
        v.lhs_at_fail = lhs[*miss];
        v.rhs_at_fail = rhs[*miss];
    }
    return v;
}

SignSurveyReport positivity_report(const std::string& id, long order) {
    const IdentityCase& c = find_identity(id);
    if (c.kind == IdentityKind::Equality)
        throw std::invalid_argument("positivity_report: '" + id + "' is an equality entry");
    SignSurveyReport rep;
    rep.id = id;
    rep.order = order;
    rep.asserted = c.kind != IdentityKind::SignSurvey;
    const PowerSeries s = c.lhs(order);
    for (long i = 0; i <= order; ++i) {
        const int sg = sgn(s[i]);
        if (sg > 0) ++rep.positive;
        else if (sg < 0) ++rep.negative;
        else ++rep.zero;
        if (!rep.asserted) continue;
        const bool ok = (c.kind == IdentityKind::NonNegative && sg >= 0) ||
                        (c.kind == IdentityKind::AllPositive && sg > 0) ||
                        (c.kind == IdentityKind::AllNegative && sg < 0);
        if (!ok && rep.pass) {
            rep.pass = false;
            rep.first_fail = i;
        }
    }
    return rep;
}

} // namespace bicrank
