#pragma once
// Pochhammer and eta-quotient expansions, plus the theta-type series
// (Lambert form of P(q), the cubic theta lattice sum, the Gauss theta).

#include "bicrank/power_series.hpp"

namespace bicrank {

// One factor (q^offset; q^modulus)_inf^exponent. With `negated` set the
// argument is -q^offset, i.e. the factor is (-q^offset; q^modulus)_inf^e.
struct PochFactor {
    long offset = 1;
    long modulus = 1;
    long exponent = 1;
    bool negated = false;
};

struct EtaQuotientSpec {
    std::vector<PochFactor> factors;
};

// Expansion of (q^a; q^b)_inf^e to the given order. Requires 1 <= a <= b.
// Negative exponents go through the inverse of the positive expansion.
PowerSeries pochhammer(long a, long b, long e, long order, bool negated = false);

// Product of all factor expansions.
PowerSeries eta_quotient(const EtaQuotientSpec& spec, long order);

// (q;q)_inf * (1 + 6 sum_{n>=0} (q^{3n+1}/(1-q^{3n+1}) - q^{3n+2}/(1-q^{3n+2}))).
PowerSeries lambert_P(long order);

// (q;q)_inf * sum_{m,n in Z} q^{m^2+mn+n^2}.
PowerSeries cubic_theta(long order);

// sum_{m>=0} q^{m(m+1)}.
PowerSeries gauss_theta(long order);

// 1/(q;q)_inf^2, the 2-colored partition counting series.
PowerSeries p2_series(long order);

} // namespace bicrank
