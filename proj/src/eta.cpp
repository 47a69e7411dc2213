#include "bicrank/eta.hpp"

#include <cmath>
#include <cstdlib>

namespace bicrank {

namespace {

// Euler product (q^b; q^b)_inf via the pentagonal number theorem:
// support on b*k(3k-1)/2 and b*k(3k+1)/2 with sign (-1)^k.
PowerSeries pentagonal(long b, long order) {
    PowerSeries s(order);
    s.set_coeff(0, 1);
    for (long k = 1;; ++k) {
        const long g1 = k * (3 * k - 1) / 2;
        if (b * g1 > order) break;
        const long sign = (k & 1) ? -1 : 1;
        s.set_coeff(b * g1, sign);
        const long g2 = k * (3 * k + 1) / 2;
        if (b * g2 <= order) s.set_coeff(b * g2, sign);
    }
    return s;
}

// In-place multiply by (1 - sgn*q^p).
void fold_binomial(std::vector<Int>& c, long p, int sgn) {
    const long n = static_cast<long>(c.size()) - 1;
    for (long i = n; i >= p; --i) {
        if (sgn > 0)
            c[static_cast<size_t>(i)] -= c[static_cast<size_t>(i - p)];
        else
            c[static_cast<size_t>(i)] += c[static_cast<size_t>(i - p)];
    }
}

} // namespace

PowerSeries pochhammer(long a, long b, long e, long order, bool negated) {
    if (a < 1 || a > b)
        throw std::invalid_argument("pochhammer: need 1 <= offset <= modulus");
    if (order < 0) throw std::invalid_argument("pochhammer: negative order");
    if (e == 0) return PowerSeries::one(order);

    PowerSeries base(0);
    if (a == b && !negated) {
        base = pentagonal(b, order);
    } else {
        std::vector<Int> c(static_cast<size_t>(order) + 1);
        c[0] = 1;
        for (long p = a; p <= order; p += b) fold_binomial(c, p, negated ? -1 : 1);
        base = PowerSeries(std::move(c));
    }
    PowerSeries pos = power(base, static_cast<unsigned long>(std::labs(e)));
    return e > 0 ? pos : invert(pos);
}

PowerSeries eta_quotient(const EtaQuotientSpec& spec, long order) {
    PowerSeries acc = PowerSeries::one(order);
    for (const PochFactor& f : spec.factors)
        acc = acc * pochhammer(f.offset, f.modulus, f.exponent, order, f.negated);
    return acc;
}

PowerSeries lambert_P(long order) {
    // 1 + 6*sum over t = 1,2 (mod 3) of +-q^t/(1-q^t), each geometric
    // series expanded exactly.
    PowerSeries lam(order);
    lam.set_coeff(0, 1);
    for (long t = 1; t <= order; ++t) {
        const long rem = t % 3;
        if (rem == 0) continue;
        const long w = (rem == 1) ? 6 : -6;
        for (long j = t; j <= order; j += t)
            lam.set_coeff(j, lam[j] + w);
    }
    return pochhammer(1, 1, 1, order) * lam;
}

PowerSeries cubic_theta(long order) {
    PowerSeries lattice(order);
    // m^2+mn+n^2 >= 3*max(m,n)^2/4, so |m|,|n| <= sqrt(4N/3) suffices.
    const long lim = static_cast<long>(std::sqrt(4.0 * static_cast<double>(order) / 3.0)) + 2;
    for (long m = -lim; m <= lim; ++m)
        for (long n = -lim; n <= lim; ++n) {
            const long ex = m * m + m * n + n * n;
            if (ex <= order) lattice.set_coeff(ex, lattice[ex] + 1);
        }
    return pochhammer(1, 1, 1, order) * lattice;
}

PowerSeries gauss_theta(long order) {
    PowerSeries s(order);
    for (long m = 0; m * (m + 1) <= order; ++m) s.set_coeff(m * (m + 1), 1);
    return s;
}

PowerSeries p2_series(long order) { return pochhammer(1, 1, -2, order); }

} // namespace bicrank
