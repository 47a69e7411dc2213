#include "bicrank/asymptotics.hpp"

#include <numeric>
#include <stdexcept>

namespace bicrank {

namespace {

// sqrt(n - 1/12) from the exact rational (12n-1)/12.
Real sqrt_shifted(long n, long prec) {
    return sqrt(Real(Rational(12 * n - 1, 12), prec));
}

Real cos_turns(const Rational& turns, long prec) {
    Real t(turns, prec);
    return cos(Real(2, prec) * Real::pi(prec) * t);
}

Real sin_turns(const Rational& turns, long prec) {
    Real t(turns, prec);
    return sin(Real(2, prec) * Real::pi(prec) * t);
}

// Escalation rule shared by the verdict-producing comparisons: a margin
// is trusted only if it resolves above 2^-(prec/4) of the operand scale.
bool margin_resolved(const Real& margin, const Real& scale, long prec) {
    Real thresh = scale * Real::pow2(-(prec / 4), prec);
    return abs(margin) >= thresh;
}

constexpr long kMaxPrec = 4096;

} // namespace

Real bessel_i0(const Real& x, long prec_bits) {
    if (x.sign() < 0) throw std::domain_error("bessel_i0: negative argument");

    // Terms peak near m ~ x/2 at magnitude ~ e^x; widen the working
    // precision so the stop test stays meaningful at large arguments.
    const double xd = x.to_double();
    long wprec = std::max(prec_bits, static_cast<long>(xd / 0.6931) + 64) + 16;

    Real sum(1, wprec);
    Real term(1, wprec);
    Real x2_4 = rounded(x, wprec) * rounded(x, wprec) / Real(4, wprec);
    const Real eps = Real::pow2(-(prec_bits + 8), wprec);
    for (unsigned long m = 1;; ++m) {
        term = term * x2_4 / Real(static_cast<long>(m * m), wprec);
        sum = sum + term;
        // Valid tail bound once the term ratio x^2/(4(m+1)^2) <= 1/2:
        // the remainder is below the next term's doubled value.
        const Real ratio = x2_4 / Real(static_cast<long>((m + 1) * (m + 1)), wprec);
        if (ratio <= Real(Rational(1, 2), wprec) && term * ratio < eps * sum) break;
    }
    return rounded(sum, prec_bits);
}

MainCoeffs main_coeff(int modulus, long n, long prec_bits) {
    const long p = prec_bits;
    const Real pi = Real::pi(p);
    MainCoeffs out{Real(p), Real(p)};
    if (modulus == 3) {
        const Real scale = Real(4, p) * pi / Real(3, p);
        switch (n % 3) {
            case 0: out.c1 = scale * cos_turns(Rational(1, 9), p); break;          // cos(2pi/9)
            case 1: out.c1 = -(scale * cos_turns(Rational(1, 18), p)); break;      // cos(pi/9)
            default: out.c1 = scale * sin_turns(Rational(1, 36), p); break;        // sin(pi/18)
        }
        return out;
    }
    if (modulus == 4) {
        switch (n % 4) {
            case 1: out.c1 = -pi; break;
            case 3: out.c1 = pi; break;
            default: break;
        }
        switch (n % 8) {
            case 0: out.c2 = pi * sin_turns(Rational(1, 16), p); break;            // sin(pi/8)
            case 2: out.c2 = pi * cos_turns(Rational(1, 16), p); break;            // cos(pi/8)
            case 4: out.c2 = -(pi * sin_turns(Rational(1, 16), p)); break;
            case 6: out.c2 = -(pi * cos_turns(Rational(1, 16), p)); break;
            default: break;
        }
        return out;
    }
    throw std::invalid_argument("main_coeff: modulus must be 3 or 4");
}

RootSum root_of_unity_main(int modulus, long kprime, long n, long prec_bits) {
    if (kprime < 1) throw std::invalid_argument("root_of_unity_main: k' must be positive");
    const long wp = prec_bits + 32;
    const long k = modulus * kprime;
    Real re(wp), im(wp);
    for (long h = 1; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        // e(-nh/k) * omega_{h,k'} combined as one exact angle.
        const mpz_class num = mpz_class(n) * h;
        Rational phase(-num, mpz_class(k));
        phase.canonicalize();
        const RationalAngle total = RationalAngle(phase) + omega(h, kprime, modulus);
        re = re + cos_turns(total.turns(), wp);
        im = im + sin_turns(total.turns(), wp);
    }
    const Real scale = Real(2, wp) * Real::pi(wp) / Real(k, wp);
    return RootSum{rounded(re * scale, prec_bits), rounded(abs(im * scale), prec_bits)};
}

Real main_term(int modulus, long n, long prec_bits) {
    if (n < 1) throw std::invalid_argument("main_term: n must be >= 1");
    const long p = prec_bits;
    const Real pi = Real::pi(p);
    const Real s = sqrt_shifted(n, p);
    const Real sqrt3 = sqrt(Real(3, p));
    const MainCoeffs c = main_coeff(modulus, n, p);

    if (modulus == 3) {
        const Real arg = Real(2, p) * pi * s / (Real(3, p) * sqrt3);
        return c.c1 * bessel_i0(arg, p);
    }
    if (modulus == 4) {
        Real total(p);
        if (!c.c1.is_zero()) {
            const Real arg1 = pi * s / (Real(2, p) * sqrt3);
            total = total + c.c1 * bessel_i0(arg1, p);
        }
        if (!c.c2.is_zero()) {
            const Real arg2 = pi * s / (Real(4, p) * sqrt3);
            total = total + c.c2 * bessel_i0(arg2, p);
        }
        return total;
    }
    throw std::invalid_argument("main_term: modulus must be 3 or 4");
}

Real error_bound(int modulus, long n, long prec_bits) {
    if (n < 1) throw std::invalid_argument("error_bound: n must be >= 1");
    Rational c_log, c_lin, c_exp;
    long exp_div;  // exponent is pi*sqrt(n-1/12)/(exp_div*sqrt(3))
    if (modulus == 3) {
        c_log = Rational(1731, 10);
        c_lin = Rational(743, 10);
        c_exp = Rational(28, 10);
        exp_div = 3;
    } else if (modulus == 4) {
        c_log = Rational(2242, 10);
        c_lin = Rational(556, 10);
        c_exp = Rational(24, 10);
        exp_div = 6;
    } else {
        throw std::invalid_argument("error_bound: modulus must be 3 or 4");
    }

    const long p = prec_bits;
    const Real pi = Real::pi(p);
    const Real s = sqrt_shifted(n, p);
    const Real log_part = log(sqrt(Real(2, p) * pi * Real(Rational(12 * n - 1, 12), p))) +
                          Real(1, p);
    const Real exp_part = exp(pi * s / (Real(exp_div, p) * sqrt(Real(3, p))));
    Real bound = Real(c_log, p) * s * log_part + Real(c_lin, p) * s +
                 Real(c_exp, p) * s * exp_part;
    // Upward bias keeps "gap <= bound" conservative under rounding.
    return bound * (Real(1, p) + Real::pow2(-(p / 2), p));
}

AsymptoticCheck check_asymptotic(int modulus, long n, const mpz_class& exact,
                                 long prec_bits) {
    long p = prec_bits;
    while (true) {
        const Real main = main_term(modulus, n, p);
        const Real bound = error_bound(modulus, n, p);
        const Real gap = abs(Real(exact, p) - main);
        const Real margin = bound - gap;
        Real scale = bound > gap ? bound : gap;
        if (margin_resolved(margin, scale, p) || p >= kMaxPrec)
            return AsymptoticCheck{modulus, n, margin.sign() >= 0, p,
                                   main, bound, gap, margin};
        p *= 2;
    }
}

DominanceScan dominance_scan(int modulus, long lo, long hi, long prec_bits) {
    if (lo < 1) throw std::invalid_argument("dominance_scan: lo must be >= 1");
    if (hi < lo) throw std::invalid_argument("dominance_scan: empty range");
    DominanceScan scan;
    scan.modulus = modulus;
    scan.lo = lo;
    scan.hi = hi;
    for (long n = lo; n <= hi; ++n) {
        long p = prec_bits;
        while (true) {
            const Real m = abs(main_term(modulus, n, p));
            const Real b = error_bound(modulus, n, p);
            const Real margin = m - b;
            Real scale = m > b ? m : b;
            if (margin_resolved(margin, scale, p) || p >= kMaxPrec) {
                scan.rows.push_back(DominanceRow{n, margin.sign() > 0, p, margin});
                break;
            }
            p *= 2;
        }
        if (!scan.rows.back().dominant) scan.failures.push_back(n);
    }
    scan.first_stable = scan.failures.empty() ? lo : scan.failures.back() + 1;
    return scan;
}

Real kotesovec_estimate(long n, long prec_bits) {
    if (n < 1) throw std::invalid_argument("kotesovec_estimate: n must be >= 1");
    const long p = prec_bits;
    const Real pi = Real::pi(p);
    const Real growth = exp(pi * sqrt(Real(Rational(n, 3), p)));
    // 2^{3/2} * 3^{1/4} * n^{3/4} = sqrt(8) * (3 n^3)^{1/4}
    const mpz_class n3 = mpz_class(3) * n * n * n;
    const Real den = sqrt(Real(8, p)) * sqrt(sqrt(Real(n3, p)));
    const Real mag = growth / den;
    return (n & 1) ? -mag : mag;
}

BesselBounds bessel_bounds_check(const Real& x) {
    if (x.sign() <= 0) throw std::domain_error("bessel_bounds_check: need x > 0");
    const long p = std::max(x.prec(), kDefaultPrec);
    BesselBounds out;
    const Real i0 = bessel_i0(rounded(x, p), p);
    const Real envelope = exp(rounded(x, p)) / sqrt(rounded(x, p));
    const Real pi = Real::pi(p);
    out.upper_ok = i0 < sqrt(pi / Real(8, p)) * envelope;
    out.lower_applicable = rounded(x, p) >= Real(1, p);
    if (out.lower_applicable)
        out.lower_ok = i0 > Real(4, p) * sqrt(Real(2, p)) / (Real(5, p) * pi) * envelope;
    return out;
}

} // namespace bicrank
