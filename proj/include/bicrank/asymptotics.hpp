#pragma once
// Explicit main terms and error bounds for the mod-3 and mod-4 bicrank
// difference series: modified Bessel I0, closed-form coefficients,
// root-of-unity exponential sums, and the dominance scan.

#include "bicrank/dedekind.hpp"
#include "bicrank/real.hpp"

#include <vector>

namespace bicrank {

constexpr long kDefaultPrec = 192;

// I_0(x) = sum_m (x/2)^{2m} / (m!)^2, summed until the tail is provably
// below 2^-(prec+8) of the running sum. Requires x >= 0.
Real bessel_i0(const Real& x, long prec_bits);

// Closed-form main-term coefficients. For modulus 3 the single
// coefficient c(n) is returned in c1 and c2 is zero; for modulus 4 these
// are the c1(n), c2(n) of the two-Bessel main term.
struct MainCoeffs {
    Real c1;
    Real c2;
};
MainCoeffs main_coeff(int modulus, long n, long prec_bits);

// The finite sum sum_h e(-nh/(modulus*k')) * omega_{h,k'} * 2pi/(modulus*k')
// over h coprime to modulus*k', evaluated with exact phase arithmetic.
// The imaginary part must vanish up to rounding; its magnitude is
// reported so callers can assert that.
struct RootSum {
    Real real_part;
    Real imag_abs;
};
RootSum root_of_unity_main(int modulus, long kprime, long n, long prec_bits);

// Main term of the asymptotic formula:
//   modulus 3: c(n)  * I0(2pi sqrt(n-1/12) / (3 sqrt 3))
//   modulus 4: c1(n) * I0(pi sqrt(n-1/12) / (2 sqrt 3))
//            + c2(n) * I0(pi sqrt(n-1/12) / (4 sqrt 3))
Real main_term(int modulus, long n, long prec_bits);

// Explicit |E(n)| envelope, nudged upward by a factor 1 + 2^-(prec/2) so
// comparisons against it are conservative.
Real error_bound(int modulus, long n, long prec_bits);

// Verdict on |exact - main_term| <= error_bound, recomputed at doubled
// precision whenever the margin is too small to trust.
struct AsymptoticCheck {
    int modulus = 0;
    long n = 0;
    bool pass = false;
    long prec_used = 0;
    Real main;
    Real bound;
    Real gap;     // |exact - main|
    Real margin;  // bound - gap
};
AsymptoticCheck check_asymptotic(int modulus, long n, const mpz_class& exact,
                                 long prec_bits = kDefaultPrec);

// Per-n margins |main_term| - error_bound over [lo, hi]; nonpositive
// margins are collected and the smallest n from which the rest of the
// range is dominant is reported.
struct DominanceRow {
    long n = 0;
    bool dominant = false;
    long prec_used = 0;
    Real margin;
};
struct DominanceScan {
    int modulus = 0;
    long lo = 0, hi = 0;
    std::vector<DominanceRow> rows;
    std::vector<long> failures;
    long first_stable = 0;  // lo if no failures, else largest failure + 1
};
DominanceScan dominance_scan(int modulus, long lo, long hi,
                             long prec_bits = kDefaultPrec);

// Leading-order estimate (-1)^n exp(pi sqrt(n/3)) / (2^{3/2} 3^{1/4} n^{3/4})
// for the mod-2 difference.
Real kotesovec_estimate(long n, long prec_bits);

// I0(x) < sqrt(pi/8) e^x/sqrt(x) for x > 0, and
// I0(x) > (4 sqrt 2 / (5 pi)) e^x/sqrt(x) for x >= 1.
struct BesselBounds {
    bool upper_ok = false;
    bool lower_applicable = false;
    bool lower_ok = true;  // vacuously true when not applicable
};
BesselBounds bessel_bounds_check(const Real& x);

} // namespace bicrank
