#pragma once
// The bivariate bicrank table M*(m,n): q-coefficients of
// (q;q)^2 / ((zq)(z^-1 q)(z^2 q)(z^-2 q); q)_inf as Laurent polynomials
// in z, residue-class counts, and the specialized difference series for
// moduli 2, 3 and 4.

#include "bicrank/eta.hpp"
#include "bicrank/power_series.hpp"

#include <array>
#include <string>

namespace bicrank {

// Dense Laurent polynomial in z; degree d is stored at c[d - min_deg].
class LaurentPoly {
public:
    LaurentPoly() : min_deg_(0), c_(1) {}
    LaurentPoly(long min_deg, long max_deg)
        : min_deg_(min_deg), c_(static_cast<size_t>(max_deg - min_deg) + 1) {
        if (max_deg < min_deg)
            throw std::invalid_argument("LaurentPoly: empty degree range");
    }

    long min_deg() const { return min_deg_; }
    long max_deg() const { return min_deg_ + static_cast<long>(c_.size()) - 1; }

    // Coefficient of z^d; zero outside the stored window.
    const Int& coeff(long d) const {
        static const Int kZero = 0;
        if (d < min_deg_ || d > max_deg()) return kZero;
        return c_[static_cast<size_t>(d - min_deg_)];
    }

    Int& at(long d) {
        if (d < min_deg_ || d > max_deg())
            throw std::out_of_range("LaurentPoly: degree outside window");
        return c_[static_cast<size_t>(d - min_deg_)];
    }

    // Copy with zero leading/trailing coefficients trimmed.
    LaurentPoly trimmed() const;

    Int sum() const;

private:
    long min_deg_;
    std::vector<Int> c_;
};

class BicrankTable {
public:
    // Builds rows 0..order; row n holds M*(m,n) at z-degree m.
    // `max_order` guards against accidental huge allocations
    // (memory grows like order^2 big integers).
    static BicrankTable build(long order, long max_order = 2000);

    long order() const { return static_cast<long>(rows_.size()) - 1; }
    const LaurentPoly& row(long n) const;

    // M*(j,k,n): sum of row-n coefficients over z-degrees == j (mod k).
    Int class_count(long j, long k, long n) const;

private:
    explicit BicrankTable(std::vector<LaurentPoly> rows) : rows_(std::move(rows)) {}
    std::vector<LaurentPoly> rows_;
};

// Low-memory route: same dynamic program carried out in Z[z]/(z^k - 1),
// producing the k class counts M*(j,k,n) per n without retaining any
// Laurent polynomials. Used both as the streaming API and as a
// cross-check on the full table.
std::vector<std::vector<Int>> class_counts_mod(long k, long order);

// The specialized difference series, expanded as eta quotients:
//   k=2: (q;q2)^2              coefficient n = M*(0,2,n) - M*(1,2,n)
//   k=3: (q;q)^4/(q3;q3)^2     coefficient n = M*(0,3,n) - M*(1,3,n)
//   k=4: (q;q)^4/((q2;q2)(q4;q4))  coefficient n = M*(0,4,n) - M*(2,4,n)
PowerSeries diff_series(int k, long order);

struct CheckReport {
    bool pass = true;
    long fail_n = -1;
    int fail_k = 0;          // modulus of the first failing check, 0 if none
    std::string detail;
};

// Roots-of-unity filter: table class-count differences match
// diff_series(2/3/4) for all n <= bound, and the symmetry-induced
// equalities M*(1,3,n) = M*(2,3,n), M*(1,4,n) = M*(3,4,n) hold.
CheckReport verify_specializations(const BicrankTable& table, long bound);

// Mod-5 structure: for 0 <= n <= bound (needs 5*bound+4 <= table order),
// the five class counts at 5n+2 and 5n+4 are equal and equal to
// p_{-2}/5, the five counts at 5n+3 are pairwise congruent mod 5, and
// p_{-2}(5n+2), p_{-2}(5n+3), p_{-2}(5n+4) are divisible by 5.
CheckReport verify_mod5(const BicrankTable& table, long bound);

// Predicted sign of diff_series(k)[n]: +1 or -1 per the residue pattern
// (mod 2 for k=2, mod 3 for k=3, mod 8 for k=4).
int expected_sign(int k, long n);

struct SignReport {
    int k = 0;
    long order = 0;
    // n where the coefficient is zero or has the wrong sign, with the
    // actual signum. The zero entries are exactly the strictness
    // exceptions.
    std::vector<std::pair<long, int>> exceptions;
};

SignReport sign_report(int k, long order);
SignReport sign_report(int k, const PowerSeries& diff);

// 4 | (M*(0,4,2n+1) - M*(2,4,2n+1)) for every odd index <= order.
CheckReport mod4_odd_congruence(long order);

} // namespace bicrank
