#pragma once
// Thin RAII wrapper over MPFR. Precision is always passed explicitly at
// construction; binary operations carry the larger operand precision.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace bicrank {

class Real {
public:
    static constexpr long kMinPrec = 64;

    explicit Real(long prec_bits) { mpfr_init2(v_, clamp(prec_bits)); mpfr_set_zero(v_, 1); }

    Real(long value, long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    Real(const mpz_class& value, long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }
    Real(const mpq_class& value, long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(Real o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    // Scientific notation with the given significant digit count.
    std::string str(int digits) const;

    static Real pi(long prec_bits);
    // 2^e, exact.
    static Real pow2(long e, long prec_bits);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a);

    friend Real sqrt(const Real& a);
    friend Real exp(const Real& a);
    friend Real log(const Real& a);
    friend Real cos(const Real& a);
    friend Real sin(const Real& a);
    friend Real abs(const Real& a);
    // Rounds to the given precision (used to deliver results at the
    // caller's requested precision after wider internal work).
    friend Real rounded(const Real& a, long prec_bits);

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    static long clamp(long prec_bits) { return prec_bits < kMinPrec ? kMinPrec : prec_bits; }
    mpfr_t v_;
};

} // namespace bicrank
