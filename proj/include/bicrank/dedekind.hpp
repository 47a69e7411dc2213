#pragma once
// Sawtooth function, Dedekind sums, and the rational angles of the
// root-of-unity multipliers. Everything here is exact.

#include <gmpxx.h>

namespace bicrank {

using Rational = mpq_class;

// ((x)) = x - floor(x) - 1/2 for non-integer x, 0 at integers.
Rational sawtooth(const Rational& x);

// s(d,c) = sum_{n mod c} ((dn/c)) ((n/c)); requires gcd(d,c) = 1.
Rational dedekind_sum(long d, long c);

// A point on the unit circle, stored as an exact number of turns in
// [0,1): the value is e(turns) = exp(2*pi*i*turns).
class RationalAngle {
public:
    explicit RationalAngle(Rational turns) : turns_(std::move(turns)) { normalize(); }

    const Rational& turns() const { return turns_; }

    RationalAngle operator+(const RationalAngle& o) const {
        return RationalAngle(turns_ + o.turns_);
    }
    RationalAngle operator-(const RationalAngle& o) const {
        return RationalAngle(turns_ - o.turns_);
    }

    friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
        return a.turns_ == b.turns_;
    }

private:
    void normalize();
    Rational turns_;
};

// The multiplier omega_{h,k'} entering the k = modulus*k' main terms:
//   modulus 3: e((2 s(h,k') - 4 s(h,3k'))/2)
//   modulus 4: e((s(h,2k') + s(h,k') - 4 s(h,4k'))/2)
// Requires gcd(h, modulus*k') = 1.
RationalAngle omega(long h, long kprime, int modulus);

} // namespace bicrank
