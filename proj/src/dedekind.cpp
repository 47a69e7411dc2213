#include "bicrank/dedekind.hpp"

#include <numeric>
#include <stdexcept>

namespace bicrank {

Rational sawtooth(const Rational& x) {
    if (x.get_den() == 1) return Rational(0);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rational r = x - Rational(fl) - Rational(1, 2);
    r.canonicalize();
    return r;
}

Rational dedekind_sum(long d, long c) {
    if (c < 1) throw std::invalid_argument("dedekind_sum: c must be positive");
    if (std::gcd(d, c) != 1) throw std::invalid_argument("dedekind_sum: gcd(d,c) != 1");
    Rational s(0);
    const mpz_class cz(c);
    for (long n = 1; n < c; ++n) {
        const mpz_class dn = mpz_class(d) * n;
        Rational a(dn, cz);
        a.canonicalize();
        Rational b(mpz_class(n), cz);
        b.canonicalize();
        s += sawtooth(a) * sawtooth(b);
    }
    s.canonicalize();
    return s;
}

void RationalAngle::normalize() {
    turns_.canonicalize();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), turns_.get_num_mpz_t(), turns_.get_den_mpz_t());
    if (fl != 0) {
        turns_ -= Rational(fl);
        turns_.canonicalize();
    }
}

RationalAngle omega(long h, long kprime, int modulus) {
    if (kprime < 1) throw std::invalid_argument("omega: k' must be positive");
    if (modulus != 3 && modulus != 4)
        throw std::invalid_argument("omega: modulus must be 3 or 4");
    if (std::gcd(h, modulus * kprime) != 1)
        throw std::invalid_argument("omega: gcd(h, modulus*k') != 1");

    Rational t;
    if (modulus == 3) {
        t = (2 * dedekind_sum(h, kprime) - 4 * dedekind_sum(h, 3 * kprime)) / 2;
    } else {
        t = (dedekind_sum(h, 2 * kprime) + dedekind_sum(h, kprime) -
             4 * dedekind_sum(h, 4 * kprime)) /
            2;
    }
    return RationalAngle(t);
}

} // namespace bicrank
