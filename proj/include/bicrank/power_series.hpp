#pragma once
// Truncated formal power series in q with arbitrary-precision integer
// coefficients. All operations are exact; results never report
// coefficients beyond the truncation order.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicrank {

using Int = mpz_class;

class PowerSeries {
public:
    // Zero series of the given order (coefficients 0..order inclusive).
    explicit PowerSeries(long order) : coeffs_(check_order(order) + 1) {}

    explicit PowerSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("PowerSeries: empty coefficient list");
    }

    static PowerSeries one(long order) {
        PowerSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    // q^k truncated at `order`; the zero series if k > order.
    static PowerSeries monomial(long k, long order) {
        PowerSeries s(order);
        if (k < 0) throw std::invalid_argument("monomial: negative exponent");
        if (k <= order) s.coeffs_[k] = 1;
        return s;
    }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Int& operator[](long n) const {
        if (n < 0 || n > order())
            throw std::out_of_range("PowerSeries: exponent " + std::to_string(n) +
                                    " outside order " + std::to_string(order()));
        return coeffs_[static_cast<size_t>(n)];
    }

    void set_coeff(long n, Int v) {
        if (n < 0 || n > order())
            throw std::out_of_range("PowerSeries: exponent out of range");
        coeffs_[static_cast<size_t>(n)] = std::move(v);
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    long support_size() const {
        long k = 0;
        for (const Int& c : coeffs_)
            if (c != 0) ++k;
        return k;
    }

    bool is_zero() const { return support_size() == 0; }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    static long check_order(long order) {
        if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
        return order;
    }

    std::vector<Int> coeffs_;
};

// Ring operations. Binary ops truncate to the smaller operand order.
PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Int& c, const PowerSeries& a);
inline PowerSeries operator*(long c, const PowerSeries& a) { return Int(c) * a; }

// A^e for e >= 0 (binary powering).
PowerSeries power(const PowerSeries& a, unsigned long e);

// Multiplicative inverse to the order of `a`; requires constant term +-1.
PowerSeries invert(const PowerSeries& a);

// q -> q^k substitution, order preserved.
PowerSeries compose_power(const PowerSeries& a, long k);

// q -> -q.
PowerSeries alternate(const PowerSeries& a);

// Subseries on exponents == r (mod m): coefficient n of the result is
// coefficient m*n+r of `a`; resulting order is floor((order-r)/m).
PowerSeries dissect(const PowerSeries& a, long r, long m);

// Multiplication by q^k, order preserved (top k coefficients drop off).
PowerSeries shifted(const PowerSeries& a, long k);

// Copy truncated to a smaller order.
PowerSeries truncated(const PowerSeries& a, long order);

// Smallest exponent (<= common order) where the two series differ.
std::optional<long> first_mismatch(const PowerSeries& a, const PowerSeries& b);

} // namespace bicrank
