#include "bicrank/power_series.hpp"

#include <algorithm>

namespace bicrank {

namespace {

std::vector<long> support(const PowerSeries& a, long limit) {
    std::vector<long> idx;
    for (long n = 0; n <= limit; ++n)
        if (a[n] != 0) idx.push_back(n);
    return idx;
}

} // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const long n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (long i = 0; i <= n; ++i) r.set_coeff(i, a[i] + b[i]);
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const long n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (long i = 0; i <= n; ++i) r.set_coeff(i, a[i] - b[i]);
    return r;
}

PowerSeries operator-(const PowerSeries& a) {
    PowerSeries r(a.order());
    for (long i = 0; i <= a.order(); ++i) r.set_coeff(i, -a[i]);
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const long n = std::min(a.order(), b.order());
    // Iterate the sparser operand on the outside; series like (q;q)_inf
    // have O(sqrt(N)) support and this turns convolution into a cheap pass.
    const std::vector<long> sa = support(a, n);
    const std::vector<long> sb = support(b, n);
    const bool a_outer = sa.size() <= sb.size();
    const PowerSeries& outer = a_outer ? a : b;
    const PowerSeries& inner = a_outer ? b : a;
    const std::vector<long>& so = a_outer ? sa : sb;

    std::vector<Int> acc(static_cast<size_t>(n) + 1);
    for (long i : so) {
        const Int& ci = outer[i];
        const long jmax = n - i;
        for (long j = 0; j <= jmax; ++j) {
            const Int& cj = inner[j];
            if (cj != 0)
                mpz_addmul(acc[static_cast<size_t>(i + j)].get_mpz_t(),
                           ci.get_mpz_t(), cj.get_mpz_t());
        }
    }
    return PowerSeries(std::move(acc));
}

PowerSeries operator*(const Int& c, const PowerSeries& a) {
    PowerSeries r(a.order());
    for (long i = 0; i <= a.order(); ++i) r.set_coeff(i, c * a[i]);
    return r;
}

PowerSeries power(const PowerSeries& a, unsigned long e) {
    PowerSeries result = PowerSeries::one(a.order());
    if (e == 0) return result;
    PowerSeries base = a;
    while (true) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e == 0) break;
        base = base * base;
    }
    return result;
}

PowerSeries invert(const PowerSeries& a) {
    const long n = a.order();
    const Int& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("invert: constant term must be a unit (+-1)");

    const std::vector<long> sa = support(a, n);
    std::vector<Int> b(static_cast<size_t>(n) + 1);
    b[0] = a0; // 1/1 = 1, 1/(-1) = -1
    Int s;
    for (long k = 1; k <= n; ++k) {
        s = 0;
        for (long j : sa) {
            if (j == 0) continue;
            if (j > k) break;
            mpz_addmul(s.get_mpz_t(), a[j].get_mpz_t(),
                       b[static_cast<size_t>(k - j)].get_mpz_t());
        }
        b[static_cast<size_t>(k)] = -a0 * s;
    }
    return PowerSeries(std::move(b));
}

PowerSeries compose_power(const PowerSeries& a, long k) {
    if (k < 1) throw std::invalid_argument("compose_power: k must be >= 1");
    const long n = a.order();
    PowerSeries r(n);
    for (long i = 0; i * k <= n; ++i) r.set_coeff(i * k, a[i]);
    return r;
}

PowerSeries alternate(const PowerSeries& a) {
    PowerSeries r(a.order());
    for (long i = 0; i <= a.order(); ++i)
        r.set_coeff(i, (i & 1) ? Int(-a[i]) : a[i]);
    return r;
}

PowerSeries dissect(const PowerSeries& a, long r, long m) {
    if (m < 1) throw std::invalid_argument("dissect: modulus must be >= 1");
    if (r < 0 || r >= m) throw std::invalid_argument("dissect: need 0 <= r < m");
    if (r > a.order())
        throw std::invalid_argument("dissect: residue exceeds series order");
    const long n = (a.order() - r) / m;
    PowerSeries out(n);
    for (long i = 0; i <= n; ++i) out.set_coeff(i, a[m * i + r]);
    return out;
}

PowerSeries shifted(const PowerSeries& a, long k) {
    if (k < 0) throw std::invalid_argument("shifted: negative shift");
    PowerSeries r(a.order());
    for (long i = k; i <= a.order(); ++i) r.set_coeff(i, a[i - k]);
    return r;
}

PowerSeries truncated(const PowerSeries& a, long order) {
    if (order > a.order())
        throw std::invalid_argument("truncated: cannot extend a series");
    PowerSeries r(order);
    for (long i = 0; i <= order; ++i) r.set_coeff(i, a[i]);
    return r;
}

std::optional<long> first_mismatch(const PowerSeries& a, const PowerSeries& b) {
    const long n = std::min(a.order(), b.order());
    for (long i = 0; i <= n; ++i)
        if (a[i] != b[i]) return i;
    return std::nullopt;
}

} // namespace bicrank
