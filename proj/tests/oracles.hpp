#pragma once
// Independent oracles for the test suites. Everything here is written
// against the definitions directly (dynamic programs, literal multiset
// enumeration, schoolbook polynomial products) and deliberately shares
// no code with the library implementations it checks.

#include <gmpxx.h>

#include <vector>

namespace oracles {

// p(n) for n = 0..order via the one-part-at-a-time dynamic program.
inline std::vector<mpz_class> partition_numbers(long order) {
    std::vector<mpz_class> dp(static_cast<size_t>(order) + 1);
    dp[0] = 1;
    for (long k = 1; k <= order; ++k)
        for (long n = k; n <= order; ++n)
            dp[static_cast<size_t>(n)] += dp[static_cast<size_t>(n - k)];
    return dp;
}

// p_{-2}(n): same program with every part size available in two colors.
inline std::vector<mpz_class> colored_partition_numbers(long order) {
    std::vector<mpz_class> dp(static_cast<size_t>(order) + 1);
    dp[0] = 1;
    for (int color = 0; color < 2; ++color)
        for (long k = 1; k <= order; ++k)
            for (long n = k; n <= order; ++n)
                dp[static_cast<size_t>(n)] += dp[static_cast<size_t>(n - k)];
    return dp;
}

// Literal enumeration of 2-colored partitions of n (multisets of
// (size, color) parts). Exponential; for tiny n only.
inline long enumerate_colored_partitions(long n, long max_code = -1) {
    if (n == 0) return 1;
    if (max_code < 0) max_code = 2 * n - 1;  // codes 0..2n-1 = (size-1)*2+color
    long count = 0;
    for (long code = 0; code <= max_code; ++code) {
        const long size = code / 2 + 1;
        if (size <= n) count += enumerate_colored_partitions(n - size, code);
    }
    return count;
}

// Number of partitions of n into distinct odd parts, by literal
// enumeration with a growing smallest part.
inline long enumerate_distinct_odd(long n, long min_part = 1) {
    if (n == 0) return 1;
    long count = 0;
    for (long p = min_part; p <= n; p += 2) count += enumerate_distinct_odd(n - p, p + 2);
    return count;
}

// Pairs of partitions into distinct odd parts with total sum n.
inline long enumerate_distinct_odd_pairs(long n) {
    long count = 0;
    for (long j = 0; j <= n; ++j)
        count += enumerate_distinct_odd(j) * enumerate_distinct_odd(n - j);
    return count;
}

// Schoolbook truncated product of (1 - q^{a+jb}) factors, independent of
// the library's series type.
inline std::vector<mpz_class> naive_pochhammer(long a, long b, long order) {
    std::vector<mpz_class> c(static_cast<size_t>(order) + 1);
    c[0] = 1;
    for (long p = a; p <= order; p += b) {
        std::vector<mpz_class> next(c.size());
        for (long i = 0; i <= order; ++i) {
            next[static_cast<size_t>(i)] = c[static_cast<size_t>(i)];
            if (i >= p) next[static_cast<size_t>(i)] -= c[static_cast<size_t>(i - p)];
        }
        c = std::move(next);
    }
    return c;
}

// Exact partial sum of the I0 series with rational terms: returns
// sum_{m<=terms} (x^2/4)^m / (m!)^2 for rational x.
inline mpq_class bessel_i0_partial(const mpq_class& x, int terms) {
    mpq_class sum = 1, term = 1;
    const mpq_class ratio = x * x / 4;
    for (int m = 1; m <= terms; ++m) {
        term *= ratio;
        term /= mpq_class(m) * m;
        sum += term;
    }
    return sum;
}

} // namespace oracles
