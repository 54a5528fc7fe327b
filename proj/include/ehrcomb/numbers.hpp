#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "ehrcomb/polynomial.hpp"
#include "ehrcomb/rational.hpp"

namespace ehrcomb {

// C(n, k); zero outside 0 <= k <= n (in particular for negative arguments).
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n)
        return BigInt(0);
    if (k > n - k)
        k = n - k;
    BigInt r(1);
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigInt factorial(int n) {
    if (n < 0)
        throw NegativeIndex("factorial of a negative integer");
    BigInt r(1);
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// n!! = n(n-2)(n-4)...; empty products (n <= 0) are 1, so (-1)!! = 1.
inline BigInt double_factorial(int n) {
    BigInt r(1);
    for (int i = n; i >= 2; i -= 2)
        r *= i;
    return r;
}

// Bernoulli numbers with the B_1 = +1/2 convention, via the recursion
// B_n = 1 - 1/(n+1) * sum_{j<n} C(n+1, j) B_j. The table is grown on demand
// and shared, so access is serialized.
inline Rational bernoulli(int n) {
    if (n < 0)
        throw NegativeIndex("Bernoulli index is negative");
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        Rational s(0);
        for (int j = 0; j < m; ++j)
            s += Rational(binomial(m + 1, j)) * cache[static_cast<std::size_t>(j)];
        cache.push_back(Rational(1) - s / Rational(m + 1));
    }
    return cache[static_cast<std::size_t>(n)];
}

// H_n = 1 + 1/2 + ... + 1/n; H_0 = 0.
inline Rational harmonic(int n) {
    if (n < 0)
        throw NegativeIndex("harmonic index is negative");
    Rational s(0);
    for (int j = 1; j <= n; ++j)
        s += Rational(1, j);
    return s;
}

// Power-sum polynomial F_n with F_n(m) = 1^n + 2^n + ... + m^n, built by
// interpolating partial sums rather than from a Bernoulli closed form, so the
// relation [x] F_n = B_n stays an independent cross-check.
inline Polynomial faulhaber(int n) {
    if (n < 1)
        throw IndexTooSmall("power-sum exponent must be at least 1");
    return discrete_sum(Polynomial::monomial(n));
}

enum class StirlingKind { first_unsigned, second };

// Triangle rows 0..max_n; row n holds entries k = 0..n.
struct StirlingTriangle {
    StirlingKind kind;
    std::vector<std::vector<BigInt>> rows;
};

inline StirlingTriangle stirling_triangle(StirlingKind kind, int max_n) {
    if (max_n < 0)
        throw NegativeIndex("Stirling triangle size is negative");
    StirlingTriangle t{kind, {}};
    t.rows.reserve(static_cast<std::size_t>(max_n) + 1);
    t.rows.push_back({BigInt(1)});
    for (int n = 1; n <= max_n; ++n) {
        const auto& prev = t.rows.back();
        std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, BigInt(0));
        for (int k = 1; k <= n; ++k) {
            BigInt carry = kind == StirlingKind::second ? BigInt(k) : BigInt(n - 1);
            if (k <= n - 1)
                row[static_cast<std::size_t>(k)] = carry * prev[static_cast<std::size_t>(k)];
            row[static_cast<std::size_t>(k)] += prev[static_cast<std::size_t>(k) - 1];
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

// Number of partitions of an n-set into k non-empty blocks; zero outside
// 0 <= k <= n.
inline BigInt stirling_second(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        return BigInt(0);
    return stirling_triangle(StirlingKind::second, n).rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Number of permutations of an n-set with exactly k cycles (unsigned first
// kind); zero outside 0 <= k <= n.
inline BigInt stirling_first_unsigned(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        return BigInt(0);
    return stirling_triangle(StirlingKind::first_unsigned, n).rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

} // namespace ehrcomb
