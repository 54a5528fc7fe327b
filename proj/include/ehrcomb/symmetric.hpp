#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "ehrcomb/errors.hpp"

namespace ehrcomb {

// Complete homogeneous symmetric polynomial h_n evaluated at the given list:
// the sum of all degree-n monomials with repetition allowed. One pass per
// value over a length-(n+1) prefix table; the ascending inner loop is what
// permits repetition. h_0 = 1, including on the empty list.
template <typename T>
T complete_homogeneous(int n, const std::vector<T>& values) {
    if (n < 0)
        throw NegativeDegree("complete homogeneous degree is negative");
    std::vector<T> dp(static_cast<std::size_t>(n) + 1, T(0));
    dp[0] = T(1);
    for (const T& v : values)
        for (int j = 1; j <= n; ++j)
            dp[static_cast<std::size_t>(j)] += v * dp[static_cast<std::size_t>(j) - 1];
    return dp[static_cast<std::size_t>(n)];
}

// Elementary symmetric polynomial e_n: the sum over n-element subsets. Same
// table, but the descending inner loop forbids reuse of a value. e_n = 0
// whenever n exceeds the list length.
template <typename T>
T elementary_symmetric(int n, const std::vector<T>& values) {
    if (n < 0)
        throw NegativeDegree("elementary symmetric degree is negative");
    std::vector<T> dp(static_cast<std::size_t>(n) + 1, T(0));
    dp[0] = T(1);
    for (const T& v : values)
        for (int j = std::min<int>(n, static_cast<int>(values.size())); j >= 1; --j)
            dp[static_cast<std::size_t>(j)] += v * dp[static_cast<std::size_t>(j) - 1];
    return dp[static_cast<std::size_t>(n)];
}

} // namespace ehrcomb
