#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "ehrcomb/numbers.hpp"
#include "ehrcomb/rational.hpp"

namespace ehrcomb {

// A word over positive integers; entry values are 1-based.
using Word = std::vector<int>;

// descents-by-count histogram: entry k counts words/extensions with exactly k
// descents, trailing zeros trimmed.
using DescentVector = std::vector<BigInt>;

// 1-based positions i with w_i > w_{i+1}.
inline std::vector<int> descent_positions(const Word& w) {
    if (w.empty())
        throw EmptyWord("descent positions of the empty word");
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1])
            out.push_back(static_cast<int>(i) + 1);
    return out;
}

inline int descent_count(const Word& w) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1])
            ++c;
    return c;
}

// Betweenness property: for every value v, everything strictly between two
// occurrences of v is >= v. (Multiplicities are not constrained here.)
inline bool is_stirling_word(const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[j] == w[i]) {
                for (std::size_t t = i + 1; t < j; ++t)
                    if (w[t] < w[i])
                        return false;
            }
    return true;
}

namespace detail {

inline void check_word_params(int n, int r) {
    if (n < 0)
        throw NegativeIndex("word parameter n is negative");
    if (r < 1)
        throw IndexTooSmall("word multiplicity must be at least 1");
}

} // namespace detail

// Streams every permutation of the multiset {1^r, ..., n^r} (the empty word
// once when n = 0).
template <typename F>
void for_each_multiset_permutation(int n, int r, F&& f) {
    detail::check_word_params(n, r);
    Word w;
    w.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(r));
    for (int v = 1; v <= n; ++v)
        w.insert(w.end(), static_cast<std::size_t>(r), v);
    do {
        f(const_cast<const Word&>(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

// Streams the r-Stirling permutations of order n: multiset permutations of
// {1^r, ..., n^r} with the betweenness property. Generated by inserting the
// contiguous block (m)^r into each gap of a word on {1..m-1}; the block of
// the largest value is always contiguous and its position determines the word
// uniquely, so each word is produced exactly once. Order of production is
// unspecified.
template <typename F>
void for_each_stirling_permutation(int n, int r, F&& f) {
    detail::check_word_params(n, r);
    Word w;
    w.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int m) -> void {
        if (m > n) {
            f(const_cast<const Word&>(w));
            return;
        }
        for (std::size_t pos = 0; pos <= w.size(); ++pos) {
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<std::size_t>(r), m);
            self(self, m + 1);
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos),
                    w.begin() + static_cast<std::ptrdiff_t>(pos) + r);
        }
    };
    rec(rec, 1);
}

inline std::vector<Word> stirling_permutations(int n, int r) {
    std::vector<Word> out;
    for_each_stirling_permutation(n, r, [&](const Word& w) { out.push_back(w); });
    return out;
}

// j-th occurrence order: true when, for every i < n, the j-th copy of i
// appears before the j-th copy of i+1. Values 1..n must each occur at least
// j times (n inferred as the maximum entry).
inline bool is_ordered_by_jth_occurrence(const Word& w, int j) {
    if (j < 1)
        throw IndexTooSmall("occurrence index must be at least 1");
    int n = 0;
    for (int v : w)
        n = std::max(n, v);
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> jth(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        int v = w[i];
        if (++seen[static_cast<std::size_t>(v)] == j)
            jth[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (int v = 1; v <= n; ++v)
        if (jth[static_cast<std::size_t>(v)] < 0)
            return false;
    for (int v = 1; v < n; ++v)
        if (jth[static_cast<std::size_t>(v)] > jth[static_cast<std::size_t>(v) + 1])
            return false;
    return true;
}

template <typename F>
void for_each_ordered_by_jth_occurrence(int n, int r, int j, F&& f) {
    detail::check_word_params(n, r);
    if (j < 1 || j > r)
        throw IndexTooSmall("occurrence index must lie in 1..r");
    for_each_multiset_permutation(n, r, [&](const Word& w) {
        if (n == 0 || is_ordered_by_jth_occurrence(w, j))
            f(w);
    });
}

inline std::vector<Word> ordered_by_jth_occurrence(int n, int r, int j) {
    std::vector<Word> out;
    for_each_ordered_by_jth_occurrence(n, r, j, [&](const Word& w) { out.push_back(w); });
    return out;
}

inline DescentVector descent_histogram_trim(std::vector<BigInt> hist) {
    while (!hist.empty() && hist.back() == 0)
        hist.pop_back();
    return hist;
}

// Row n of the second-order Eulerian triangle by direct enumeration of
// 2-Stirling permutations: entry k counts those with exactly k descents
// (k = 0..n-1).
inline DescentVector second_eulerian_row_enumerated(int n) {
    if (n < 1)
        throw IndexTooSmall("second-order Eulerian row index must be at least 1");
    std::vector<BigInt> hist(static_cast<std::size_t>(n), BigInt(0));
    for_each_stirling_permutation(n, 2, [&](const Word& w) {
        ++hist[static_cast<std::size_t>(descent_count(w))];
    });
    return descent_histogram_trim(std::move(hist));
}

// Same row via the triangle recurrence
//   E2(n, k) = (k+1) E2(n-1, k) + (2n-1-k) E2(n-1, k-1),
// grown from row 1 = [1]. Kept as a fast path only; tests pin it to the
// enumerated rows on an overlap window before it is trusted beyond them.
inline DescentVector second_eulerian_row_recurrence(int n) {
    if (n < 1)
        throw IndexTooSmall("second-order Eulerian row index must be at least 1");
    std::vector<BigInt> row{BigInt(1)};
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m), BigInt(0));
        for (int k = 0; k < m; ++k) {
            if (k < m - 1)
                next[static_cast<std::size_t>(k)] += BigInt(k + 1) * row[static_cast<std::size_t>(k)];
            if (k >= 1)
                next[static_cast<std::size_t>(k)] += BigInt(2 * m - 1 - k) * row[static_cast<std::size_t>(k) - 1];
        }
        row = std::move(next);
    }
    return descent_histogram_trim(std::move(row));
}

// Enumerates up to the threshold, then switches to the recurrence.
inline DescentVector second_eulerian_row(int n, int enumeration_threshold = 8) {
    if (n <= enumeration_threshold)
        return second_eulerian_row_enumerated(n);
    return second_eulerian_row_recurrence(n);
}

// Milne validity: w_1 = 1 and each entry exceeds the running maximum by at
// most 1 (restricted growth function).
inline bool is_rgf(const Word& w) {
    int mx = 0;
    for (int v : w) {
        if (v < 1 || v > mx + 1)
            return false;
        mx = std::max(mx, v);
    }
    return true;
}

// Streams restricted growth functions of the given length; with uniform = k
// > 0 only those in which every value used appears exactly k times. Pruned on
// both the per-value cap and the outstanding deficit.
template <typename F>
void for_each_rgf(int length, int uniform, F&& f) {
    if (length < 1)
        throw IndexTooSmall("word length must be at least 1");
    if (uniform < 0)
        throw NegativeIndex("uniformity is negative");
    if (uniform > 0 && length % uniform != 0)
        throw IncompatibleUniformity("length is not a multiple of the uniformity");
    Word w(static_cast<std::size_t>(length), 0);
    std::vector<int> counts(static_cast<std::size_t>(length) + 2, 0);
    // deficit: total copies still owed to values already in use
    auto rec = [&](auto&& self, int i, int mx, int deficit) -> void {
        if (i == length) {
            f(const_cast<const Word&>(w));
            return;
        }
        int rem = length - i;
        for (int v = 1; v <= mx + 1; ++v) {
            if (uniform > 0) {
                if (counts[static_cast<std::size_t>(v)] == uniform)
                    continue;
                int d = deficit - 1 + (v == mx + 1 ? uniform : 0);
                if (d > rem - 1)
                    continue;
                w[static_cast<std::size_t>(i)] = v;
                ++counts[static_cast<std::size_t>(v)];
                self(self, i + 1, std::max(mx, v), d);
                --counts[static_cast<std::size_t>(v)];
            } else {
                w[static_cast<std::size_t>(i)] = v;
                self(self, i + 1, std::max(mx, v), 0);
            }
        }
    };
    rec(rec, 0, 0, 0);
}

inline std::vector<Word> rgf_enumerate(int length, int uniform = 0) {
    std::vector<Word> out;
    for_each_rgf(length, uniform, [&](const Word& w) { out.push_back(w); });
    return out;
}

// Reverse complement of a k-uniform RGF on values 1..n:
//   w'_j = n + 1 - w_{kn+1-j}  (1-based).
// The image is the multiset word ordered by k-th occurrences; descents map to
// descents. Requires w to be an RGF using each of 1..n exactly k times.
inline Word rgf_reverse_complement(const Word& w, int n, int k) {
    if (n < 1 || k < 1)
        throw IndexTooSmall("reverse complement needs n >= 1 and k >= 1");
    if (static_cast<int>(w.size()) != n * k)
        throw NotUniform("word length is not n*k");
    if (!is_rgf(w))
        throw NotUniform("word is not a restricted growth function");
    std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
    for (int v : w) {
        if (v > n)
            throw NotUniform("word uses a value above n");
        ++counts[static_cast<std::size_t>(v)];
    }
    for (int v = 1; v <= n; ++v)
        if (counts[static_cast<std::size_t>(v)] != k)
            throw NotUniform("word is not k-uniform");
    Word out(w.size());
    for (std::size_t j = 0; j < w.size(); ++j)
        out[j] = n + 1 - w[w.size() - 1 - j];
    return out;
}

} // namespace ehrcomb
