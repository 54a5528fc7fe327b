#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "ehrcomb/stirling_permutations.hpp"

using namespace ehrcomb;

namespace {

std::vector<Word> sorted(std::vector<Word> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// multiset permutations of {1^r..n^r} passing the betweenness filter
std::vector<Word> stirling_by_filter(int n, int r) {
    std::vector<Word> out;
    for_each_multiset_permutation(n, r, [&](const Word& w) {
        if (is_stirling_word(w))
            out.push_back(w);
    });
    return sorted(std::move(out));
}

// all words over {1..length} of that length, filtered
std::vector<Word> rgf_by_filter(int length, int uniform) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(length), 1);
    for (;;) {
        bool ok = is_rgf(w);
        if (ok && uniform > 0) {
            std::vector<int> counts(static_cast<std::size_t>(length) + 1, 0);
            for (int v : w)
                ++counts[static_cast<std::size_t>(v)];
            for (int v = 1; v <= length && ok; ++v)
                ok = counts[static_cast<std::size_t>(v)] == 0 ||
                     counts[static_cast<std::size_t>(v)] == uniform;
        }
        if (ok)
            out.push_back(w);
        std::size_t i = 0;
        while (i < w.size() && w[i] == length) {
            w[i] = 1;
            ++i;
        }
        if (i == w.size())
            break;
        ++w[i];
    }
    return sorted(std::move(out));
}

} // namespace

TEST_CASE("descent statistics") {
    CHECK(descent_positions({1, 2, 1, 3, 3, 2}) == std::vector<int>{2, 5});
    CHECK(descent_positions({2, 1, 1, 3, 2, 3}) == std::vector<int>{1, 4});
    CHECK(descent_count({1, 2, 1, 3, 3, 2}) == 2);
    CHECK(descent_count({2, 1, 1, 3, 2, 3}) == 2);
    CHECK(descent_positions({1}).empty());
    CHECK(descent_count({5, 4, 3, 2, 1}) == 4);
    CHECK_THROWS_AS(descent_positions({}), EmptyWord);
}

TEST_CASE("betweenness test") {
    CHECK(is_stirling_word({1, 1, 2, 2}));
    CHECK(is_stirling_word({1, 2, 2, 1}));
    CHECK_FALSE(is_stirling_word({1, 2, 1, 2}));
    CHECK_FALSE(is_stirling_word({2, 1, 2}));
    CHECK(is_stirling_word({2, 2, 1, 1}));
    CHECK(is_stirling_word({}));
    CHECK(is_stirling_word({3, 3, 3}));
}

TEST_CASE("stirling permutation generator agrees with the betweenness filter") {
    for (int n = 0; n <= 4; ++n)
        CHECK(sorted(stirling_permutations(n, 2)) == stirling_by_filter(n, 2));
    for (int n = 0; n <= 3; ++n)
        CHECK(sorted(stirling_permutations(n, 3)) == stirling_by_filter(n, 3));
    CHECK(sorted(stirling_permutations(2, 1)) == stirling_by_filter(2, 1));
}

TEST_CASE("stirling permutation counts") {
    for (int n = 1; n <= 5; ++n)
        CHECK(BigInt(stirling_permutations(n, 2).size()) == double_factorial(2 * n - 1));
    // order-r counts are the products (r*0+1)(r*1+1)...(r*(n-1)+1)
    for (int r = 1; r <= 4; ++r)
        for (int n = 0; n <= 3; ++n) {
            std::size_t expected = 1;
            for (int i = 0; i < n; ++i)
                expected *= static_cast<std::size_t>(r * i + 1);
            CHECK(stirling_permutations(n, r).size() == expected);
        }
    CHECK(stirling_permutations(0, 2) == std::vector<Word>{Word{}});
    CHECK(sorted(stirling_permutations(2, 2)) ==
          std::vector<Word>{{1, 1, 2, 2}, {1, 2, 2, 1}, {2, 2, 1, 1}});
    CHECK_THROWS_AS(stirling_permutations(-1, 2), NegativeIndex);
    CHECK_THROWS_AS(stirling_permutations(2, 0), IndexTooSmall);
}

TEST_CASE("second-order eulerian rows") {
    CHECK(second_eulerian_row_enumerated(1) == DescentVector{BigInt(1)});
    CHECK(second_eulerian_row_enumerated(2) == DescentVector{BigInt(1), BigInt(2)});
    CHECK(second_eulerian_row_enumerated(3) == DescentVector{BigInt(1), BigInt(8), BigInt(6)});
    CHECK(second_eulerian_row_enumerated(4) ==
          DescentVector{BigInt(1), BigInt(22), BigInt(58), BigInt(24)});
    // enumeration and recurrence agree on an overlap window
    for (int n = 1; n <= 6; ++n)
        CHECK(second_eulerian_row_enumerated(n) == second_eulerian_row_recurrence(n));
    // the gate switches paths without changing values
    CHECK(second_eulerian_row(5, 3) == second_eulerian_row_enumerated(5));
    CHECK(second_eulerian_row(5, 8) == second_eulerian_row_recurrence(5));
    // row sums count all words
    for (int n = 1; n <= 6; ++n) {
        BigInt s(0);
        for (const BigInt& e : second_eulerian_row_recurrence(n))
            s += e;
        CHECK(s == double_factorial(2 * n - 1));
    }
    CHECK_THROWS_AS(second_eulerian_row_enumerated(0), IndexTooSmall);
    CHECK_THROWS_AS(second_eulerian_row_recurrence(0), IndexTooSmall);
}

TEST_CASE("ordering by j-th occurrence") {
    CHECK(is_ordered_by_jth_occurrence({1, 1, 2, 2}, 1));
    CHECK(is_ordered_by_jth_occurrence({1, 2, 2, 1}, 1));
    CHECK_FALSE(is_ordered_by_jth_occurrence({1, 2, 2, 1}, 2));
    CHECK_FALSE(is_ordered_by_jth_occurrence({2, 2, 1, 1}, 1));
    CHECK_THROWS_AS(is_ordered_by_jth_occurrence({1, 2}, 0), IndexTooSmall);

    CHECK(sorted(ordered_by_jth_occurrence(2, 2, 1)) ==
          std::vector<Word>{{1, 1, 2, 2}, {1, 2, 1, 2}, {1, 2, 2, 1}});
    CHECK(sorted(ordered_by_jth_occurrence(2, 2, 2)) ==
          std::vector<Word>{{1, 1, 2, 2}, {1, 2, 1, 2}, {2, 1, 1, 2}});
    CHECK(ordered_by_jth_occurrence(0, 2, 1) == std::vector<Word>{Word{}});
    CHECK_THROWS_AS(ordered_by_jth_occurrence(2, 2, 3), IndexTooSmall);
}

TEST_CASE("restricted growth functions") {
    CHECK(is_rgf({1, 1, 2, 1, 3}));
    CHECK(is_rgf({1, 2, 3, 4}));
    CHECK_FALSE(is_rgf({2, 1}));
    CHECK_FALSE(is_rgf({1, 3}));
    CHECK_FALSE(is_rgf({1, 0}));
    CHECK(is_rgf({}));

    for (int length = 1; length <= 6; ++length)
        CHECK(sorted(rgf_enumerate(length)) == rgf_by_filter(length, 0));
    CHECK(sorted(rgf_enumerate(6, 2)) == rgf_by_filter(6, 2));
    CHECK(sorted(rgf_enumerate(6, 3)) == rgf_by_filter(6, 3));
    CHECK(sorted(rgf_enumerate(4, 1)) == rgf_by_filter(4, 1));

    CHECK(rgf_enumerate(6, 2).size() == 15);  // pairings of a 6-set
    CHECK(rgf_enumerate(6, 3).size() == 10);  // 3-uniform partitions of a 6-set
    CHECK(rgf_enumerate(4, 1).size() == 1);   // only 1234
    CHECK(rgf_enumerate(6).size() == 203);    // Bell number

    CHECK_THROWS_AS(rgf_enumerate(0), IndexTooSmall);
    CHECK_THROWS_AS(rgf_enumerate(5, 2), IncompatibleUniformity);
    CHECK_THROWS_AS(rgf_enumerate(4, -1), NegativeIndex);
}

TEST_CASE("reverse complement of uniform restricted growth functions") {
    CHECK(rgf_reverse_complement({1, 2, 1, 3, 3, 2}, 3, 2) == Word{2, 1, 1, 3, 2, 3});
    // every image is ordered by the k-th occurrences, with descent count kept
    for (const Word& w : rgf_enumerate(6, 2)) {
        Word img = rgf_reverse_complement(w, 3, 2);
        CHECK(is_ordered_by_jth_occurrence(img, 2));
        CHECK(descent_count(img) == descent_count(w));
    }
    CHECK_THROWS_AS(rgf_reverse_complement({1, 1}, 2, 2), NotUniform);        // wrong length
    CHECK_THROWS_AS(rgf_reverse_complement({2, 1, 1, 2}, 2, 2), NotUniform);  // not an RGF
    CHECK_THROWS_AS(rgf_reverse_complement({1, 1, 1, 1}, 2, 2), NotUniform);  // not 2-uniform
    CHECK_THROWS_AS(rgf_reverse_complement({1, 2, 1, 2}, 2, 0), IndexTooSmall);
}

TEST_CASE("descent histogram trimming") {
    CHECK(descent_histogram_trim({BigInt(1), BigInt(0), BigInt(2), BigInt(0)}) ==
          DescentVector{BigInt(1), BigInt(0), BigInt(2)});
    CHECK(descent_histogram_trim({BigInt(0), BigInt(0)}).empty());
}
