#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ehrcomb/stirling_permutations.hpp"

namespace ehrcomb {

// Finite poset on elements 0..size-1. Any acyclic set of strict relations may
// be supplied; the constructor takes the transitive closure and stores the
// irredundant cover relation, so equal posets compare equal regardless of how
// the input was phrased. Capacity is 64 elements (down-sets live in one
// machine word).
class Poset {
public:
    Poset() = default;

    Poset(int size, const std::vector<std::pair<int, int>>& relations) : size_(size) {
        if (size < 0)
            throw NegativeIndex("poset size is negative");
        if (size > 64)
            throw SizeExceeded("poset has more than 64 elements");
        std::vector<std::vector<int>> succ(static_cast<std::size_t>(size));
        std::vector<int> indeg(static_cast<std::size_t>(size), 0);
        for (auto [a, b] : relations) {
            if (a < 0 || b < 0 || a >= size || b >= size)
                throw InvalidLabeling("relation endpoint out of range");
            if (a == b)
                throw CyclicRelation("element related to itself");
            succ[static_cast<std::size_t>(a)].push_back(b);
            ++indeg[static_cast<std::size_t>(b)];
        }

        // Kahn topological order; doubles as the cycle check.
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(size));
        std::vector<int> ready;
        for (int e = 0; e < size; ++e)
            if (indeg[static_cast<std::size_t>(e)] == 0)
                ready.push_back(e);
        while (!ready.empty()) {
            int e = ready.back();
            ready.pop_back();
            order.push_back(e);
            for (int t : succ[static_cast<std::size_t>(e)])
                if (--indeg[static_cast<std::size_t>(t)] == 0)
                    ready.push_back(t);
        }
        if (static_cast<int>(order.size()) != size)
            throw CyclicRelation("relations contain a cycle");

        below_.assign(static_cast<std::size_t>(size), 0);
        for (int e : order)
            for (int t : succ[static_cast<std::size_t>(e)])
                below_[static_cast<std::size_t>(t)] |= below_[static_cast<std::size_t>(e)] | (std::uint64_t{1} << e);

        for (int b = 0; b < size; ++b)
            for (int a = 0; a < size; ++a)
                if (less(a, b)) {
                    bool cover = true;
                    std::uint64_t between = below_[static_cast<std::size_t>(b)];
                    while (between && cover) {
                        int z = std::countr_zero(between);
                        between &= between - 1;
                        if (z != a && less(a, z))
                            cover = false;
                    }
                    if (cover)
                        covers_.emplace_back(a, b);
                }
        std::sort(covers_.begin(), covers_.end());
    }

    int size() const { return size_; }
    bool empty() const { return size_ == 0; }

    // Irredundant cover pairs (a, b) with a covered by b, sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    // Strict order a < b.
    bool less(int a, int b) const {
        return (below_[static_cast<std::size_t>(b)] >> a) & 1;
    }

    // Bitmask of elements strictly below e.
    std::uint64_t strict_downset(int e) const { return below_[static_cast<std::size_t>(e)]; }

    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (int e = 0; e < size_; ++e)
            if (below_[static_cast<std::size_t>(e)] == 0)
                out.push_back(e);
        return out;
    }

    std::vector<int> maximal_elements() const {
        std::vector<bool> has_upper(static_cast<std::size_t>(size_), false);
        for (auto [a, b] : covers_)
            has_upper[static_cast<std::size_t>(a)] = true;
        std::vector<int> out;
        for (int e = 0; e < size_; ++e)
            if (!has_upper[static_cast<std::size_t>(e)])
                out.push_back(e);
        return out;
    }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.size_ == b.size_ && a.covers_ == b.covers_;
    }
    friend bool operator!=(const Poset& a, const Poset& b) { return !(a == b); }

private:
    int size_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::uint64_t> below_;
};

inline Poset make_chain(int m) {
    if (m < 0)
        throw NegativeIndex("chain length is negative");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < m; ++i)
        covers.emplace_back(i, i + 1);
    return Poset(m, covers);
}

inline Poset make_antichain(int m) {
    if (m < 0)
        throw NegativeIndex("antichain size is negative");
    return Poset(m, {});
}

// n copies of (p below a connector, r above it), connectors forming a chain:
// copy c occupies ids [c*block, (c+1)*block) with block = |p| + |r| + 1, laid
// out as p's elements, then r's elements, then the connector. Every maximal
// element of p sits below the copy's connector; every minimal element of r
// sits above it; consecutive connectors are comparable.
inline Poset bicomb_over(const Poset& p, const Poset& r, int n) {
    if (n < 0)
        throw NegativeIndex("number of copies is negative");
    int block = p.size() + r.size() + 1;
    std::vector<std::pair<int, int>> rel;
    int prev_conn = -1;
    for (int c = 0; c < n; ++c) {
        int base = c * block;
        int rbase = base + p.size();
        int conn = base + p.size() + r.size();
        for (auto [a, b] : p.covers())
            rel.emplace_back(base + a, base + b);
        for (auto [a, b] : r.covers())
            rel.emplace_back(rbase + a, rbase + b);
        for (int a : p.maximal_elements())
            rel.emplace_back(base + a, conn);
        for (int b : r.minimal_elements())
            rel.emplace_back(conn, rbase + b);
        if (prev_conn >= 0)
            rel.emplace_back(prev_conn, conn);
        prev_conn = conn;
    }
    return Poset(n * block, rel);
}

inline Poset comb_over(const Poset& p, int n) { return bicomb_over(p, Poset(), n); }

// The comb with n spine elements, each with one pendant tooth below it.
inline Poset make_comb(int n) { return comb_over(make_chain(1), n); }

// Adds a new top element above everything (ids of p are preserved; the new
// maximum gets id |p|).
inline Poset adjoin_max(const Poset& p) {
    std::vector<std::pair<int, int>> rel = p.covers();
    for (int a : p.maximal_elements())
        rel.emplace_back(a, p.size());
    return Poset(p.size() + 1, rel);
}

// The poset whose order polytope has the descent enumerator of r-Stirling
// permutations of order k as its h*-vector: a spine chain of k(r-1) elements
// with k pendant teeth, tooth i attached below spine position (i-1)(r-1)+1.
// Specializations: r = 2 gives the comb, r = 1 the k-antichain, k = 1 the
// r-chain. Ids are copy-major (tooth, then its r-1 spine elements).
inline Poset stirling_poset(int k, int r) {
    if (k < 0)
        throw NegativeIndex("number of copies is negative");
    if (r < 1)
        throw IndexTooSmall("multiplicity must be at least 1");
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < k; ++i) {
        int base = i * r;
        if (r > 1)
            rel.emplace_back(base, base + 1); // tooth below its spine segment
        for (int j = 1; j + 1 < r; ++j)
            rel.emplace_back(base + j, base + j + 1);
        if (i > 0 && r > 1)
            rel.emplace_back(base - 1, base + 1); // spine continues across copies
    }
    return Poset(k * r, rel);
}

// Streams linear extensions as element sequences (predecessors first). The
// empty poset has exactly one (empty) extension. Deterministic order, but
// callers must not rely on which.
template <typename F>
void for_each_linear_extension(const Poset& p, F&& f) {
    int n = p.size();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::uint64_t placed = 0;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(order.size()) == n) {
            f(const_cast<const std::vector<int>&>(order));
            return;
        }
        for (int e = 0; e < n; ++e) {
            std::uint64_t bit = std::uint64_t{1} << e;
            if ((placed & bit) == 0 && (p.strict_downset(e) & ~placed) == 0) {
                placed |= bit;
                order.push_back(e);
                self(self);
                order.pop_back();
                placed &= ~bit;
            }
        }
    };
    rec(rec);
}

inline BigInt linear_extension_count(const Poset& p) {
    BigInt c(0);
    for_each_linear_extension(p, [&](const std::vector<int>&) { ++c; });
    return c;
}

// Order-preserving bijection onto 1..size; labels[e] is the label of element e.
struct NaturalLabeling {
    std::vector<int> labels;
};

// Natural labeling from the smallest-id-first topological order.
inline NaturalLabeling canonical_labeling(const Poset& p) {
    int n = p.size();
    NaturalLabeling l;
    l.labels.assign(static_cast<std::size_t>(n), 0);
    std::uint64_t placed = 0;
    for (int step = 1; step <= n; ++step) {
        for (int e = 0; e < n; ++e) {
            std::uint64_t bit = std::uint64_t{1} << e;
            if ((placed & bit) == 0 && (p.strict_downset(e) & ~placed) == 0) {
                placed |= bit;
                l.labels[static_cast<std::size_t>(e)] = step;
                break;
            }
        }
    }
    return l;
}

inline bool is_natural_labeling(const Poset& p, const NaturalLabeling& l) {
    int n = p.size();
    if (static_cast<int>(l.labels.size()) != n)
        return false;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int v : l.labels) {
        if (v < 1 || v > n || used[static_cast<std::size_t>(v)])
            return false;
        used[static_cast<std::size_t>(v)] = true;
    }
    for (auto [a, b] : p.covers())
        if (l.labels[static_cast<std::size_t>(a)] > l.labels[static_cast<std::size_t>(b)])
            return false;
    return true;
}

// Histogram of linear extensions by descent count of their label words; the
// result does not depend on which natural labeling is chosen.
inline DescentVector descent_enumerator(const Poset& p, const NaturalLabeling& l) {
    if (!is_natural_labeling(p, l))
        throw InvalidLabeling("labels are not an order-preserving bijection onto 1..n");
    std::vector<BigInt> hist(static_cast<std::size_t>(std::max(p.size(), 1)), BigInt(0));
    Word word(static_cast<std::size_t>(p.size()));
    for_each_linear_extension(p, [&](const std::vector<int>& order) {
        for (std::size_t i = 0; i < order.size(); ++i)
            word[i] = l.labels[static_cast<std::size_t>(order[i])];
        ++hist[static_cast<std::size_t>(descent_count(word))];
    });
    return descent_histogram_trim(std::move(hist));
}

inline DescentVector descent_enumerator(const Poset& p) {
    return descent_enumerator(p, canonical_labeling(p));
}

// Brute-force isomorphism test; restricted to at most 8 elements.
inline bool is_isomorphic(const Poset& a, const Poset& b) {
    if (a.size() != b.size())
        return false;
    if (a.size() > 8)
        throw SizeExceeded("isomorphism search is limited to 8 elements");
    if (a.covers().size() != b.covers().size())
        return false;
    int n = a.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> target = b.covers();
    do {
        std::vector<std::pair<int, int>> mapped;
        mapped.reserve(a.covers().size());
        for (auto [x, y] : a.covers())
            mapped.emplace_back(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace ehrcomb
