#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "ehrcomb/poset.hpp"
#include "ehrcomb/stirling_permutations.hpp"

using namespace ehrcomb;

namespace {

using CoverList = std::vector<std::pair<int, int>>;

// counts linear extensions by brute force over all permutations
long count_extensions_brute(const Poset& p) {
    std::vector<int> perm(static_cast<std::size_t>(p.size()));
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        std::vector<int> place(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            place[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
        bool ok = true;
        for (int a = 0; a < p.size() && ok; ++a)
            for (int b = 0; b < p.size() && ok; ++b)
                if (p.less(a, b) && place[static_cast<std::size_t>(a)] >= place[static_cast<std::size_t>(b)])
                    ok = false;
        if (ok)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

} // namespace

TEST_CASE("poset construction rejects bad input") {
    CHECK_THROWS_AS(Poset(2, {{0, 2}}), InvalidLabeling);
    CHECK_THROWS_AS(Poset(2, {{-1, 0}}), InvalidLabeling);
    CHECK_THROWS_AS(Poset(1, {{0, 0}}), CyclicRelation);
    CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {2, 0}}), CyclicRelation);
    CHECK_THROWS_AS(Poset(65, {}), SizeExceeded);
    CHECK_NOTHROW(Poset(0, {}));
}

TEST_CASE("cover relations are the irredundant ones") {
    // the transitive edge (0,2) is dropped
    Poset p(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.covers() == CoverList{{0, 1}, {1, 2}});
    CHECK(p == make_chain(3));
    CHECK(p.less(0, 2));
    CHECK_FALSE(p.less(2, 0));
    CHECK_FALSE(p.less(0, 0));
}

TEST_CASE("chains and antichains") {
    CHECK(make_chain(1).covers().empty());
    CHECK(make_chain(4).covers() == CoverList{{0, 1}, {1, 2}, {2, 3}});
    CHECK(make_antichain(3).covers().empty());
    CHECK(make_antichain(3).size() == 3);
    CHECK_FALSE(make_chain(3) == make_antichain(3));
    CHECK(make_chain(2).minimal_elements() == std::vector<int>{0});
    CHECK(make_chain(2).maximal_elements() == std::vector<int>{1});
    CHECK(make_antichain(2).minimal_elements() == std::vector<int>{0, 1});
}

TEST_CASE("comb shape") {
    Poset c3 = make_comb(3);
    CHECK(c3.size() == 6);
    CHECK(c3.covers() == CoverList{{0, 1}, {1, 3}, {2, 3}, {3, 5}, {4, 5}});
    CHECK(c3.minimal_elements() == std::vector<int>{0, 2, 4});
    CHECK(c3.maximal_elements() == std::vector<int>{5});
    CHECK(make_comb(1) == make_chain(2));
    // a comb is a bicomb with singleton lower parts and empty upper parts
    CHECK(make_comb(2) == bicomb_over(make_chain(1), Poset(0, {}), 2));
    CHECK(bicomb_over(make_chain(2), make_antichain(2), 1).covers() ==
          CoverList{{0, 1}, {1, 4}, {4, 2}, {4, 3}});
}

TEST_CASE("downsets") {
    Poset c2 = make_comb(2);
    CHECK(c2.strict_downset(3) == (std::uint64_t(1) << 0 | std::uint64_t(1) << 1 |
                                   std::uint64_t(1) << 2));
    CHECK(c2.strict_downset(0) == 0);
}

TEST_CASE("stirling poset shape and specializations") {
    Poset s23 = stirling_poset(2, 3);
    CHECK(s23.size() == 6);
    CHECK(s23.covers() == CoverList{{0, 1}, {1, 2}, {2, 4}, {3, 4}, {4, 5}});

    for (int k = 1; k <= 4; ++k)
        CHECK(stirling_poset(k, 2) == make_comb(k));
    CHECK(stirling_poset(4, 1) == make_antichain(4));
    CHECK(stirling_poset(1, 4) == make_chain(4));
    CHECK(stirling_poset(0, 3) == Poset(0, {}));
    CHECK_THROWS_AS(stirling_poset(-1, 2), NegativeIndex);
    CHECK_THROWS_AS(stirling_poset(2, 0), IndexTooSmall);
}

TEST_CASE("linear extension counts") {
    CHECK(linear_extension_count(make_chain(5)) == 1);
    CHECK(linear_extension_count(make_antichain(4)) == 24);
    // combs: products of odd numbers
    long expected[] = {1, 1, 3, 15};
    for (int n = 1; n <= 3; ++n)
        CHECK(linear_extension_count(make_comb(n)) == BigInt(expected[n]));
    // against the permutation filter
    for (const Poset& p : {make_comb(2), stirling_poset(2, 3), make_antichain(3),
                           bicomb_over(make_chain(2), make_antichain(2), 1)})
        CHECK(linear_extension_count(p) == BigInt(count_extensions_brute(p)));
    // extensions of the stirling poset are counted by stirling permutations
    for (int k = 1; k <= 2; ++k)
        for (int r = 1; r <= 3; ++r)
            CHECK(linear_extension_count(stirling_poset(k, r)) ==
                  BigInt(stirling_permutations(k, r).size()));
    CHECK(linear_extension_count(stirling_poset(3, 3)) == 28);
}

TEST_CASE("for_each_linear_extension yields valid orders") {
    Poset p = make_comb(2);
    long seen = 0;
    for_each_linear_extension(p, [&](const std::vector<int>& order) {
        ++seen;
        REQUIRE(order.size() == static_cast<std::size_t>(p.size()));
        std::vector<int> place(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            place[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b)
                if (p.less(a, b))
                    CHECK(place[static_cast<std::size_t>(a)] < place[static_cast<std::size_t>(b)]);
    });
    CHECK(seen == 3);
}

TEST_CASE("adjoin_max builds pyramids") {
    Poset p = adjoin_max(make_antichain(2));
    CHECK(p.size() == 3);
    CHECK(p.covers() == CoverList{{0, 2}, {1, 2}});
    CHECK(p.maximal_elements() == std::vector<int>{2});
    CHECK(adjoin_max(Poset(0, {})) == make_chain(1));
}

TEST_CASE("natural labelings") {
    Poset c2 = make_comb(2);
    NaturalLabeling lab = canonical_labeling(c2);
    CHECK(is_natural_labeling(c2, lab));
    // identity labels on a chain are natural; the reverse is not
    CHECK(is_natural_labeling(make_chain(3), NaturalLabeling{{1, 2, 3}}));
    CHECK_FALSE(is_natural_labeling(make_chain(3), NaturalLabeling{{3, 2, 1}}));
}

TEST_CASE("descent enumerator counts extensions by descents") {
    CHECK(descent_enumerator(make_comb(3)) == DescentVector{BigInt(1), BigInt(8), BigInt(6)});
    CHECK(descent_enumerator(make_chain(4)) == DescentVector{BigInt(1)});
    CHECK(descent_enumerator(make_antichain(3)) ==
          DescentVector{BigInt(1), BigInt(4), BigInt(1)});

    // the histogram does not depend on which natural labeling is used
    Poset p = bicomb_over(make_chain(1), make_antichain(2), 1); // 4 elements
    DescentVector base = descent_enumerator(p);
    std::vector<int> perm{1, 2, 3, 4};
    int naturals = 0;
    do {
        NaturalLabeling lab{perm};
        if (!is_natural_labeling(p, lab))
            continue;
        ++naturals;
        CHECK(descent_enumerator(p, lab) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(naturals > 1);

    CHECK_THROWS_AS(descent_enumerator(make_chain(2), NaturalLabeling{{2, 1}}),
                    InvalidLabeling);
}

TEST_CASE("isomorphism testing") {
    // comb(2) relabeled by e -> 3 - e
    Poset relabeled(4, {{3, 2}, {2, 0}, {1, 0}});
    CHECK(is_isomorphic(make_comb(2), relabeled));
    CHECK_FALSE(is_isomorphic(make_chain(3), make_antichain(3)));
    CHECK_FALSE(is_isomorphic(make_chain(3), make_chain(4)));
    CHECK(is_isomorphic(Poset(0, {}), Poset(0, {})));
    CHECK_THROWS_AS(is_isomorphic(make_chain(9), make_chain(9)), SizeExceeded);
}
