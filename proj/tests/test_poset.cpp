#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "milab/monomial.hpp"
#include "milab/poset.hpp"

using namespace milab;

namespace {

// brute-force divisibility poset over explicit exponent vectors
FinitePoset divisibility_poset(const std::vector<std::vector<int>>& degrees) {
    int n = static_cast<int>(degrees.size());
    std::vector<std::pair<int, int>> rels;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            bool leq = true;
            for (size_t j = 0; j < degrees[a].size(); ++j)
                if (degrees[a][j] > degrees[b][j]) leq = false;
            if (leq) rels.push_back({a, b});
        }
    auto p = FinitePoset::from_relations(n, rels);
    std::vector<Monomial> labels;
    for (auto& d : degrees) labels.emplace_back(d);
    p.set_labels(labels);
    return p;
}

// 0̂=0, xy=1, yz=2, zx=3, xyz=4
FinitePoset triangle_poset() {
    return divisibility_poset({{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
}

FiniteLattice boolean_by_masks(int k) {
    std::vector<std::vector<int>> degs;
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<int> d(k, 0);
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) d[i] = 1;
        degs.push_back(d);
    }
    return FiniteLattice::from_poset(divisibility_poset(degs));
}

uint64_t splitmix(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("build_poset: singleton") {
    auto p = FinitePoset::from_relations(1, {});
    CHECK(p.size() == 1);
    CHECK(p.leq(0, 0));
    CHECK(length(p) == 0);
}

TEST_CASE("build_poset: transitivity is forced") {
    auto p = FinitePoset::from_relations(3, {{0, 1}, {1, 2}});
    CHECK(p.less(0, 2));
    CHECK(length(p) == 2);
}

TEST_CASE("build_poset: cycle detection") {
    CHECK_THROWS_AS(FinitePoset::from_relations(3, {{0, 1}, {1, 2}, {2, 0}}), Error);
    try {
        FinitePoset::from_relations(2, {{0, 1}, {1, 0}});
        FAIL("expected CycleDetected");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::cycle_detected);
    }
}

TEST_CASE("build_poset: lcm-lattice elements of the triangle ideal") {
    auto p = triangle_poset();
    auto l = FiniteLattice::from_poset(p);
    CHECK(l.bottom() == 0);
    CHECK(l.atoms() == std::vector<int>{1, 2, 3});
    // the three atoms are pairwise incomparable under a common top
    for (int a : {1, 2, 3})
        for (int b : {1, 2, 3})
            if (a != b) CHECK_FALSE(l.poset().leq(a, b));
    CHECK(l.top() == 4);
    CHECK(l.join(1, 2) == 4);
    CHECK(l.atomistic());
}

TEST_CASE("covers regenerate the comparability table") {
    auto p = triangle_poset();
    std::vector<std::pair<int, int>> cover_rels;
    for (int a = 0; a < p.size(); ++a)
        for (int b : p.upper_covers()[a]) cover_rels.push_back({a, b});
    auto q = FinitePoset::from_relations(p.size(), cover_rels);
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) CHECK(p.leq(a, b) == q.leq(a, b));
}

TEST_CASE("lattice_from_poset: 2-chain") {
    auto l = FiniteLattice::from_poset(FinitePoset::from_relations(2, {{0, 1}}));
    CHECK(l.atomistic());
    CHECK(l.atoms() == std::vector<int>{1});
    CHECK(l.meet(0, 1) == 0);
    CHECK(l.join(0, 1) == 1);
}

TEST_CASE("lattice_from_poset: diamond missing top is not a lattice") {
    try {
        FiniteLattice::from_poset(FinitePoset::from_relations(3, {{0, 1}, {0, 2}}));
        FAIL("expected NotALattice");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_a_lattice);
    }
}

TEST_CASE("rank") {
    auto l = FiniteLattice::from_poset(triangle_poset());
    CHECK(l.rank(l.bottom()) == 0);
    for (int a : l.atoms()) CHECK(l.rank(a) == 1);
    CHECK(l.rank(l.top()) == 3);
    CHECK_THROWS_AS(l.rank(99), Error);
}

TEST_CASE("length") {
    CHECK(length(triangle_poset()) == 2);
    for (int k = 1; k <= 6; ++k) CHECK(length(boolean_by_masks(k).poset()) == k);
    CHECK_THROWS_AS(length(FinitePoset{}), Error);
}

TEST_CASE("meet_irreducibles") {
    SUBCASE("2-chain: both elements") {
        auto l = FiniteLattice::from_poset(FinitePoset::from_relations(2, {{0, 1}}));
        CHECK(l.meet_irreducibles() == std::vector<int>{0, 1});
    }
    SUBCASE("boolean algebra on 2 atoms: atoms and top") {
        auto l = boolean_by_masks(2);
        CHECK(l.meet_irreducibles() == std::vector<int>{1, 2, 3});
    }
    SUBCASE("triangle lattice: atoms and top") {
        auto l = FiniteLattice::from_poset(triangle_poset());
        CHECK(l.meet_irreducibles() == std::vector<int>{1, 2, 3, 4});
    }
}

TEST_CASE("remove_element") {
    SUBCASE("removing an atom of B2 leaves a 3-chain") {
        auto l = boolean_by_masks(2);
        std::vector<int> orig;
        auto r = l.remove_element(1, &orig);
        CHECK(r.size() == 3);
        CHECK(length(r.poset()) == 2);
        CHECK(orig == std::vector<int>{0, 2, 3});
    }
    SUBCASE("bottom removal is rejected") {
        auto l = boolean_by_masks(2);
        try {
            l.remove_element(l.bottom());
            FAIL("expected CannotRemoveBottom");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::cannot_remove_bottom);
        }
    }
    SUBCASE("meet-reducible removal is rejected") {
        auto l = boolean_by_masks(3);
        // a singleton is the meet of two 2-subsets
        int singleton = 1;
        CHECK_FALSE(l.is_meet_irreducible(singleton));
        try {
            l.remove_element(singleton);
            FAIL("expected NotMeetIrreducible");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::not_meet_irreducible);
        }
    }
    SUBCASE("removing the top of B2 cannot produce a lattice") {
        auto l = boolean_by_masks(2);
        CHECK(l.is_meet_irreducible(3));
        CHECK_THROWS_AS(l.remove_element(3), Error);
    }
    SUBCASE("meet-irreducible non-top removal always revalidates") {
        for (int k = 2; k <= 4; ++k) {
            auto l = boolean_by_masks(k);
            for (int a : l.meet_irreducibles()) {
                if (a == l.bottom() || a == l.top()) continue;
                CHECK_NOTHROW(l.remove_element(a));
            }
        }
    }
}

TEST_CASE("meet_closure") {
    SUBCASE("boolean algebra from singletons and their union") {
        std::vector<uint64_t> subsets;
        auto l = meet_closure(2, {0b01, 0b10, 0b11}, &subsets);
        CHECK(l.size() == 4);
        CHECK(subsets == std::vector<uint64_t>{0b00, 0b01, 0b10, 0b11});
    }
    SUBCASE("triangle Betti image closes to an 8-element lattice") {
        std::vector<uint64_t> subsets;
        auto l = meet_closure(3, {0b011, 0b110, 0b101, 0b111}, &subsets);
        CHECK(l.size() == 8);
    }
    SUBCASE("empty family gives the single top") {
        std::vector<uint64_t> subsets;
        auto l = meet_closure(3, {}, &subsets);
        CHECK(l.size() == 1);
        CHECK(subsets == std::vector<uint64_t>{0b111});
    }
    SUBCASE("output is meet-closed and idempotent") {
        std::vector<uint64_t> subsets;
        meet_closure(4, {0b0110, 0b1100, 0b1010, 0b0111}, &subsets);
        for (uint64_t a : subsets)
            for (uint64_t b : subsets)
                CHECK(std::find(subsets.begin(), subsets.end(), a & b) != subsets.end());
        std::vector<uint64_t> again;
        meet_closure(4, subsets, &again);
        CHECK(again == subsets);
    }
}

TEST_CASE("canonical_form") {
    SUBCASE("relabeled 3-chains are isomorphic") {
        auto a = FinitePoset::from_relations(3, {{0, 1}, {1, 2}});
        auto b = FinitePoset::from_relations(3, {{2, 0}, {0, 1}});
        CHECK(canonical_form(a) == canonical_form(b));
        CHECK(is_isomorphic(a, b));
    }
    SUBCASE("3-chain vs 3-antichain") {
        auto a = FinitePoset::from_relations(3, {{0, 1}, {1, 2}});
        auto b = FinitePoset::from_relations(3, {});
        CHECK_FALSE(is_isomorphic(a, b));
    }
    SUBCASE("invariant under random relabeling") {
        auto base = triangle_poset();
        std::string expect = canonical_form(base);
        uint64_t seed = 12345;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> perm(base.size());
            for (int i = 0; i < base.size(); ++i) perm[i] = i;
            for (int i = base.size() - 1; i > 0; --i)
                std::swap(perm[i], perm[splitmix(seed) % (i + 1)]);
            std::vector<std::pair<int, int>> rels;
            for (int a = 0; a < base.size(); ++a)
                for (int b = 0; b < base.size(); ++b)
                    if (base.less(a, b)) rels.push_back({perm[a], perm[b]});
            auto shuffled = FinitePoset::from_relations(base.size(), rels);
            CHECK(canonical_form(shuffled) == expect);
        }
    }
    SUBCASE("symmetric posets canonicalize") {
        CHECK(canonical_form(boolean_by_masks(4).poset()) == canonical_form(boolean_by_masks(4).poset()));
        CHECK_FALSE(is_isomorphic(boolean_by_masks(3).poset(), triangle_poset()));
    }
}

TEST_CASE("open_lower_complex") {
    auto l = FiniteLattice::from_poset(triangle_poset());
    SUBCASE("an atom has an empty open interval") {
        auto k = open_lower_complex(l, 1);
        CHECK(k.vertex_count == 0);
        CHECK(k.face_count() == 1);  // only the empty face
    }
    SUBCASE("triangle top: three isolated vertices") {
        auto k = open_lower_complex(l, l.top());
        CHECK(k.vertex_count == 3);
        CHECK(k.faces_by_card.size() == 2);
        CHECK(k.faces_by_card[1].size() == 3);
    }
    SUBCASE("B3 top: hexagon") {
        auto b3 = boolean_by_masks(3);
        auto k = open_lower_complex(b3, b3.top());
        CHECK(k.vertex_count == 6);
        REQUIRE(k.faces_by_card.size() == 3);
        CHECK(k.faces_by_card[1].size() == 6);
        CHECK(k.faces_by_card[2].size() == 6);
    }
    SUBCASE("bottom is rejected") {
        try {
            open_lower_complex(l, l.bottom());
            FAIL("expected BottomExcluded");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::bottom_excluded);
        }
    }
}

TEST_CASE("decreasing_rank_chain") {
    SUBCASE("M = L gives a chain of length 0") {
        auto l = FiniteLattice::from_poset(triangle_poset());
        std::vector<int> all(l.size());
        for (int i = 0; i < l.size(); ++i) all[i] = i;
        auto chain = decreasing_rank_chain(l, all);
        CHECK(chain.removed.empty());
        CHECK(chain.lattices.size() == 1);
    }
    SUBCASE("B3 down to bottom+singletons+top removes the three 2-subsets") {
        auto l = boolean_by_masks(3);
        std::vector<int> m = {0, 1, 2, 4, 7};  // masks 000,001,010,100,111
        auto chain = decreasing_rank_chain(l, m);
        CHECK(chain.removed.size() == 3);
        CHECK(chain.lattices.size() == 4);
        std::set<int> removed(chain.removed.begin(), chain.removed.end());
        CHECK(removed == std::set<int>{3, 5, 6});
        for (auto& li : chain.lattices) CHECK(li.size() >= 5);
    }
    SUBCASE("M missing the bottom is rejected") {
        auto l = boolean_by_masks(2);
        try {
            decreasing_rank_chain(l, {1, 2, 3});
            FAIL("expected NotMeetClosed");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::not_meet_closed);
        }
    }
}

TEST_CASE("simplicial complex invariants") {
    SUBCASE("missing empty face is rejected") {
        CHECK_THROWS_AS(SimplicialComplexData::from_faces(2, {{0}, {1}}), Error);
    }
    SUBCASE("non-closed family is rejected") {
        CHECK_THROWS_AS(SimplicialComplexData::from_faces(2, {{}, {0, 1}}), Error);
    }
    SUBCASE("closure builds the full family") {
        auto k = SimplicialComplexData::closure(3, {{0, 1, 2}});
        CHECK(k.face_count() == 8);
    }
}
