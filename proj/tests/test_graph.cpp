#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "planeforge/field.hpp"
#include "planeforge/graph.hpp"
#include "planeforge/sharp.hpp"
#include "support/test_util.hpp"

#include <map>
#include <set>

using namespace planeforge;
using pftest::perm;

namespace {

// direct pair-mapping oracle, independent of pair_group
std::vector<int> oracle_pair_images(const Permutation& sigma) {
    const int n = sigma.degree();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i != j) pairs.emplace_back(i, j);
        }
    }
    std::map<std::pair<int, int>, int> where;
    for (size_t k = 0; k < pairs.size(); ++k) where[pairs[k]] = static_cast<int>(k) + 1;
    std::vector<int> images(pairs.size());
    for (size_t k = 0; k < pairs.size(); ++k) {
        images[k] = where[{sigma(pairs[k].first), sigma(pairs[k].second)}];
    }
    return images;
}

// S_3 in its reference order: identity, the two rotations, the three swaps
PermSet s3_in_table_order() {
    return PermSet(3, {Permutation::identity(3), perm({2, 3, 1}), perm({3, 1, 2}),
                       perm({1, 3, 2}), perm({3, 2, 1}), perm({2, 1, 3})});
}

std::multiset<std::multiset<int>> cycle_length_profile(const CycleCoverReport& report,
                                                       const PermSet& source) {
    std::multiset<std::multiset<int>> profile;
    for (size_t e = 0; e < source.elements().size(); ++e) {
        if (source[static_cast<int>(e)] == Permutation::identity(source.degree())) continue;
        std::multiset<int> lengths;
        for (const auto& cycle : report.cover.element_cycles[e]) {
            lengths.insert(static_cast<int>(cycle.size()));
        }
        profile.insert(std::move(lengths));
    }
    return profile;
}

} // namespace

TEST_CASE("pair indexing") {
    CHECK(pair_index(3, 1, 2) == 1);
    CHECK(pair_index(3, 1, 3) == 2);
    CHECK(pair_index(3, 2, 1) == 3);
    CHECK(pair_index(3, 3, 2) == 6);
    for (int idx = 1; idx <= pair_count(4); ++idx) {
        const auto [i, j] = pair_at(4, idx);
        CHECK(pair_index(4, i, j) == idx);
    }
    CHECK_THROWS_AS(pair_index(3, 2, 2), std::invalid_argument);
}

TEST_CASE("pair group of S_3") {
    const PermSet pg = pair_group(s3_in_table_order());
    CHECK(pg.degree() == 6);
    CHECK(pg.size() == 6);
    CHECK(pg[0] == Permutation::identity(6));

    // (123) acts on lex-ordered pairs as (1 4 5)(2 3 6)
    CHECK(pg[1] == from_cycles({6, {{1, 4, 5}, {2, 3, 6}}}));
    CHECK(pg[1].images() == oracle_pair_images(perm({2, 3, 1})));
    for (int e = 0; e < pg.size(); ++e) {
        CHECK(pg[e].images() == oracle_pair_images(s3_in_table_order()[e]));
    }

    // sharply transitive on the six pair symbols
    CHECK(pg.is_transitive());
    for (int u = 1; u <= 6; ++u) {
        for (int v = 1; v <= 6; ++v) {
            int movers = 0;
            for (const auto& p : pg.elements()) {
                if (p(u) == v) ++movers;
            }
            CHECK(movers == 1);
        }
    }
}

TEST_CASE("the reference pair-group table is a relabeling of the lex one") {
    // reference ordering of the pairs: (1,2),(1,3),(2,3),(2,1),(3,1),(3,2),
    // which differs from lex order by swapping labels 3 and 4
    const Permutation relabel = perm({1, 2, 4, 3, 5, 6});
    const std::vector<std::vector<int>> reference_rows = {
        {1, 2, 3, 4, 5, 6}, // (1)(2)(3)(4)(5)(6)
        {3, 4, 5, 6, 1, 2}, // (135)(246)
        {5, 6, 1, 2, 3, 4}, // (153)(264)
        {2, 1, 6, 5, 4, 3}, // (12)(36)(45)
        {6, 5, 4, 3, 2, 1}, // (16)(25)(34)
        {4, 3, 2, 1, 6, 5}, // (14)(23)(56)
    };
    const PermSet pg = pair_group(s3_in_table_order());
    for (int e = 0; e < pg.size(); ++e) {
        const Permutation conjugated = compose(relabel, compose(pg[e], inverse(relabel)));
        CHECK(conjugated.images() == reference_rows[static_cast<size_t>(e)]);
    }
}

TEST_CASE("cycle cover of pair_group(S_3)") {
    const PermSet pg = pair_group(s3_in_table_order());
    const CycleCoverReport report = cycle_cover(pg);
    CHECK(report.complete);
    CHECK(report.covered_arcs == 30);
    CHECK(report.duplicate_arcs == 0);
    CHECK(report.missing_arcs == 0);

    const auto profile = cycle_length_profile(report, pg);
    const std::multiset<std::multiset<int>> expected = {
        {3, 3}, {3, 3}, {2, 2, 2}, {2, 2, 2}, {2, 2, 2}};
    CHECK(profile == expected);
}

TEST_CASE("cycle cover of pair_group(A_4) via the arc-count oracle") {
    const PermSet pg = pair_group(pftest::alternating_group(4));
    CHECK(pg.degree() == 12);
    const CycleCoverReport report = cycle_cover(pg);
    CHECK(report.complete);
    CHECK(report.covered_arcs == 132);

    // arc-count identity: total moved symbols equals the arc count
    int moved = 0;
    for (const auto& p : pg.elements()) {
        moved += pg.degree() - static_cast<int>(fixed_points(p).size());
    }
    CHECK(moved == 132);
}

TEST_CASE("identity alone never covers anything") {
    const PermSet trivial(6, {Permutation::identity(6)});
    const CycleCoverReport report = cycle_cover(trivial);
    CHECK_FALSE(report.complete);
    CHECK(report.covered_arcs == 0);
    CHECK(report.missing_arcs == 30);
}

TEST_CASE("cover completeness tracks sharp 2-transitivity") {
    const std::vector<PermSet> positives = {
        pftest::symmetric_group(3),
        pftest::alternating_group(4),
        agl1(FieldSpec::for_order(5)).group,
        agl1(FieldSpec::for_order(7)).group,
    };
    for (const auto& g : positives) {
        CHECK(check_sharp2t(g).s1_pass);
        CHECK(cycle_cover(pair_group(g)).complete);
    }

    const std::vector<PermSet> negatives = {
        pftest::symmetric_group(4),
        PermSet(3, {Permutation::identity(3), perm({2, 1, 3}), perm({2, 3, 1})}),
    };
    for (const auto& g : negatives) {
        CHECK_FALSE(check_sharp2t(g).s1_pass);
        CHECK_FALSE(cycle_cover(pair_group(g)).complete);
    }
}

TEST_CASE("fano lines tightly pack K_7") {
    const PackingReport report = plane_to_packing(build_plane(2));
    CHECK(report.tight);
    CHECK(report.covered_pairs == 21);
    CHECK(report.packing.blocks.size() == 7);

    const PackingReport p3 = plane_to_packing(build_plane(3));
    CHECK(p3.tight);
    CHECK(p3.covered_pairs == 78);
}

TEST_CASE("packing tightness and the point-pair axiom fail together") {
    Plane mutated = build_plane(2);
    mutated.lines[6] = mutated.lines[5];
    CHECK_FALSE(plane_to_packing(mutated).tight);
    CHECK_FALSE(verify_plane(mutated).point_pairs_ok);
}
