// Acceptance suite: one line per criterion, every tolerance pinned in code.

#include "planeforge/field.hpp"
#include "planeforge/graph.hpp"
#include "planeforge/io.hpp"
#include "planeforge/mols.hpp"
#include "planeforge/plane.hpp"
#include "planeforge/search.hpp"
#include "planeforge/sharp.hpp"
#include "support/test_util.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace planeforge;

namespace {

struct CriterionFailure {
    std::string message;
};

#define REQUIRE(cond, msg)                                        \
    do {                                                          \
        if (!(cond)) {                                            \
            throw CriterionFailure{std::string(msg)};             \
        }                                                         \
    } while (0)

int failures = 0;

void criterion(int number, const std::string& name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << "PASS criterion " << number << ": " << name << " (" << ms << " ms)\n";
    } catch (const CriterionFailure& f) {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << name << " -- " << f.message << '\n';
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << name << " -- exception: " << e.what()
                  << '\n';
    }
}

long long elapsed_ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& lines) {
    return {lines.begin(), lines.end()};
}

const Grid kSquares4[3] = {
    {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}},
    {{1, 3, 4, 2}, {2, 4, 3, 1}, {3, 1, 2, 4}, {4, 2, 1, 3}},
    {{1, 4, 2, 3}, {2, 3, 1, 4}, {3, 2, 4, 1}, {4, 1, 3, 2}},
};

const Grid kFundamental5 = {
    {1, 2, 3, 4, 5}, {2, 5, 4, 1, 3}, {3, 4, 2, 5, 1}, {4, 1, 5, 3, 2}, {5, 3, 1, 2, 4},
};

void criterion_1_golden_planes() {
    const auto start = std::chrono::steady_clock::now();
    const Plane fano = build_plane(2);
    const Plane p3 = build_plane(3);
    REQUIRE(fano.lines.size() == 7, "order 2 must have 7 lines");
    REQUIRE(p3.lines.size() == 13, "order 3 must have 13 lines");

    const Plane fano_ref = parse_plane_file(pftest::golden_path("fano_plane.txt"));
    const Plane p3_ref = parse_plane_file(pftest::golden_path("plane3.txt"));
    REQUIRE(as_set(fano.lines) == as_set(fano_ref.lines), "order-2 line sets differ");
    REQUIRE(as_set(p3.lines) == as_set(p3_ref.lines), "order-3 line sets differ");
    REQUIRE(elapsed_ms_since(start) < 1000, "construction exceeded 1 s");
}

void criterion_2_axiom_suite() {
    const auto start = std::chrono::steady_clock::now();
    for (int n : {2, 3, 4, 5, 7, 8, 9}) {
        const Plane p = build_plane(n);
        const AxiomReport report = verify_plane(p);
        REQUIRE(report.pass(), "axioms fail at order " + std::to_string(n));
        // lambda = 1 pair coverage is axiom iv of the report
        REQUIRE(report.point_pairs_ok, "pair coverage fails at order " + std::to_string(n));
    }
    REQUIRE(elapsed_ms_since(start) < 5000, "axiom suite exceeded 5 s");
}

void criterion_3_mols_golden() {
    const MolsSet from_a4 = mols_from_group(pftest::alternating_group(4));
    REQUIRE(from_a4.squares.size() == 3, "A_4 must yield 3 squares");
    REQUIRE(from_a4.fundamental_index == 0, "fundamental square must come first");
    for (int i = 0; i < 3; ++i) {
        REQUIRE(from_a4.squares[static_cast<size_t>(i)].grid() == kSquares4[i],
                "square " + std::to_string(i + 1) + " differs from the reference");
    }
    for (size_t i = 0; i < from_a4.squares.size(); ++i) {
        for (size_t j = i + 1; j < from_a4.squares.size(); ++j) {
            REQUIRE(are_orthogonal(from_a4.squares[i], from_a4.squares[j]),
                    "A_4 squares not pairwise orthogonal");
        }
    }

    const Agl1 g5 = agl1(FieldSpec::for_order(5));
    const auto normal = regular_normal_subgroup(g5.group);
    REQUIRE(normal.has_value(), "agl1(5) lost its regular normal subgroup");
    REQUIRE(fundamental_ols(*normal).grid() == kFundamental5,
            "order-5 fundamental square differs from the reference grid");
    const MolsSet from_g5 = mols_from_group(g5.group);
    REQUIRE(from_g5.squares.size() == 4, "agl1(5) must yield 4 squares");
    for (size_t i = 0; i < from_g5.squares.size(); ++i) {
        for (size_t j = i + 1; j < from_g5.squares.size(); ++j) {
            REQUIRE(are_orthogonal(from_g5.squares[i], from_g5.squares[j]),
                    "agl1(5) squares not pairwise orthogonal");
        }
    }
}

void criterion_4_metacyclic_relations() {
    const Agl1 g = agl1(FieldSpec::for_order(5));
    Permutation s5 = g.s;
    for (int i = 1; i < 5; ++i) s5 = compose(s5, g.s);
    REQUIRE(s5 == Permutation::identity(5), "s^5 != identity");
    Permutation t4 = g.t;
    for (int i = 1; i < 4; ++i) t4 = compose(t4, g.t);
    REQUIRE(t4 == Permutation::identity(5), "t^4 != identity");
    REQUIRE(compose(inverse(g.t), compose(g.s, g.t)) == compose(g.s, g.s),
            "t^-1 s t != s^2");
}

void criterion_5_coset_normalization() {
    const PermSet odd = parse_permset_file(pftest::golden_path("odd_coset_s4.txt"));
    REQUIRE(odd[0] == from_cycles({4, {{1, 2, 3, 4}}}), "pick element must be the 4-cycle");
    const PermSet normalized = normalize_coset(odd, 0);
    REQUIRE(normalized.same_elements(pftest::alternating_group(4)),
            "normalization does not produce A_4");
    REQUIRE(check_sharp2t(normalized).s1_pass, "normalized set fails S1");
    REQUIRE(all_pass(check_observations(normalized)), "normalized set fails an observation");
    const auto normal = regular_normal_subgroup(normalized);
    REQUIRE(normal.has_value(), "no regular normal subgroup found");
    REQUIRE(normal->elements().same_elements(pftest::klein_four()),
            "regular normal subgroup is not the Klein four group");
    REQUIRE(is_regular_normal(*normal), "subgroup is not regular normal");
}

void criterion_6_bruck_ryser() {
    const std::set<long long> expected = {6, 14, 21, 22, 30, 33, 38, 42, 46};
    std::set<long long> flagged;
    for (long long n = 2; n <= 50; ++n) {
        if (bruck_ryser_excluded(n)) flagged.insert(n);
    }
    REQUIRE(flagged == expected, "flagged set over 2..50 differs");
    for (long long n : {6, 14, 21, 22, 30, 33, 38, 42, 46}) {
        REQUIRE(bruck_ryser_excluded(n), std::to_string(n) + " must be excluded");
    }
    for (long long n : {10, 12, 15, 18, 20, 24, 26, 28}) {
        REQUIRE(!bruck_ryser_excluded(n), std::to_string(n) + " must not be excluded");
    }
}

void criterion_7_order6_nonexistence() {
    const auto pair_start = std::chrono::steady_clock::now();
    const auto pairs = search_mols_pair(6);
    REQUIRE(pairs.exhausted, "order-6 pair search did not exhaust");
    REQUIRE(pairs.found.empty(), "order-6 pair search found a witness");
    REQUIRE(elapsed_ms_since(pair_start) < 600000, "pair search exceeded 10 minutes");

    const auto group_start = std::chrono::steady_clock::now();
    const auto groups = search_transitive_subgroups(6, 30);
    REQUIRE(groups.exhausted, "order-30 subgroup search did not exhaust");
    REQUIRE(groups.found.empty(), "order-30 subgroup search found a witness");
    REQUIRE(elapsed_ms_since(group_start) < 60000, "subgroup search exceeded 1 minute");
}

void criterion_8_existence_witnesses() {
    const auto a4 = search_transitive_subgroups(4, 12);
    REQUIRE(a4.exhausted, "order-12 search did not exhaust");
    REQUIRE(a4.found.size() == 1, "expected exactly one order-12 subgroup");
    REQUIRE(a4.found[0].group.same_elements(pftest::alternating_group(4)),
            "the order-12 subgroup is not A_4");

    const auto f20 = search_transitive_subgroups(5, 20);
    REQUIRE(f20.exhausted, "order-20 search did not exhaust");
    REQUIRE(!f20.found.empty(), "no order-20 subgroups found");
    for (const auto& witness : f20.found) {
        REQUIRE(witness.sharp2t, "an order-20 subgroup is not sharply 2-transitive");
        REQUIRE(witness.regular_normal, "an order-20 subgroup lacks a regular normal subgroup");
        const auto normal = regular_normal_subgroup(witness.group);
        REQUIRE(normal.has_value() && normal->elements().size() == 5,
                "regular normal subgroup must have order 5");
    }

    const auto sharp3 = search_sharp2t_sets(3);
    bool has_s3 = false;
    for (const auto& witness : sharp3.found) {
        if (witness.same_elements(pftest::symmetric_group(3))) has_s3 = true;
    }
    REQUIRE(has_s3, "S_3 missing from the degree-3 witnesses");
}

void criterion_9_round_trip() {
    for (int n : {2, 3, 4, 5, 7, 8, 9}) {
        const Plane built = build_plane(n);
        const PermSet extracted = extract_permutations(built);
        const auto normal = regular_normal_subgroup(extracted);
        REQUIRE(normal.has_value(),
                "extracted set lacks a regular normal subgroup at order " + std::to_string(n));
        Plane rebuilt;
        rebuilt.order = n;
        rebuilt.lines = base_lines(n);
        for (auto& line : determinantal_lines(n, cosets(*normal))) {
            rebuilt.lines.push_back(std::move(line));
        }
        REQUIRE(rebuilt.lines == built.lines,
                "round trip differs at order " + std::to_string(n));
    }
}

void criterion_10_graph_equivalents() {
    const PackingReport fano = plane_to_packing(build_plane(2));
    REQUIRE(fano.tight, "Fano packing is not tight");
    REQUIRE(fano.covered_pairs == 21, "Fano packing must cover 21 edges once each");

    const PermSet s3(3, {Permutation::identity(3), pftest::perm({2, 3, 1}),
                         pftest::perm({3, 1, 2}), pftest::perm({1, 3, 2}),
                         pftest::perm({3, 2, 1}), pftest::perm({2, 1, 3})});
    const CycleCoverReport cover = cycle_cover(pair_group(s3));
    REQUIRE(cover.complete, "pair group of S_3 does not cover the digraph");
    REQUIRE(cover.covered_arcs == 30, "cover must have exactly 30 arcs");
    std::multiset<std::multiset<int>> profile;
    for (size_t e = 0; e < cover.cover.element_cycles.size(); ++e) {
        if (s3[static_cast<int>(e)] == Permutation::identity(3)) continue;
        std::multiset<int> lengths;
        for (const auto& cycle : cover.cover.element_cycles[e]) {
            lengths.insert(static_cast<int>(cycle.size()));
        }
        profile.insert(std::move(lengths));
    }
    const std::multiset<std::multiset<int>> expected = {
        {3, 3}, {3, 3}, {2, 2, 2}, {2, 2, 2}, {2, 2, 2}};
    REQUIRE(profile == expected, "cycle-length collections differ from the reference");

    const std::vector<PermSet> positives = {
        s3,
        pftest::alternating_group(4),
        agl1(FieldSpec::for_order(5)).group,
        agl1(FieldSpec::for_order(7)).group,
    };
    for (const auto& g : positives) {
        REQUIRE(check_sharp2t(g).s1_pass, "positive set fails S1");
        REQUIRE(cycle_cover(pair_group(g)).complete, "positive set lacks a complete cover");
    }
    const std::vector<PermSet> negatives = {
        pftest::symmetric_group(4),
        PermSet(3, {Permutation::identity(3), pftest::perm({2, 1, 3}), pftest::perm({2, 3, 1})}),
    };
    for (const auto& g : negatives) {
        REQUIRE(!check_sharp2t(g).s1_pass, "negative set passes S1");
        REQUIRE(!cycle_cover(pair_group(g)).complete, "negative set has a complete cover");
    }
}

void criterion_11_checker_independence() {
    // search witnesses revalidate through independent checker paths
    for (int n : {3, 4}) {
        for (const auto& witness : search_sharp2t_sets(n).found) {
            REQUIRE(check_sharp2t(witness).s1_pass, "sharp witness fails the checker");
        }
        for (const auto& pair : search_mols_pair(n).found) {
            REQUIRE(are_orthogonal(LatinSquare(pair.square), LatinSquare(pair.mate)),
                    "pair witness fails the orthogonality checker");
        }
    }
    for (const auto& witness : search_transitive_subgroups(4, 12).found) {
        const auto closed = closure(witness.group);
        REQUIRE(closed.has_value() && closed->same_elements(witness.group),
                "subgroup witness is not closed");
        REQUIRE(witness.group.is_transitive(), "subgroup witness is not transitive");
    }

    std::mt19937 rng(20250809);

    // plane mutations: deleting any line must flip the axiom verdict
    for (int trial = 0; trial < 100; ++trial) {
        const int order = std::vector<int>{2, 3, 4, 5}[rng() % 4];
        Plane p = build_plane(order);
        REQUIRE(verify_plane(p).pass(), "pristine plane must verify");
        const size_t victim = rng() % p.lines.size();
        p.lines.erase(p.lines.begin() + static_cast<long>(victim));
        REQUIRE(!verify_plane(p).pass(), "mutated plane still verifies");
    }

    // grid mutations: swapping two cells of one row must flip the MOLS verdict
    for (int trial = 0; trial < 100; ++trial) {
        const int order = std::vector<int>{4, 5, 7}[rng() % 3];
        MolsSet mols = mols_from_group(agl1(FieldSpec::for_order(order)).group);
        std::vector<Grid> grids;
        for (const auto& sq : mols.squares) grids.push_back(sq.grid());
        const size_t victim = rng() % grids.size();
        const size_t row = rng() % grids[victim].size();
        const size_t c1 = rng() % grids[victim].size();
        size_t c2 = rng() % grids[victim].size();
        while (c2 == c1) c2 = rng() % grids[victim].size();
        std::swap(grids[victim][row][c1], grids[victim][row][c2]);

        bool verdict = true;
        for (const auto& g : grids) {
            if (!is_latin(g).ok) verdict = false;
        }
        REQUIRE(!verdict, "cell swap must break the Latin property of the mutated square");
    }

    // permutation-set mutations: dropping one element must flip the S1 verdict
    for (int trial = 0; trial < 100; ++trial) {
        const int order = std::vector<int>{4, 5, 7, 8}[rng() % 4];
        const PermSet g = agl1(FieldSpec::for_order(order)).group;
        REQUIRE(check_sharp2t(g).s1_pass, "pristine set must pass S1");
        std::vector<Permutation> elems = g.elements();
        elems.erase(elems.begin() + static_cast<long>(rng() % elems.size()));
        REQUIRE(!check_sharp2t(PermSet(g.degree(), std::move(elems))).s1_pass,
                "mutated set still passes S1");
    }
}

} // namespace

int main() {
    criterion(1, "golden construction at orders 2 and 3", criterion_1_golden_planes);
    criterion(2, "axiom suite over the prime-power orders up to 9", criterion_2_axiom_suite);
    criterion(3, "reference MOLS from A_4 and agl1(5)", criterion_3_mols_golden);
    criterion(4, "metacyclic generator relations in agl1(5)", criterion_4_metacyclic_relations);
    criterion(5, "coset normalization of the odd permutations of S_4",
              criterion_5_coset_normalization);
    criterion(6, "bruck-ryser sieve over 2..50", criterion_6_bruck_ryser);
    criterion(7, "exhaustive nonexistence at order 6", criterion_7_order6_nonexistence);
    criterion(8, "existence witnesses from the searches", criterion_8_existence_witnesses);
    criterion(9, "plane round trip through permutation extraction", criterion_9_round_trip);
    criterion(10, "tight packing and complete cycle covers", criterion_10_graph_equivalents);
    criterion(11, "checker independence and mutation flips", criterion_11_checker_independence);

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
