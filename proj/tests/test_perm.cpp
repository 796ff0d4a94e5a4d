#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "planeforge/perm.hpp"
#include "support/test_util.hpp"

#include <random>

using namespace planeforge;
using pftest::perm;

namespace {

// independent composition oracle: chase each symbol through the raw rows
std::vector<int> chase_compose(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> out(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        out[i] = p[static_cast<size_t>(q[i] - 1)];
    }
    return out;
}

} // namespace

TEST_CASE("compose applies the right operand first") {
    const Permutation c1234 = from_cycles({4, {{1, 2, 3, 4}}});
    const Permutation c1432 = from_cycles({4, {{1, 4, 3, 2}}});
    CHECK(compose(c1432, c1234) == Permutation::identity(4));

    const Permutation p = perm({3, 1, 4, 2});
    CHECK(compose(Permutation::identity(4), p) == p);
    CHECK(compose(p, Permutation::identity(4)) == p);

    const Permutation c123 = from_cycles({3, {{1, 2, 3}}});
    const Permutation expected(chase_compose(c123.images(), c123.images()));
    CHECK(compose(c123, c123) == expected);
    CHECK(compose(c123, c123) == from_cycles({3, {{1, 3, 2}}}));
}

TEST_CASE("compose rejects mixed degrees") {
    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(agreement(Permutation::identity(3), Permutation::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("inverse") {
    CHECK(inverse(from_cycles({4, {{1, 2, 3, 4}}})) == from_cycles({4, {{1, 4, 3, 2}}}));
    CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
    const Permutation involution = perm({2, 1, 4, 3});
    CHECK(inverse(involution) == involution);
}

TEST_CASE("cycle form round trips and is canonical") {
    CHECK(to_cycles(perm({2, 1, 4, 3})) == CycleForm{4, {{1, 2}, {3, 4}}});
    CHECK(to_cycles(perm({1, 2, 3, 4})) == CycleForm{4, {{1}, {2}, {3}, {4}}});
    CHECK(to_cycles(perm({2, 3, 5, 4, 1})) == CycleForm{5, {{1, 2, 3, 5}, {4}}});
    CHECK(from_cycles({4, {{1, 2}, {3, 4}}}) == perm({2, 1, 4, 3}));

    CHECK(cycle_string(perm({2, 3, 5, 4, 1})) == "(1 2 3 5)(4)");
    CHECK(cycle_string(Permutation::identity(3)) == "(1)(2)(3)");
}

TEST_CASE("from_cycles rejects broken cycle lists") {
    CHECK_THROWS_AS(from_cycles({4, {{1, 2}, {2, 3}}}), std::invalid_argument);
    CHECK_THROWS_AS(from_cycles({4, {{1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(from_cycles({4, {{1, 2}, {3, 4, 5}}}), std::invalid_argument);
}

TEST_CASE("permutation constructor validates bijections") {
    CHECK_THROWS_AS(perm({1, 1, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(perm({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(perm({}), std::invalid_argument);
}

TEST_CASE("fixed points") {
    CHECK(fixed_points(perm({2, 1, 4, 3})).empty());
    CHECK(is_fixed_point_free(perm({2, 1, 4, 3})));
    CHECK(fixed_points(Permutation::identity(4)) == std::vector<int>{1, 2, 3, 4});
    CHECK(fixed_points(perm({2, 3, 1, 4})) == std::vector<int>{4});
}

TEST_CASE("agreement counting") {
    const Permutation p = perm({3, 1, 4, 2});
    CHECK(agreement(p, p) == 4);
    CHECK(agreement(Permutation::identity(4), perm({2, 1, 3, 4})) == 2);

    // max pairwise agreement over all 66 pairs of A_4 elements
    const auto a4 = pftest::alternating_group(4);
    int max_agreement = 0;
    for (int i = 0; i < a4.size(); ++i) {
        for (int j = i + 1; j < a4.size(); ++j) {
            max_agreement = std::max(max_agreement, agreement(a4[i], a4[j]));
        }
    }
    CHECK(max_agreement == 1);
}

TEST_CASE("order_of") {
    CHECK(order_of(Permutation::identity(4)) == 1);
    CHECK(order_of(from_cycles({5, {{1, 2, 3, 4, 5}}})) == 5);
    CHECK(order_of(perm({2, 1, 4, 5, 3})) == 6);
}

TEST_CASE("random properties: inverse, round trip, agreement identity") {
    std::mt19937 rng(20240911);
    for (int degree = 2; degree <= 12; ++degree) {
        for (int trial = 0; trial < 1000; ++trial) {
            const Permutation p = pftest::random_permutation(rng, degree);
            CHECK(from_cycles(to_cycles(p)) == p);

            if (trial >= 50) continue; // the remaining checks are O(n) each anyway
            const Permutation q = pftest::random_permutation(rng, degree);
            CHECK(compose(p, inverse(p)) == Permutation::identity(degree));
            CHECK(compose(inverse(p), p) == Permutation::identity(degree));
            const int fixed = static_cast<int>(fixed_points(compose(inverse(q), p)).size());
            CHECK(agreement(p, q) == fixed);
        }
    }
}

TEST_CASE("row string") {
    CHECK(row_string(perm({2, 1, 4, 3})) == "2 1 4 3");
}
