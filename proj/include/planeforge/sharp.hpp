#pragma once

#include "planeforge/group.hpp"

#include <string>
#include <vector>

namespace planeforge {

// an ordered value pair seen the wrong number of times in an ordered column pair
struct S1Violation {
    int col_k = 0, col_l = 0;
    int val_i = 0, val_j = 0;
    int count = 0;
};

struct ObservationResult {
    std::string id;     // "i", "ii", "iii", "v", "vi"
    bool pass = false;
    std::string detail; // witness on failure, summary on success
};

struct SharpReport {
    int degree = 0;
    int size = 0;
    bool s1_pass = false;
    int s1_violation_total = 0;
    std::vector<S1Violation> s1_violations; // capped sample of the violations
    int fpf_count = 0;
    bool contains_identity = false;
    std::vector<ObservationResult> observations; // filled by check_observations
};

// S1: every ordered value pair appears exactly once in every ordered column
// pair. Computed both by direct counting and by the pairwise-agreement
// shortcut; the two must agree.
SharpReport check_sharp2t(const PermSet& s);

struct RepeatedFixedPair {
    int a = 0, b = 0;
    int first_element = 0, second_element = 0;
};
struct RepeatedTwoCycle {
    int a = 0, b = 0;
    int first_element = 0, second_element = 0;
};
// two elements sharing the consecutive arcs a -> b -> c
struct RepeatedChain {
    int a = 0, b = 0, c = 0;
    int first_element = 0, second_element = 0;
};

struct CycleDiagnostics {
    std::vector<RepeatedFixedPair> repeated_fixed_pairs;
    std::vector<RepeatedTwoCycle> repeated_two_cycles;
    std::vector<RepeatedChain> repeated_chains;

    bool clean() const {
        return repeated_fixed_pairs.empty() && repeated_two_cycles.empty() &&
               repeated_chains.empty();
    }
};

// S2: the cycle-form repetition rules
CycleDiagnostics check_cycle_conditions(const PermSet& s);

// { inverse(s[pick]) * x : x in s }, preserving element order
PermSet normalize_coset(const PermSet& s, int pick = 0);

// The simple observations on a sharply 2-transitive set containing the
// identity. Throws std::invalid_argument naming the precondition when the
// input is not such a set.
std::vector<ObservationResult> check_observations(const PermSet& s);

bool all_pass(const std::vector<ObservationResult>& results);

} // namespace planeforge
