#pragma once

#include "planeforge/group.hpp"
#include "planeforge/mols.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace planeforge {

struct SearchConfig {
    int workers = 0;               // 0: PLANEFORGE_WORKERS env or hardware count
    int max_found = 0;             // 0: unlimited
    std::uint64_t max_nodes = 0;   // 0: unlimited; checked per branch and per block
};

// exhausted=true plus an empty witness list is a nonexistence certificate
template <typename Witness>
struct SearchOutcome {
    std::string target;
    std::vector<Witness> found;
    bool exhausted = false;
    std::uint64_t nodes_visited = 0;
    std::chrono::milliseconds elapsed{0};
};

struct MolsPair {
    Grid square;
    Grid mate;
};

struct SubgroupWitness {
    PermSet group;
    bool sharp2t = false;
    bool regular_normal = false;
};

int resolve_workers(int requested);

// All sharply 2-transitive sets of degree n that contain the identity
// (every sharp set is a one-sided translate of such a set).
SearchOutcome<PermSet> search_sharp2t_sets(int n, const SearchConfig& config = {});

// Orthogonal pairs of order-n Latin squares, the first square reduced and the
// mate row-normalized; exhaustion certifies that no orthogonal pair exists.
SearchOutcome<MolsPair> search_mols_pair(int n, const SearchConfig& config = {});

// Transitive subgroups of S_n of exactly the target order, generated by
// element pairs, deduplicated by element set.
SearchOutcome<SubgroupWitness> search_transitive_subgroups(int n, int target_order,
                                                           const SearchConfig& config = {});

} // namespace planeforge
