#pragma once

#include "planeforge/group.hpp"
#include "planeforge/plane.hpp"

#include <utility>
#include <vector>

namespace planeforge {

// monochromatic complete subgraphs placed in K_V, one color per block
struct Packing {
    int vertex_count = 0;
    std::vector<std::pair<int, std::vector<int>>> blocks; // (color, vertex set)
};

struct PackingReport {
    Packing packing;
    bool tight = false;       // every vertex pair covered exactly once
    int covered_pairs = 0;    // pairs covered exactly once
    int duplicate_pairs = 0;
    int missing_pairs = 0;
};

PackingReport plane_to_packing(const Plane& p);

int pair_count(int n); // n(n-1)
// 1-based index of the ordered pair (i,j) in lexicographic order
int pair_index(int n, int i, int j);
std::pair<int, int> pair_at(int n, int index);

// the induced action of g on the n(n-1) ordered symbol pairs
PermSet pair_group(const PermSet& g);

// directed cycles (length >= 2) of every element, fixed points dropped
struct CycleCover {
    int vertex_count = 0;
    std::vector<std::vector<std::vector<int>>> element_cycles;
};

struct CycleCoverReport {
    CycleCover cover;
    bool complete = false; // every arc of the symmetric digraph covered once
    int covered_arcs = 0;
    int duplicate_arcs = 0;
    int missing_arcs = 0;
};

CycleCoverReport cycle_cover(const PermSet& pg);

} // namespace planeforge
