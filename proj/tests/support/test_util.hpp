#pragma once

#include "planeforge/group.hpp"
#include "planeforge/perm.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace pftest {

inline planeforge::Permutation perm(std::vector<int> images) {
    return planeforge::Permutation(std::move(images));
}

inline std::vector<planeforge::Permutation> all_permutations(int n) {
    std::vector<int> row(static_cast<size_t>(n));
    std::iota(row.begin(), row.end(), 1);
    std::vector<planeforge::Permutation> out;
    do {
        out.emplace_back(row);
    } while (std::next_permutation(row.begin(), row.end()));
    return out;
}

inline bool is_even(const planeforge::Permutation& p) {
    int transpositions = 0;
    for (const auto& cycle : planeforge::to_cycles(p).cycles) {
        transpositions += static_cast<int>(cycle.size()) - 1;
    }
    return transpositions % 2 == 0;
}

inline planeforge::PermSet symmetric_group(int n) {
    return planeforge::PermSet(n, all_permutations(n));
}

inline planeforge::PermSet alternating_group(int n) {
    std::vector<planeforge::Permutation> evens;
    for (const auto& p : all_permutations(n)) {
        if (is_even(p)) evens.push_back(p);
    }
    return planeforge::PermSet(n, std::move(evens));
}

inline planeforge::PermSet odd_permutations(int n) {
    std::vector<planeforge::Permutation> odds;
    for (const auto& p : all_permutations(n)) {
        if (!is_even(p)) odds.push_back(p);
    }
    return planeforge::PermSet(n, std::move(odds));
}

inline planeforge::PermSet klein_four() {
    using planeforge::Permutation;
    std::vector<Permutation> elems = {
        Permutation::identity(4),
        perm({2, 1, 4, 3}),
        perm({3, 4, 1, 2}),
        perm({4, 3, 2, 1}),
    };
    return planeforge::PermSet(4, std::move(elems));
}

inline planeforge::Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> row(static_cast<size_t>(n));
    std::iota(row.begin(), row.end(), 1);
    std::shuffle(row.begin(), row.end(), rng);
    return planeforge::Permutation(std::move(row));
}

inline std::string golden_path(const std::string& name) {
    return std::string(PLANEFORGE_GOLDEN_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace pftest
