#include "planeforge/mols.hpp"

#include "planeforge/sharp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace planeforge {

LatinCheck is_latin(const Grid& grid) {
    const int n = static_cast<int>(grid.size());
    if (n == 0) {
        throw std::invalid_argument("is_latin: empty grid");
    }
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("is_latin: grid is not square");
        }
        for (int v : row) {
            if (v < 1 || v > n) {
                throw std::invalid_argument("is_latin: value " + std::to_string(v) +
                                            " out of range 1.." + std::to_string(n));
            }
        }
    }

    LatinCheck check;
    check.ok = true;
    std::vector<int> seen(static_cast<size_t>(n) + 1, 0);
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            const int v = grid[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (++seen[static_cast<size_t>(v)] == 2) {
                check.ok = false;
                check.violations.push_back({true, r + 1, v});
            }
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < n; ++r) {
            const int v = grid[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (++seen[static_cast<size_t>(v)] == 2) {
                check.ok = false;
                check.violations.push_back({false, c + 1, v});
            }
        }
    }
    return check;
}

LatinSquare::LatinSquare(Grid grid) : grid_(std::move(grid)) {
    const LatinCheck check = is_latin(grid_);
    if (!check.ok) {
        const auto& v = check.violations.front();
        throw std::invalid_argument("grid is not a Latin square: value " +
                                    std::to_string(v.value) + " repeats in " +
                                    (v.in_row ? "row " : "column ") + std::to_string(v.index));
    }
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("are_orthogonal: order mismatch");
    }
    const int n = a.order();
    std::vector<char> seen(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const size_t pair = static_cast<size_t>(a.at(r, c) - 1) * n +
                                static_cast<size_t>(b.at(r, c) - 1);
            if (seen[pair]) return false;
            seen[pair] = 1;
        }
    }
    return true;
}

LatinSquare square_from_rows(const PermSet& block) {
    Grid grid;
    grid.reserve(static_cast<size_t>(block.size()));
    for (const auto& p : block.elements()) grid.push_back(p.images());
    std::sort(grid.begin(), grid.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    return LatinSquare(std::move(grid));
}

LatinSquare fundamental_ols(const Subgroup& n) {
    if (!is_regular_normal(n)) {
        throw std::invalid_argument("fundamental_ols: subgroup is not regular normal");
    }
    return square_from_rows(n.elements());
}

MolsSet mols_from_group(const PermSet& g) {
    const auto observations = check_observations(g); // throws unless sharp with identity
    for (const auto& r : observations) {
        if (!r.pass) {
            throw std::invalid_argument("mols_from_group: observation " + r.id +
                                        " failed: " + r.detail);
        }
    }
    if (!g.is_group()) {
        throw std::invalid_argument("mols_from_group: set is not closed under composition");
    }
    const auto normal = regular_normal_subgroup(g);
    if (!normal) {
        throw std::invalid_argument(
            "mols_from_group: fixed-point-free elements do not form a regular normal subgroup");
    }

    MolsSet out;
    out.order = g.degree();
    out.fundamental_index = 0;
    for (const auto& block : cosets(*normal)) {
        out.squares.push_back(square_from_rows(block));
    }
    return out;
}

} // namespace planeforge
