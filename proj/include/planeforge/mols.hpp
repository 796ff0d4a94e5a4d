#pragma once

#include "planeforge/group.hpp"

#include <string>
#include <vector>

namespace planeforge {

using Grid = std::vector<std::vector<int>>;

struct LatinViolation {
    bool in_row = false; // otherwise in a column
    int index = 0;       // 1-based row/column
    int value = 0;       // the repeated value
};

struct LatinCheck {
    bool ok = false;
    std::vector<LatinViolation> violations;
};

// Row/column uniqueness verdict. Non-square grids or out-of-range values are
// format errors, not Latin violations, and throw std::invalid_argument.
LatinCheck is_latin(const Grid& grid);

class LatinSquare {
public:
    explicit LatinSquare(Grid grid); // throws unless the grid is Latin

    int order() const { return static_cast<int>(grid_.size()); }
    const Grid& grid() const { return grid_; }
    const std::vector<int>& row(int i) const { return grid_[static_cast<size_t>(i)]; }
    int at(int r, int c) const { return grid_[static_cast<size_t>(r)][static_cast<size_t>(c)]; }

    bool operator==(const LatinSquare& other) const { return grid_ == other.grid_; }

private:
    Grid grid_;
};

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

struct MolsSet {
    int order = 0;
    std::vector<LatinSquare> squares;
    int fundamental_index = 0;
};

// the image rows of a sharply transitive block, stacked and sorted by first
// entry
LatinSquare square_from_rows(const PermSet& block);

// rows of the regular normal subgroup, the square every other one in the set
// is orthogonal to
LatinSquare fundamental_ols(const Subgroup& n);

// One square per coset block of the regular normal subgroup; the fundamental
// square (identity block) comes first. Requires a sharply 2-transitive group
// containing the identity; throws naming the first failed observation.
MolsSet mols_from_group(const PermSet& g);

} // namespace planeforge
