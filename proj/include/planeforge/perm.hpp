#pragma once

#include <string>
#include <vector>

namespace planeforge {

// A permutation of {1..n} stored as its image row: images()[i-1] is the
// image of symbol i. Symbols are 1-based throughout.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int symbol) const { return images_[symbol - 1]; }
    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator!=(const Permutation& other) const { return images_ != other.images_; }
    // lexicographic order on image rows
    bool operator<(const Permutation& other) const { return images_ < other.images_; }

private:
    std::vector<int> images_;
};

// Disjoint-cycle view. Canonical form: every cycle starts at its minimum
// element, cycles are sorted by first element, fixed points are 1-cycles.
struct CycleForm {
    int degree = 0;
    std::vector<std::vector<int>> cycles;

    bool operator==(const CycleForm& other) const {
        return degree == other.degree && cycles == other.cycles;
    }
};

// result(i) = p(q(i)): the right operand acts first
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

CycleForm to_cycles(const Permutation& p);
Permutation from_cycles(const CycleForm& c);

std::vector<int> fixed_points(const Permutation& p);
bool is_fixed_point_free(const Permutation& p);

// |{ i : p(i) = q(i) }|
int agreement(const Permutation& p, const Permutation& q);

// order of p in the symmetric group (lcm of cycle lengths)
long long order_of(const Permutation& p);

std::string row_string(const Permutation& p);   // "2 1 4 3"
std::string cycle_string(const CycleForm& c);   // "(1 2)(3 4)"
std::string cycle_string(const Permutation& p);

} // namespace planeforge
