#pragma once

#include "planeforge/group.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace planeforge {

struct CanonicalFormRequired : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n^2+n+1 points (implicit, 1-based) and lines, each line a sorted
// (n+1)-subset. Whether the axioms actually hold is checked by verify_plane,
// never assumed.
struct Plane {
    int order = 0;
    std::vector<std::vector<int>> lines;

    int point_count() const { return order * order + order + 1; }
};

struct WrongSizeLine {
    int line_index = 0; // 0-based into lines
    int size = 0;
};
struct PointDegree {
    int point = 0;
    int line_count = 0;
};
struct LinePairMeet {
    int first_line = 0, second_line = 0;
    int common_points = 0;
};
struct PointPairCover {
    int first_point = 0, second_point = 0;
    int line_count = 0;
};

struct AxiomReport {
    int order = 0;
    int line_count = 0;
    int expected_count = 0;
    bool counts_ok = false;
    bool points_in_range = true;
    bool lines_have_size_ok = false;   // (i) every line has n+1 points
    bool points_have_degree_ok = false; // (ii) every point lies on n+1 lines
    bool line_pairs_ok = false;         // (iii) two lines meet in exactly one point
    bool point_pairs_ok = false;        // (iv) two points lie on exactly one line
    std::vector<WrongSizeLine> wrong_size_lines;
    std::vector<PointDegree> bad_point_degrees;
    std::vector<LinePairMeet> bad_line_pairs;
    std::vector<PointPairCover> bad_point_pairs;

    bool pass() const {
        return counts_ok && points_in_range && lines_have_size_ok && points_have_degree_ok &&
               line_pairs_ok && point_pairs_ok;
    }
};

// the n+1 horizontal lines (all through point 1) followed by the n vertical
// lines (all through point 2)
std::vector<std::vector<int>> base_lines(int n);

// One line per permutation: block m (0-based) carries leading entry m+3, and
// a permutation s in it contributes {m+3} with i*n+1+s(i) for each band i.
// The blocks must be the n-1 coset blocks in canonical order.
std::vector<std::vector<int>> determinantal_lines(int n, const std::vector<PermSet>& blocks);

// base lines plus the determinantal lines of agl1(n), grouped by cosets of
// the translation subgroup
Plane build_plane(int n);

AxiomReport verify_plane(const Plane& p);

// Inverts determinantal_lines on a plane that carries the canonical base
// lines; throws CanonicalFormRequired otherwise.
PermSet extract_permutations(const Plane& p);

// true iff n = 1,2 (mod 4) and the square-free part of n has a prime factor
// p = 3 (mod 4)
bool bruck_ryser_excluded(long long n);

} // namespace planeforge
