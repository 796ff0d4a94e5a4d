#pragma once

#include "planeforge/group.hpp"
#include "planeforge/mols.hpp"
#include "planeforge/plane.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace planeforge {

struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    int line;
};

// header `permset n m`, then m permutations: either an image row of n
// integers or a disjoint-cycle expression like (1 2)(3); symbols missing from
// the cycles are fixed points
PermSet parse_permset(std::istream& in);
PermSet parse_permset_file(const std::string& path);

// header `plane n`, then n^2+n+1 lines of n+1 strictly increasing points
Plane parse_plane(std::istream& in);
Plane parse_plane_file(const std::string& path);

// header `mols n k`, then k grids of n rows; values range-checked only, the
// Latin and orthogonality verdicts belong to the verifier
struct ParsedMols {
    int order = 0;
    std::vector<Grid> grids;
};
ParsedMols parse_mols(std::istream& in);
ParsedMols parse_mols_file(const std::string& path);

// a single permutation from row or cycle text, degree known
Permutation parse_permutation(const std::string& text, int degree, int line_number);

std::string to_text(const PermSet& s);
std::string to_text(const Plane& p);
std::string to_text(const MolsSet& m);
std::string mols_text(int order, const std::vector<Grid>& grids);

std::uint64_t fnv1a64(const std::string& data);
std::string digest_string(const std::string& data); // 16 hex chars

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;

    bool operator==(const Verdict& other) const = default;
};

// machine-readable result of one CLI run; the text form carries no timing so
// it is stable across runs, the JSON form round-trips losslessly
struct RunReport {
    std::string command;
    std::string inputs_digest;
    std::vector<Verdict> verdicts;
    std::vector<std::string> witnesses;
    std::int64_t timing_us = 0;

    bool operator==(const RunReport& other) const = default;

    bool all_pass() const;
    std::string text() const;
    std::string json() const;
    static RunReport from_json(const std::string& text);
};

} // namespace planeforge
