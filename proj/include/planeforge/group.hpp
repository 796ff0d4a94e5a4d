#pragma once

#include "planeforge/perm.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace planeforge {

// An ordered collection of distinct permutations of the same degree. The
// collection need not be closed under anything; is_group/is_transitive are
// checks, not assumptions.
class PermSet {
public:
    PermSet(int degree, std::vector<Permutation> elements);

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& operator[](int i) const { return elements_[static_cast<size_t>(i)]; }

    bool contains(const Permutation& p) const;
    bool contains_identity() const;
    // closed under composition (which for a finite set of permutations is
    // equivalent to being a group)
    bool is_group() const;
    bool is_transitive() const;

    PermSet sorted() const; // elements in lex order of image rows
    bool same_elements(const PermSet& other) const;

private:
    int degree_;
    std::vector<Permutation> elements_;
};

// A validated subgroup: elements form a group and sit inside the parent group.
class Subgroup {
public:
    Subgroup(PermSet parent, PermSet elements);

    const PermSet& parent() const { return parent_; }
    const PermSet& elements() const { return elements_; }
    int index() const { return parent_.size() / elements_.size(); }

private:
    PermSet parent_;
    PermSet elements_;
};

std::uint64_t default_closure_limit(int degree); // 10 * degree!

// Smallest group containing the seed, or nullopt once the closure would pass
// the limit.
std::optional<PermSet> closure(const PermSet& seed, std::uint64_t limit);
std::optional<PermSet> closure(const PermSet& seed);

// Left-coset partition of the parent by the subgroup. The block containing
// the identity comes first; remaining blocks are ordered by their
// lexicographically least image row. Within a block, elements are in lex
// order.
std::vector<PermSet> cosets(const Subgroup& sub);

// true iff the subgroup is normal in its parent and acts regularly
// (transitive with order equal to the degree)
bool is_regular_normal(const Subgroup& sub);

// The fixed-point-free elements of g together with the identity, as a
// Subgroup of g when they form a regular normal one; nullopt otherwise.
std::optional<Subgroup> regular_normal_subgroup(const PermSet& g);

} // namespace planeforge
