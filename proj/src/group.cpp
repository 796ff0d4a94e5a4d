#include "planeforge/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace planeforge {
namespace {

struct RowHash {
    size_t operator()(const std::vector<int>& row) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : row) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

using RowSet = std::unordered_set<std::vector<int>, RowHash>;

RowSet row_set(const std::vector<Permutation>& elems) {
    RowSet set;
    set.reserve(elems.size() * 2);
    for (const auto& p : elems) set.insert(p.images());
    return set;
}

} // namespace

PermSet::PermSet(int degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
    if (degree_ < 1) {
        throw std::invalid_argument("permutation set degree must be at least 1");
    }
    RowSet seen;
    seen.reserve(elements_.size() * 2);
    for (const auto& p : elements_) {
        if (p.degree() != degree_) {
            throw std::invalid_argument("permutation set contains mixed degrees");
        }
        if (!seen.insert(p.images()).second) {
            throw std::invalid_argument("permutation set contains duplicate element " +
                                        row_string(p));
        }
    }
}

bool PermSet::contains(const Permutation& p) const {
    return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

bool PermSet::contains_identity() const { return contains(Permutation::identity(degree_)); }

bool PermSet::is_group() const {
    if (elements_.empty()) return false;
    const RowSet rows = row_set(elements_);
    for (const auto& p : elements_) {
        for (const auto& q : elements_) {
            if (!rows.count(compose(p, q).images())) return false;
        }
    }
    return true;
}

bool PermSet::is_transitive() const {
    if (elements_.empty()) return false;
    const size_t n = static_cast<size_t>(degree_);
    std::vector<char> reached(n * n, 0);
    for (const auto& p : elements_) {
        for (int i = 1; i <= degree_; ++i) {
            reached[static_cast<size_t>(i - 1) * n + static_cast<size_t>(p(i) - 1)] = 1;
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
}

PermSet PermSet::sorted() const {
    std::vector<Permutation> elems = elements_;
    std::sort(elems.begin(), elems.end());
    return PermSet(degree_, std::move(elems));
}

bool PermSet::same_elements(const PermSet& other) const {
    if (degree_ != other.degree_ || size() != other.size()) return false;
    const RowSet rows = row_set(elements_);
    for (const auto& p : other.elements_) {
        if (!rows.count(p.images())) return false;
    }
    return true;
}

Subgroup::Subgroup(PermSet parent, PermSet elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    if (parent_.degree() != elements_.degree()) {
        throw std::invalid_argument("subgroup: degree mismatch with parent");
    }
    if (!parent_.is_group()) {
        throw std::invalid_argument("subgroup: parent is not a group");
    }
    const RowSet parent_rows = row_set(parent_.elements());
    for (const auto& p : elements_.elements()) {
        if (!parent_rows.count(p.images())) {
            throw std::invalid_argument("subgroup: element " + row_string(p) +
                                        " not in parent");
        }
    }
    if (!elements_.is_group()) {
        throw std::invalid_argument("subgroup: elements are not closed");
    }
}

std::uint64_t default_closure_limit(int degree) {
    std::uint64_t factorial = 1;
    for (int i = 2; i <= degree; ++i) {
        if (factorial > (1ull << 60) / static_cast<std::uint64_t>(i)) {
            return 1ull << 60; // saturate; only tiny degrees occur in practice
        }
        factorial *= static_cast<std::uint64_t>(i);
    }
    return 10 * factorial;
}

std::optional<PermSet> closure(const PermSet& seed, std::uint64_t limit) {
    if (seed.size() == 0) {
        throw std::invalid_argument("closure: seed must be nonempty");
    }
    std::vector<Permutation> elems;
    RowSet rows;
    for (const auto& p : seed.elements()) {
        if (rows.insert(p.images()).second) elems.push_back(p);
    }
    // worklist product expansion; pair (i,j) is covered when the later of the
    // two indices is processed
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = 0; j < elems.size(); ++j) {
            for (const Permutation& prod :
                 {compose(elems[i], elems[j]), compose(elems[j], elems[i])}) {
                if (rows.insert(prod.images()).second) {
                    elems.push_back(prod);
                    if (elems.size() > limit) return std::nullopt;
                }
            }
        }
    }
    return PermSet(seed.degree(), std::move(elems));
}

std::optional<PermSet> closure(const PermSet& seed) {
    return closure(seed, default_closure_limit(seed.degree()));
}

std::vector<PermSet> cosets(const Subgroup& sub) {
    const PermSet& g = sub.parent();
    const PermSet& n = sub.elements();
    if (g.size() % n.size() != 0) {
        throw std::invalid_argument("cosets: subgroup order does not divide group order");
    }
    const PermSet g_sorted = g.sorted();
    RowSet used;
    std::vector<PermSet> blocks;
    // scanning representatives in lex order puts the identity's block first
    // and the remaining blocks in order of their least row
    for (const auto& x : g_sorted.elements()) {
        if (used.count(x.images())) continue;
        std::vector<Permutation> block;
        block.reserve(static_cast<size_t>(n.size()));
        for (const auto& h : n.elements()) {
            Permutation member = compose(x, h);
            if (!used.insert(member.images()).second) {
                throw std::invalid_argument("cosets: blocks overlap; parent is not a group");
            }
            block.push_back(std::move(member));
        }
        std::sort(block.begin(), block.end());
        blocks.emplace_back(g.degree(), std::move(block));
    }
    return blocks;
}

bool is_regular_normal(const Subgroup& sub) {
    const PermSet& g = sub.parent();
    const PermSet& n = sub.elements();
    if (n.size() != g.degree()) return false;
    if (!n.is_transitive()) return false;
    const RowSet n_rows = row_set(n.elements());
    for (const auto& x : g.elements()) {
        const Permutation x_inv = inverse(x);
        for (const auto& h : n.elements()) {
            if (!n_rows.count(compose(x, compose(h, x_inv)).images())) return false;
        }
    }
    return true;
}

std::optional<Subgroup> regular_normal_subgroup(const PermSet& g) {
    if (!g.is_group()) return std::nullopt;
    std::vector<Permutation> members;
    members.push_back(Permutation::identity(g.degree()));
    for (const auto& p : g.elements()) {
        if (is_fixed_point_free(p)) members.push_back(p);
    }
    PermSet candidate(g.degree(), std::move(members));
    if (!candidate.is_group()) return std::nullopt;
    Subgroup sub(g, std::move(candidate));
    if (!is_regular_normal(sub)) return std::nullopt;
    return sub;
}

} // namespace planeforge
