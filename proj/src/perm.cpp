#include "planeforge/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace planeforge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1) {
        throw std::invalid_argument("permutation degree must be at least 1");
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : images_) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("permutation image out of range 1.." + std::to_string(n));
        }
        if (seen[static_cast<size_t>(v - 1)]) {
            throw std::invalid_argument("permutation image row is not a bijection: value " +
                                        std::to_string(v) + " repeats");
        }
        seen[static_cast<size_t>(v - 1)] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> images(static_cast<size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) {
        throw std::invalid_argument("compose: degree mismatch");
    }
    std::vector<int> images(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) {
        images[static_cast<size_t>(i - 1)] = p(q(i));
    }
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> images(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) {
        images[static_cast<size_t>(p(i) - 1)] = i;
    }
    return Permutation(std::move(images));
}

CycleForm to_cycles(const Permutation& p) {
    const int n = p.degree();
    CycleForm form;
    form.degree = n;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start - 1)]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            seen[static_cast<size_t>(cur - 1)] = 1;
            cycle.push_back(cur);
            cur = p(cur);
        } while (cur != start);
        form.cycles.push_back(std::move(cycle));
    }
    return form;
}

Permutation from_cycles(const CycleForm& c) {
    if (c.degree < 1) {
        throw std::invalid_argument("from_cycles: degree must be at least 1");
    }
    std::vector<int> images(static_cast<size_t>(c.degree), 0);
    std::vector<char> seen(static_cast<size_t>(c.degree), 0);
    for (const auto& cycle : c.cycles) {
        if (cycle.empty()) {
            throw std::invalid_argument("from_cycles: empty cycle");
        }
        for (size_t i = 0; i < cycle.size(); ++i) {
            const int a = cycle[i];
            const int b = cycle[(i + 1) % cycle.size()];
            if (a < 1 || a > c.degree) {
                throw std::invalid_argument("from_cycles: symbol out of range");
            }
            if (seen[static_cast<size_t>(a - 1)]) {
                throw std::invalid_argument("from_cycles: overlapping cycles at symbol " +
                                            std::to_string(a));
            }
            seen[static_cast<size_t>(a - 1)] = 1;
            images[static_cast<size_t>(a - 1)] = b;
        }
    }
    for (int i = 1; i <= c.degree; ++i) {
        if (!seen[static_cast<size_t>(i - 1)]) {
            throw std::invalid_argument("from_cycles: incomplete cycles, symbol " +
                                        std::to_string(i) + " missing");
        }
    }
    return Permutation(std::move(images));
}

std::vector<int> fixed_points(const Permutation& p) {
    std::vector<int> fixed;
    for (int i = 1; i <= p.degree(); ++i) {
        if (p(i) == i) fixed.push_back(i);
    }
    return fixed;
}

bool is_fixed_point_free(const Permutation& p) {
    for (int i = 1; i <= p.degree(); ++i) {
        if (p(i) == i) return false;
    }
    return true;
}

int agreement(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) {
        throw std::invalid_argument("agreement: degree mismatch");
    }
    int count = 0;
    for (int i = 1; i <= p.degree(); ++i) {
        if (p(i) == q(i)) ++count;
    }
    return count;
}

long long order_of(const Permutation& p) {
    long long order = 1;
    for (const auto& cycle : to_cycles(p).cycles) {
        order = std::lcm(order, static_cast<long long>(cycle.size()));
    }
    return order;
}

std::string row_string(const Permutation& p) {
    std::ostringstream os;
    for (int i = 1; i <= p.degree(); ++i) {
        if (i > 1) os << ' ';
        os << p(i);
    }
    return os.str();
}

std::string cycle_string(const CycleForm& c) {
    std::ostringstream os;
    for (const auto& cycle : c.cycles) {
        os << '(';
        for (size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) os << ' ';
            os << cycle[i];
        }
        os << ')';
    }
    return os.str();
}

std::string cycle_string(const Permutation& p) { return cycle_string(to_cycles(p)); }

} // namespace planeforge
