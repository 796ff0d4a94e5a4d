#include "planeforge/graph.hpp"

#include <stdexcept>

namespace planeforge {

PackingReport plane_to_packing(const Plane& p) {
    PackingReport report;
    report.packing.vertex_count = p.point_count();
    for (size_t i = 0; i < p.lines.size(); ++i) {
        report.packing.blocks.emplace_back(static_cast<int>(i) + 1, p.lines[i]);
    }

    const int v = report.packing.vertex_count;
    std::vector<int> cover(static_cast<size_t>(v) * static_cast<size_t>(v), 0);
    for (const auto& [color, block] : report.packing.blocks) {
        (void)color;
        for (size_t a = 0; a < block.size(); ++a) {
            for (size_t b = a + 1; b < block.size(); ++b) {
                const int lo = std::min(block[a], block[b]);
                const int hi = std::max(block[a], block[b]);
                ++cover[static_cast<size_t>(lo - 1) * v + static_cast<size_t>(hi - 1)];
            }
        }
    }
    report.tight = true;
    for (int a = 1; a <= v; ++a) {
        for (int b = a + 1; b <= v; ++b) {
            const int c = cover[static_cast<size_t>(a - 1) * v + static_cast<size_t>(b - 1)];
            if (c == 1) {
                ++report.covered_pairs;
            } else if (c == 0) {
                ++report.missing_pairs;
                report.tight = false;
            } else {
                ++report.duplicate_pairs;
                report.tight = false;
            }
        }
    }
    return report;
}

int pair_count(int n) { return n * (n - 1); }

int pair_index(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n || i == j) {
        throw std::invalid_argument("pair_index: not an ordered pair of distinct symbols");
    }
    return (i - 1) * (n - 1) + (j > i ? j - 1 : j);
}

std::pair<int, int> pair_at(int n, int index) {
    if (index < 1 || index > pair_count(n)) {
        throw std::invalid_argument("pair_at: index out of range");
    }
    const int i = (index - 1) / (n - 1) + 1;
    int j = (index - 1) % (n - 1) + 1;
    if (j >= i) ++j;
    return {i, j};
}

PermSet pair_group(const PermSet& g) {
    const int n = g.degree();
    if (n < 2) {
        throw std::invalid_argument("pair_group: degree must be at least 2");
    }
    const int m = pair_count(n);
    std::vector<Permutation> out;
    out.reserve(static_cast<size_t>(g.size()));
    for (const auto& sigma : g.elements()) {
        std::vector<int> images(static_cast<size_t>(m));
        for (int idx = 1; idx <= m; ++idx) {
            const auto [i, j] = pair_at(n, idx);
            images[static_cast<size_t>(idx - 1)] = pair_index(n, sigma(i), sigma(j));
        }
        out.emplace_back(std::move(images));
    }
    return PermSet(m, std::move(out));
}

CycleCoverReport cycle_cover(const PermSet& pg) {
    CycleCoverReport report;
    const int m = pg.degree();
    report.cover.vertex_count = m;

    std::vector<int> arcs(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
    for (const auto& p : pg.elements()) {
        std::vector<std::vector<int>> cycles;
        for (auto& cycle : to_cycles(p).cycles) {
            if (cycle.size() < 2) continue;
            for (size_t i = 0; i < cycle.size(); ++i) {
                const int u = cycle[i];
                const int v = cycle[(i + 1) % cycle.size()];
                ++arcs[static_cast<size_t>(u - 1) * m + static_cast<size_t>(v - 1)];
            }
            cycles.push_back(std::move(cycle));
        }
        report.cover.element_cycles.push_back(std::move(cycles));
    }

    report.complete = true;
    for (int u = 1; u <= m; ++u) {
        for (int v = 1; v <= m; ++v) {
            if (u == v) continue;
            const int c = arcs[static_cast<size_t>(u - 1) * m + static_cast<size_t>(v - 1)];
            if (c == 1) {
                ++report.covered_arcs;
            } else if (c == 0) {
                ++report.missing_arcs;
                report.complete = false;
            } else {
                ++report.duplicate_arcs;
                report.complete = false;
            }
        }
    }
    return report;
}

} // namespace planeforge
