#include "planeforge/plane.hpp"

#include "planeforge/field.hpp"
#include "planeforge/mols.hpp"
#include "planeforge/sharp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace planeforge {
namespace {

constexpr int kWitnessCap = 32;

struct LineBits {
    std::vector<std::uint64_t> words;

    void set(int point) {
        words[static_cast<size_t>(point) >> 6] |= 1ull << (point & 63);
    }
};

int intersection_size(const LineBits& a, const LineBits& b) {
    int total = 0;
    for (size_t w = 0; w < a.words.size(); ++w) {
        total += std::popcount(a.words[w] & b.words[w]);
    }
    return total;
}

} // namespace

std::vector<std::vector<int>> base_lines(int n) {
    if (n < 2) {
        throw std::invalid_argument("base_lines: order must be at least 2");
    }
    std::vector<std::vector<int>> lines;
    lines.reserve(static_cast<size_t>(2 * n + 1));

    std::vector<int> first(static_cast<size_t>(n + 1));
    for (int j = 0; j <= n; ++j) first[static_cast<size_t>(j)] = j + 1;
    lines.push_back(std::move(first));
    for (int i = 2; i <= n + 1; ++i) {
        std::vector<int> line = {1};
        for (int j = 0; j < n; ++j) {
            line.push_back((i - 1) * n + 2 + j);
        }
        lines.push_back(std::move(line));
    }
    for (int j = 1; j <= n; ++j) {
        std::vector<int> line = {2};
        for (int k = 1; k <= n; ++k) {
            line.push_back(k * n + 1 + j);
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

std::vector<std::vector<int>> determinantal_lines(int n,
                                                  const std::vector<PermSet>& blocks) {
    if (static_cast<int>(blocks.size()) != n - 1) {
        throw std::invalid_argument("determinantal_lines: expected " + std::to_string(n - 1) +
                                    " blocks, got " + std::to_string(blocks.size()));
    }
    std::vector<std::vector<int>> lines;
    lines.reserve(static_cast<size_t>(n) * static_cast<size_t>(n - 1));
    for (size_t m = 0; m < blocks.size(); ++m) {
        if (blocks[m].degree() != n || blocks[m].size() != n) {
            throw std::invalid_argument("determinantal_lines: block " + std::to_string(m) +
                                        " is not n permutations of degree n");
        }
        // one line per permutation, in order of the row's first entry
        std::vector<Permutation> elems = blocks[m].elements();
        std::sort(elems.begin(), elems.end());
        for (const auto& sigma : elems) {
            std::vector<int> line = {static_cast<int>(m) + 3};
            for (int i = 1; i <= n; ++i) {
                line.push_back(i * n + 1 + sigma(i));
            }
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

Plane build_plane(int n) {
    const FieldSpec field = FieldSpec::for_order(n);
    const Agl1 g = agl1(field);
    const auto normal = regular_normal_subgroup(g.group);
    if (!normal) {
        throw std::logic_error("build_plane: affine group lost its translation subgroup");
    }
    Plane plane;
    plane.order = n;
    plane.lines = base_lines(n);
    for (auto& line : determinantal_lines(n, cosets(*normal))) {
        plane.lines.push_back(std::move(line));
    }
    return plane;
}

AxiomReport verify_plane(const Plane& p) {
    AxiomReport report;
    const int n = p.order;
    const int v = p.point_count();
    report.order = n;
    report.line_count = static_cast<int>(p.lines.size());
    report.expected_count = v;
    report.counts_ok = report.line_count == v;

    for (const auto& line : p.lines) {
        for (int point : line) {
            if (point < 1 || point > v) report.points_in_range = false;
        }
    }
    if (!report.points_in_range) return report;

    report.lines_have_size_ok = true;
    for (size_t i = 0; i < p.lines.size(); ++i) {
        if (static_cast<int>(p.lines[i].size()) != n + 1) {
            report.lines_have_size_ok = false;
            if (static_cast<int>(report.wrong_size_lines.size()) < kWitnessCap) {
                report.wrong_size_lines.push_back(
                    {static_cast<int>(i), static_cast<int>(p.lines[i].size())});
            }
        }
    }

    report.points_have_degree_ok = true;
    std::vector<int> degree(static_cast<size_t>(v) + 1, 0);
    for (const auto& line : p.lines) {
        for (int point : line) ++degree[static_cast<size_t>(point)];
    }
    for (int point = 1; point <= v; ++point) {
        if (degree[static_cast<size_t>(point)] != n + 1) {
            report.points_have_degree_ok = false;
            if (static_cast<int>(report.bad_point_degrees.size()) < kWitnessCap) {
                report.bad_point_degrees.push_back({point, degree[static_cast<size_t>(point)]});
            }
        }
    }

    report.line_pairs_ok = true;
    const size_t words = static_cast<size_t>(v + 64) / 64;
    std::vector<LineBits> bits(p.lines.size());
    for (size_t i = 0; i < p.lines.size(); ++i) {
        bits[i].words.assign(words, 0);
        for (int point : p.lines[i]) bits[i].set(point);
    }
    for (size_t i = 0; i < p.lines.size(); ++i) {
        for (size_t j = i + 1; j < p.lines.size(); ++j) {
            const int common = intersection_size(bits[i], bits[j]);
            if (common != 1) {
                report.line_pairs_ok = false;
                if (static_cast<int>(report.bad_line_pairs.size()) < kWitnessCap) {
                    report.bad_line_pairs.push_back(
                        {static_cast<int>(i), static_cast<int>(j), common});
                }
            }
        }
    }

    report.point_pairs_ok = true;
    std::vector<std::uint8_t> pair_count(
        static_cast<size_t>(v) * static_cast<size_t>(v), 0);
    for (const auto& line : p.lines) {
        for (size_t a = 0; a < line.size(); ++a) {
            for (size_t b = a + 1; b < line.size(); ++b) {
                const int lo = std::min(line[a], line[b]);
                const int hi = std::max(line[a], line[b]);
                auto& slot = pair_count[static_cast<size_t>(lo - 1) * v +
                                        static_cast<size_t>(hi - 1)];
                if (slot < 255) ++slot;
            }
        }
    }
    for (int a = 1; a <= v; ++a) {
        for (int b = a + 1; b <= v; ++b) {
            const int c = pair_count[static_cast<size_t>(a - 1) * v + static_cast<size_t>(b - 1)];
            if (c != 1) {
                report.point_pairs_ok = false;
                if (static_cast<int>(report.bad_point_pairs.size()) < kWitnessCap) {
                    report.bad_point_pairs.push_back({a, b, c});
                }
            }
        }
    }
    return report;
}

PermSet extract_permutations(const Plane& p) {
    const int n = p.order;
    if (n < 2) {
        throw CanonicalFormRequired("extract_permutations: order must be at least 2");
    }
    const std::vector<std::vector<int>> base = base_lines(n);
    std::set<std::vector<int>> line_set(p.lines.begin(), p.lines.end());
    for (const auto& line : base) {
        if (!line_set.count(line)) {
            throw CanonicalFormRequired(
                "extract_permutations: canonical base lines are missing");
        }
        line_set.erase(line);
    }
    if (static_cast<int>(line_set.size()) != n * (n - 1)) {
        throw CanonicalFormRequired("extract_permutations: expected " +
                                    std::to_string(n * (n - 1)) + " determinantal lines");
    }

    std::vector<Permutation> perms;
    const std::set<std::vector<int>> seen_base(base.begin(), base.end());
    for (const auto& line : p.lines) {
        if (seen_base.count(line)) continue;
        if (static_cast<int>(line.size()) != n + 1) {
            throw CanonicalFormRequired("extract_permutations: line of wrong size");
        }
        const int leading = line.front();
        if (leading < 3 || leading > n + 1) {
            throw CanonicalFormRequired("extract_permutations: leading entry " +
                                        std::to_string(leading) + " outside 3..n+1");
        }
        std::vector<int> images(static_cast<size_t>(n), 0);
        for (size_t idx = 1; idx < line.size(); ++idx) {
            const int point = line[idx];
            const int band = (point - 2) / n; // point = band*n + 1 + s with s in 1..n
            const int s = point - band * n - 1;
            if (band < 1 || band > n || s < 1 || s > n) {
                throw CanonicalFormRequired("extract_permutations: point " +
                                            std::to_string(point) +
                                            " does not lie in a determinantal band");
            }
            if (images[static_cast<size_t>(band - 1)] != 0) {
                throw CanonicalFormRequired(
                    "extract_permutations: two points in one band on a line");
            }
            images[static_cast<size_t>(band - 1)] = s;
        }
        try {
            perms.emplace_back(std::move(images));
        } catch (const std::invalid_argument&) {
            throw CanonicalFormRequired("extract_permutations: line does not induce a bijection");
        }
    }
    try {
        return PermSet(n, std::move(perms));
    } catch (const std::invalid_argument&) {
        throw CanonicalFormRequired("extract_permutations: duplicate determinantal lines");
    }
}

bool bruck_ryser_excluded(long long n) {
    if (n < 2) {
        throw std::invalid_argument("bruck_ryser_excluded: order must be at least 2");
    }
    if (n > 1000000) {
        throw std::invalid_argument("bruck_ryser_excluded: order beyond the 10^6 bound");
    }
    const long long mod = n % 4;
    if (mod != 1 && mod != 2) return false;
    long long rest = n;
    for (long long d = 2; d * d <= rest; ++d) {
        if (rest % d != 0) continue;
        int exponent = 0;
        while (rest % d == 0) {
            rest /= d;
            ++exponent;
        }
        if (exponent % 2 == 1 && d % 4 == 3) return true;
    }
    // rest is now 1 or a prime with odd exponent
    return rest > 1 && rest % 4 == 3;
}

} // namespace planeforge
