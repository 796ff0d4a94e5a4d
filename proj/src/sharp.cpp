#include "planeforge/sharp.hpp"

#include "planeforge/field.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace planeforge {
namespace {

constexpr int kViolationSampleCap = 64;

bool s1_by_agreement(const PermSet& s) {
    const int n = s.degree();
    if (s.size() != n * (n - 1)) return false;
    for (int i = 0; i < s.size(); ++i) {
        for (int j = i + 1; j < s.size(); ++j) {
            if (agreement(s[i], s[j]) > 1) return false;
        }
    }
    return true;
}

} // namespace

SharpReport check_sharp2t(const PermSet& s) {
    const int n = s.degree();
    if (n < 2) {
        throw std::invalid_argument("check_sharp2t: degree must be at least 2");
    }
    SharpReport report;
    report.degree = n;
    report.size = s.size();
    report.contains_identity = s.contains_identity();
    for (const auto& p : s.elements()) {
        if (is_fixed_point_free(p)) ++report.fpf_count;
    }

    // direct counting over every ordered column pair
    bool counting_pass = s.size() == n * (n - 1);
    std::vector<int> counts(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
            if (k == l) continue;
            std::fill(counts.begin(), counts.end(), 0);
            for (const auto& p : s.elements()) {
                ++counts[static_cast<size_t>(p(k) - 1) * n + static_cast<size_t>(p(l) - 1)];
            }
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    const int c = counts[static_cast<size_t>(i - 1) * n +
                                         static_cast<size_t>(j - 1)];
                    if (c != 1) {
                        counting_pass = false;
                        ++report.s1_violation_total;
                        if (static_cast<int>(report.s1_violations.size()) <
                            kViolationSampleCap) {
                            report.s1_violations.push_back({k, l, i, j, c});
                        }
                    }
                }
            }
        }
    }

    report.s1_pass = counting_pass;
    if (counting_pass != s1_by_agreement(s)) {
        throw std::logic_error("check_sharp2t: counting and agreement paths disagree");
    }
    return report;
}

CycleDiagnostics check_cycle_conditions(const PermSet& s) {
    CycleDiagnostics diag;
    std::map<std::pair<int, int>, int> fixed_pairs;
    std::map<std::pair<int, int>, int> two_cycles;
    std::map<std::tuple<int, int, int>, int> chains;

    for (int e = 0; e < s.size(); ++e) {
        const Permutation& p = s[e];

        const std::vector<int> fixed = fixed_points(p);
        for (size_t i = 0; i < fixed.size(); ++i) {
            for (size_t j = i + 1; j < fixed.size(); ++j) {
                const auto key = std::make_pair(fixed[i], fixed[j]);
                auto [it, inserted] = fixed_pairs.emplace(key, e);
                if (!inserted) {
                    diag.repeated_fixed_pairs.push_back({key.first, key.second, it->second, e});
                }
            }
        }

        for (int i = 1; i <= p.degree(); ++i) {
            const int j = p(i);
            if (j == i) continue;
            if (p(j) == i && i < j) {
                const auto key = std::make_pair(i, j);
                auto [it, inserted] = two_cycles.emplace(key, e);
                if (!inserted) {
                    diag.repeated_two_cycles.push_back({i, j, it->second, e});
                }
            }
            const int k = p(j);
            if (k != i) {
                const auto key = std::make_tuple(i, j, k);
                auto [it, inserted] = chains.emplace(key, e);
                if (!inserted) {
                    diag.repeated_chains.push_back({i, j, k, it->second, e});
                }
            }
        }
    }
    return diag;
}

PermSet normalize_coset(const PermSet& s, int pick) {
    if (s.size() == 0) {
        throw std::invalid_argument("normalize_coset: empty set");
    }
    if (pick < 0 || pick >= s.size()) {
        throw std::out_of_range("normalize_coset: pick index " + std::to_string(pick) +
                                " out of range 0.." + std::to_string(s.size() - 1));
    }
    const Permutation shift = inverse(s[pick]);
    std::vector<Permutation> shifted;
    shifted.reserve(static_cast<size_t>(s.size()));
    for (const auto& x : s.elements()) {
        shifted.push_back(compose(shift, x));
    }
    return PermSet(s.degree(), std::move(shifted));
}

std::vector<ObservationResult> check_observations(const PermSet& s) {
    const SharpReport report = check_sharp2t(s);
    if (!report.s1_pass) {
        throw std::invalid_argument(
            "check_observations: set is not sharply 2-transitive (S1 fails)");
    }
    if (!report.contains_identity) {
        throw std::invalid_argument(
            "check_observations: set does not contain the identity permutation");
    }

    const int n = s.degree();
    std::vector<Permutation> fpf;
    for (const auto& p : s.elements()) {
        if (is_fixed_point_free(p)) fpf.push_back(p);
    }
    std::vector<ObservationResult> results;

    {
        ObservationResult r{"i", false, ""};
        r.pass = s.size() == n * (n - 1) && static_cast<int>(fpf.size()) <= n - 1;
        std::ostringstream os;
        os << "size " << s.size() << " of " << n * (n - 1) << ", " << fpf.size()
           << " fixed-point-free";
        r.detail = os.str();
        results.push_back(std::move(r));
    }
    {
        ObservationResult r{"ii", false, ""};
        r.pass = static_cast<int>(fpf.size()) == n - 1;
        std::ostringstream os;
        os << fpf.size() << " fixed-point-free elements, expected " << n - 1;
        r.detail = os.str();
        results.push_back(std::move(r));
    }
    {
        // fixed-point-free elements plus identity are closed under composition
        ObservationResult r{"iii", true, "closed under composition"};
        std::set<std::vector<int>> members;
        members.insert(Permutation::identity(n).images());
        for (const auto& p : fpf) members.insert(p.images());
        std::vector<Permutation> all(fpf);
        all.push_back(Permutation::identity(n));
        for (const auto& a : all) {
            for (const auto& b : all) {
                const Permutation prod = compose(a, b);
                if (!members.count(prod.images())) {
                    r.pass = false;
                    r.detail = "product " + row_string(prod) + " escapes the subset";
                    break;
                }
            }
            if (!r.pass) break;
        }
        results.push_back(std::move(r));
    }
    {
        // a unique fixed-point-free element takes any symbol to any other
        ObservationResult r{"v", true, "unique fixed-point-free transporter per pair"};
        std::vector<int> arc_count(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
        for (const auto& p : fpf) {
            for (int i = 1; i <= n; ++i) {
                ++arc_count[static_cast<size_t>(i - 1) * n + static_cast<size_t>(p(i) - 1)];
            }
        }
        for (int i = 1; i <= n && r.pass; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                const int c = arc_count[static_cast<size_t>(i - 1) * n +
                                        static_cast<size_t>(j - 1)];
                if (c != 1) {
                    r.pass = false;
                    std::ostringstream os;
                    os << "pair " << i << " -> " << j << " reached by " << c << " elements";
                    r.detail = os.str();
                    break;
                }
            }
        }
        results.push_back(std::move(r));
    }
    {
        // common prime order dividing the degree
        ObservationResult r{"vi", true, ""};
        long long p_order = fpf.empty() ? 0 : order_of(fpf.front());
        for (const auto& p : fpf) {
            if (order_of(p) != p_order) {
                r.pass = false;
                r.detail = "orders differ: " + std::to_string(order_of(p)) + " vs " +
                           std::to_string(p_order);
            }
        }
        if (r.pass) {
            if (fpf.empty()) {
                r.pass = n == 1;
                r.detail = "no fixed-point-free elements";
            } else if (!is_prime(static_cast<int>(p_order)) || n % p_order != 0) {
                r.pass = false;
                r.detail = "common order " + std::to_string(p_order) +
                           " is not a prime dividing " + std::to_string(n);
            } else {
                r.detail = "common prime order " + std::to_string(p_order);
            }
        }
        results.push_back(std::move(r));
    }
    return results;
}

bool all_pass(const std::vector<ObservationResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const ObservationResult& r) { return r.pass; });
}

} // namespace planeforge
