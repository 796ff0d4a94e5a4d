#include "planeforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

namespace planeforge {
namespace {

constexpr int kBlockSize = 64;

// Runs branches in fixed-size blocks. Within a block the branches may run on
// any worker; consume() is then called sequentially in branch order, so every
// observable outcome depends only on branch indices, never on scheduling.
// Returns true when every branch was consumed.
template <typename R>
bool run_blocked(int workers, int branch_count, const std::function<R(int)>& run_branch,
                 const std::function<bool(R&&)>& consume) {
    for (int start = 0; start < branch_count; start += kBlockSize) {
        const int end = std::min(branch_count, start + kBlockSize);
        std::vector<R> results(static_cast<size_t>(end - start));
        if (workers <= 1 || end - start == 1) {
            for (int b = start; b < end; ++b) {
                results[static_cast<size_t>(b - start)] = run_branch(b);
            }
        } else {
            std::atomic<int> next{start};
            std::vector<std::thread> pool;
            const int spawn = std::min(workers, end - start);
            pool.reserve(static_cast<size_t>(spawn));
            for (int w = 0; w < spawn; ++w) {
                pool.emplace_back([&] {
                    for (;;) {
                        const int b = next.fetch_add(1);
                        if (b >= end) return;
                        results[static_cast<size_t>(b - start)] = run_branch(b);
                    }
                });
            }
            for (auto& t : pool) t.join();
        }
        for (auto& r : results) {
            if (!consume(std::move(r))) return false;
        }
    }
    return true;
}

using Bitset = std::vector<std::uint64_t>;

Bitset make_bitset(int bits) { return Bitset(static_cast<size_t>(bits + 64) / 64, 0); }

void bitset_set(Bitset& b, int i) { b[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }

int bitset_count(const Bitset& b) {
    int total = 0;
    for (std::uint64_t w : b) total += std::popcount(w);
    return total;
}

void bitset_and(Bitset& dst, const Bitset& other) {
    for (size_t w = 0; w < dst.size(); ++w) dst[w] &= other[w];
}

// clears bits 0..i
void bitset_clear_through(Bitset& b, int i) {
    const size_t word = static_cast<size_t>(i) >> 6;
    for (size_t w = 0; w < word; ++w) b[w] = 0;
    const int rem = (i & 63) + 1;
    b[word] &= rem == 64 ? 0ull : ~((1ull << rem) - 1);
}

template <typename Fn>
void bitset_for_each(const Bitset& b, Fn&& fn) {
    for (size_t w = 0; w < b.size(); ++w) {
        std::uint64_t bits = b[w];
        while (bits) {
            const int i = static_cast<int>(w * 64) + std::countr_zero(bits);
            bits &= bits - 1;
            if (!fn(i)) return;
        }
    }
}

std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - start)
                                          .count());
}

// ---------------------------------------------------------------------------
// sharply 2-transitive set search

struct SharpBranchResult {
    std::uint64_t nodes = 0;
    bool guard_hit = false;
    std::vector<std::vector<int>> witnesses; // candidate index lists
};

struct SharpSearcher {
    int n = 0;
    int target = 0; // elements to pick beyond the identity
    std::uint64_t max_nodes = 0;
    int witness_cap = 0;
    std::vector<Permutation> candidates;
    std::vector<Bitset> compatible; // agreement <= 1, by candidate index

    SharpBranchResult run_branch(int first) const {
        SharpBranchResult result;
        std::vector<int> chosen = {first};
        Bitset avail = compatible[static_cast<size_t>(first)];
        bitset_clear_through(avail, first);
        dfs(chosen, avail, result);
        return result;
    }

    void dfs(std::vector<int>& chosen, const Bitset& avail, SharpBranchResult& result) const {
        ++result.nodes;
        if (max_nodes != 0 && result.nodes > max_nodes) {
            result.guard_hit = true;
            return;
        }
        if (witness_cap != 0 && static_cast<int>(result.witnesses.size()) >= witness_cap) {
            return;
        }
        if (static_cast<int>(chosen.size()) == target) {
            result.witnesses.push_back(chosen);
            return;
        }
        const int missing = target - static_cast<int>(chosen.size());
        if (bitset_count(avail) < missing) return;

        bitset_for_each(avail, [&](int c) {
            Bitset next = avail;
            bitset_clear_through(next, c);
            bitset_and(next, compatible[static_cast<size_t>(c)]);
            if (bitset_count(next) >= missing - 1) {
                chosen.push_back(c);
                dfs(chosen, next, result);
                chosen.pop_back();
            }
            if (result.guard_hit) return false;
            if (witness_cap != 0 && static_cast<int>(result.witnesses.size()) >= witness_cap) {
                return false;
            }
            return true;
        });
    }
};

// ---------------------------------------------------------------------------
// orthogonal mate search; values are 0-based internally, exported 1-based

struct MolsBranchResult {
    std::uint64_t nodes = 0;
    bool guard_hit = false;
    std::vector<MolsPair> witnesses;
};

struct MolsSearcher {
    int n = 0;
    std::uint64_t max_nodes = 0;
    int witness_cap = 0;
    std::vector<std::vector<int>> second_rows;

    struct State {
        std::vector<int> square;
        std::vector<std::uint32_t> row_used, col_used;
        MolsBranchResult* result = nullptr;
    };

    MolsBranchResult run_branch(int branch) const {
        MolsBranchResult result;
        State st;
        st.square.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
        st.row_used.assign(static_cast<size_t>(n), 0);
        st.col_used.assign(static_cast<size_t>(n), 0);
        st.result = &result;

        auto place = [&](int r, int c, int v) {
            st.square[static_cast<size_t>(r) * n + static_cast<size_t>(c)] = v;
            st.row_used[static_cast<size_t>(r)] |= 1u << v;
            st.col_used[static_cast<size_t>(c)] |= 1u << v;
        };
        for (int j = 0; j < n; ++j) place(0, j, j); // first row in order
        for (int i = 1; i < n; ++i) place(i, 0, i); // first column in order
        const auto& row2 = second_rows[static_cast<size_t>(branch)];
        for (int j = 1; j < n; ++j) place(1, j, row2[static_cast<size_t>(j)]);

        if (n == 2) {
            find_mate(st);
        } else {
            fill_square(st, 2, 1);
        }
        return result;
    }

    // completes rows 2..n-1 of the reduced square, then looks for a mate
    void fill_square(State& st, int r, int c) const {
        if (max_nodes != 0 && st.result->nodes > max_nodes) {
            st.result->guard_hit = true;
            return;
        }
        if (witness_cap != 0 &&
            static_cast<int>(st.result->witnesses.size()) >= witness_cap) {
            return;
        }
        if (r == n) {
            find_mate(st);
            return;
        }
        const auto [nr, nc] = c + 1 == n ? std::make_pair(r + 1, 1) : std::make_pair(r, c + 1);
        const std::uint32_t full = (1u << n) - 1;
        std::uint32_t free = full & ~(st.row_used[static_cast<size_t>(r)] |
                                      st.col_used[static_cast<size_t>(c)]);
        while (free) {
            const int v = std::countr_zero(free);
            free &= free - 1;
            ++st.result->nodes;
            st.square[static_cast<size_t>(r) * n + static_cast<size_t>(c)] = v;
            st.row_used[static_cast<size_t>(r)] |= 1u << v;
            st.col_used[static_cast<size_t>(c)] |= 1u << v;
            fill_square(st, nr, nc);
            st.square[static_cast<size_t>(r) * n + static_cast<size_t>(c)] = -1;
            st.row_used[static_cast<size_t>(r)] &= ~(1u << v);
            st.col_used[static_cast<size_t>(c)] &= ~(1u << v);
            if (st.result->guard_hit) return;
        }
    }

    struct MateState {
        std::vector<int> mate;
        std::vector<std::uint32_t> row_used, col_used, pair_used;
    };

    void find_mate(State& st) const {
        MateState ms;
        ms.mate.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
        ms.row_used.assign(static_cast<size_t>(n), 0);
        ms.col_used.assign(static_cast<size_t>(n), 0);
        ms.pair_used.assign(static_cast<size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            ms.mate[static_cast<size_t>(j)] = j; // mate first row normalized
            ms.row_used[0] |= 1u << j;
            ms.col_used[static_cast<size_t>(j)] |= 1u << j;
            ms.pair_used[static_cast<size_t>(j)] |= 1u << j;
        }
        if (!mate_cell(st, ms, 1, 0)) return;

        MolsPair pair;
        pair.square.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        pair.mate.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                pair.square[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    st.square[static_cast<size_t>(r) * n + c] + 1;
                pair.mate[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    ms.mate[static_cast<size_t>(r) * n + c] + 1;
            }
        }
        st.result->witnesses.push_back(std::move(pair));
    }

    bool mate_cell(State& st, MateState& ms, int r, int c) const {
        if (max_nodes != 0 && st.result->nodes > max_nodes) {
            st.result->guard_hit = true;
            return false;
        }
        if (r == n) return true;
        const auto [nr, nc] = c + 1 == n ? std::make_pair(r + 1, 0) : std::make_pair(r, c + 1);
        const std::uint32_t full = (1u << n) - 1;
        const int square_value = st.square[static_cast<size_t>(r) * n + c];
        std::uint32_t free = full & ~(ms.row_used[static_cast<size_t>(r)] |
                                      ms.col_used[static_cast<size_t>(c)] |
                                      ms.pair_used[static_cast<size_t>(square_value)]);
        while (free) {
            const int v = std::countr_zero(free);
            free &= free - 1;
            ++st.result->nodes;
            ms.mate[static_cast<size_t>(r) * n + c] = v;
            ms.row_used[static_cast<size_t>(r)] |= 1u << v;
            ms.col_used[static_cast<size_t>(c)] |= 1u << v;
            ms.pair_used[static_cast<size_t>(square_value)] |= 1u << v;
            if (mate_cell(st, ms, nr, nc)) return true;
            ms.mate[static_cast<size_t>(r) * n + c] = -1;
            ms.row_used[static_cast<size_t>(r)] &= ~(1u << v);
            ms.col_used[static_cast<size_t>(c)] &= ~(1u << v);
            ms.pair_used[static_cast<size_t>(square_value)] &= ~(1u << v);
            if (st.result->guard_hit) return false;
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// transitive subgroup search

struct SubgroupBranchResult {
    std::uint64_t nodes = 0;
    bool guard_hit = false;
    std::vector<std::vector<std::vector<int>>> witnesses; // element rows, sorted
};

std::uint32_t encode_row(const std::vector<int>& row) {
    std::uint32_t key = 0;
    for (int v : row) key = (key << 3) | static_cast<std::uint32_t>(v - 1);
    return key;
}

struct SubgroupSearcher {
    int n = 0;
    int target = 0;
    std::uint64_t max_nodes = 0;
    std::vector<std::vector<int>> candidates; // rows with order dividing the target

    SubgroupBranchResult run_branch(int i) const {
        SubgroupBranchResult result;
        for (size_t j = static_cast<size_t>(i); j < candidates.size(); ++j) {
            if (max_nodes != 0 && result.nodes > max_nodes) {
                result.guard_hit = true;
                return result;
            }
            std::vector<std::vector<int>> elems;
            if (!bounded_closure(candidates[static_cast<size_t>(i)], candidates[j], elems,
                                 result.nodes)) {
                continue;
            }
            if (static_cast<int>(elems.size()) != target) continue;
            if (!transitive(elems)) continue;
            std::sort(elems.begin(), elems.end());
            result.witnesses.push_back(std::move(elems));
        }
        return result;
    }

    // closure of {a, b}; false once the size would pass the target
    bool bounded_closure(const std::vector<int>& a, const std::vector<int>& b,
                         std::vector<std::vector<int>>& elems, std::uint64_t& nodes) const {
        elems.clear();
        std::unordered_set<std::uint32_t> keys;
        auto insert = [&](const std::vector<int>& row) {
            if (!keys.insert(encode_row(row)).second) return true;
            if (static_cast<int>(elems.size()) >= target) return false;
            elems.push_back(row);
            ++nodes;
            return true;
        };
        if (!insert(a)) return false;
        if (!insert(b)) return false;
        std::vector<int> prod(static_cast<size_t>(n));
        for (size_t i = 0; i < elems.size(); ++i) {
            for (size_t j = 0; j < elems.size(); ++j) {
                for (int dir = 0; dir < 2; ++dir) {
                    const auto& p = dir == 0 ? elems[i] : elems[j];
                    const auto& q = dir == 0 ? elems[j] : elems[i];
                    for (int s = 0; s < n; ++s) {
                        prod[static_cast<size_t>(s)] =
                            p[static_cast<size_t>(q[static_cast<size_t>(s)] - 1)];
                    }
                    if (!insert(prod)) return false;
                }
            }
        }
        return true;
    }

    bool transitive(const std::vector<std::vector<int>>& elems) const {
        std::vector<char> reached(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
        for (const auto& row : elems) {
            for (int s = 0; s < n; ++s) {
                reached[static_cast<size_t>(s) * n +
                        static_cast<size_t>(row[static_cast<size_t>(s)] - 1)] = 1;
            }
        }
        return std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
    }
};

bool sharp_by_agreement(const PermSet& s) {
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

int resolve_workers(int requested) {
    if (requested > 0) return std::min(requested, 64);
    if (const char* env = std::getenv("PLANEFORGE_WORKERS")) {
        const int value = std::atoi(env);
        if (value > 0) return std::min(value, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

SearchOutcome<PermSet> search_sharp2t_sets(int n, const SearchConfig& config) {
    if (n < 2 || n > 6) {
        throw std::invalid_argument("search_sharp2t_sets: degree must be in 2..6");
    }
    const auto start = std::chrono::steady_clock::now();

    SharpSearcher searcher;
    searcher.n = n;
    searcher.target = n * (n - 1) - 1;
    searcher.max_nodes = config.max_nodes;
    searcher.witness_cap = config.max_found;

    // candidates must be compatible with the forced identity: at most one
    // fixed point, enumerated lexicographically
    const Permutation id = Permutation::identity(n);
    std::vector<int> row(static_cast<size_t>(n));
    std::iota(row.begin(), row.end(), 1);
    do {
        Permutation p{row};
        if (p == id) continue;
        if (agreement(p, id) <= 1) searcher.candidates.push_back(std::move(p));
    } while (std::next_permutation(row.begin(), row.end()));

    const int m = static_cast<int>(searcher.candidates.size());
    searcher.compatible.assign(static_cast<size_t>(m), make_bitset(m));
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (agreement(searcher.candidates[static_cast<size_t>(i)],
                          searcher.candidates[static_cast<size_t>(j)]) <= 1) {
                bitset_set(searcher.compatible[static_cast<size_t>(i)], j);
                bitset_set(searcher.compatible[static_cast<size_t>(j)], i);
            }
        }
    }

    SearchOutcome<PermSet> outcome;
    outcome.target = "sharply 2-transitive sets of degree " + std::to_string(n) +
                     " containing the identity";
    bool guard_hit = false;
    const bool ran_all = run_blocked<SharpBranchResult>(
        resolve_workers(config.workers), m, [&](int b) { return searcher.run_branch(b); },
        [&](SharpBranchResult&& r) {
            outcome.nodes_visited += r.nodes;
            if (r.guard_hit) {
                guard_hit = true;
                return false;
            }
            for (auto& indices : r.witnesses) {
                if (config.max_found != 0 &&
                    static_cast<int>(outcome.found.size()) >= config.max_found) {
                    return false;
                }
                std::vector<Permutation> elems = {Permutation::identity(n)};
                for (int idx : indices) {
                    elems.push_back(searcher.candidates[static_cast<size_t>(idx)]);
                }
                outcome.found.emplace_back(n, std::move(elems));
            }
            return true;
        });
    outcome.exhausted = ran_all && !guard_hit;
    outcome.elapsed = std::chrono::milliseconds(elapsed_ms(start));
    return outcome;
}

SearchOutcome<MolsPair> search_mols_pair(int n, const SearchConfig& config) {
    if (n < 2 || n > 7) {
        throw std::invalid_argument("search_mols_pair: order must be in 2..7");
    }
    const auto start = std::chrono::steady_clock::now();

    MolsSearcher searcher;
    searcher.n = n;
    searcher.max_nodes = config.max_nodes;
    searcher.witness_cap = config.max_found;

    // second rows of a reduced square, enumerated lexicographically
    std::vector<int> values;
    for (int v = 0; v < n; ++v) {
        if (v != 1) values.push_back(v);
    }
    if (n == 2) {
        searcher.second_rows.push_back({1, 0});
    } else {
        std::sort(values.begin(), values.end());
        do {
            std::vector<int> row2(static_cast<size_t>(n));
            row2[0] = 1;
            bool ok = true;
            for (int j = 1; j < n; ++j) {
                row2[static_cast<size_t>(j)] = values[static_cast<size_t>(j - 1)];
                if (row2[static_cast<size_t>(j)] == j) ok = false;
            }
            if (ok) searcher.second_rows.push_back(std::move(row2));
        } while (std::next_permutation(values.begin(), values.end()));
    }

    SearchOutcome<MolsPair> outcome;
    outcome.target = "orthogonal pairs of Latin squares of order " + std::to_string(n);
    bool guard_hit = false;
    const bool ran_all = run_blocked<MolsBranchResult>(
        resolve_workers(config.workers), static_cast<int>(searcher.second_rows.size()),
        [&](int b) { return searcher.run_branch(b); },
        [&](MolsBranchResult&& r) {
            outcome.nodes_visited += r.nodes;
            if (r.guard_hit) {
                guard_hit = true;
                return false;
            }
            for (auto& pair : r.witnesses) {
                if (config.max_found != 0 &&
                    static_cast<int>(outcome.found.size()) >= config.max_found) {
                    return false;
                }
                outcome.found.push_back(std::move(pair));
            }
            return true;
        });
    outcome.exhausted = ran_all && !guard_hit;
    outcome.elapsed = std::chrono::milliseconds(elapsed_ms(start));
    return outcome;
}

SearchOutcome<SubgroupWitness> search_transitive_subgroups(int n, int target_order,
                                                           const SearchConfig& config) {
    if (n < 2 || n > 7) {
        throw std::invalid_argument("search_transitive_subgroups: degree must be in 2..7");
    }
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    if (target_order < 1 || factorial % target_order != 0) {
        throw std::invalid_argument("search_transitive_subgroups: target order must divide n!");
    }
    const auto start = std::chrono::steady_clock::now();

    SubgroupSearcher searcher;
    searcher.n = n;
    searcher.target = target_order;
    searcher.max_nodes = config.max_nodes;

    std::vector<int> row(static_cast<size_t>(n));
    std::iota(row.begin(), row.end(), 1);
    do {
        const Permutation p{row};
        if (target_order % order_of(p) == 0) searcher.candidates.push_back(row);
    } while (std::next_permutation(row.begin(), row.end()));

    SearchOutcome<SubgroupWitness> outcome;
    outcome.target = "transitive subgroups of S_" + std::to_string(n) + " of order " +
                     std::to_string(target_order);
    std::set<std::vector<std::vector<int>>> seen;
    bool guard_hit = false;
    const bool ran_all = run_blocked<SubgroupBranchResult>(
        resolve_workers(config.workers), static_cast<int>(searcher.candidates.size()),
        [&](int b) { return searcher.run_branch(b); },
        [&](SubgroupBranchResult&& r) {
            outcome.nodes_visited += r.nodes;
            if (r.guard_hit) {
                guard_hit = true;
                return false;
            }
            for (auto& rows : r.witnesses) {
                if (!seen.insert(rows).second) continue;
                if (config.max_found != 0 &&
                    static_cast<int>(outcome.found.size()) >= config.max_found) {
                    return false;
                }
                std::vector<Permutation> elems;
                elems.reserve(rows.size());
                for (auto& r2 : rows) elems.emplace_back(r2);
                SubgroupWitness witness{PermSet(n, std::move(elems)), false, false};
                witness.sharp2t = sharp_by_agreement(witness.group);
                witness.regular_normal = regular_normal_subgroup(witness.group).has_value();
                outcome.found.push_back(std::move(witness));
            }
            return true;
        });
    outcome.exhausted = ran_all && !guard_hit;
    outcome.elapsed = std::chrono::milliseconds(elapsed_ms(start));
    return outcome;
}

} // namespace planeforge
