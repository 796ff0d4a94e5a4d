#include "planeforge/cli.hpp"

#include "planeforge/field.hpp"
#include "planeforge/graph.hpp"
#include "planeforge/io.hpp"
#include "planeforge/mols.hpp"
#include "planeforge/plane.hpp"
#include "planeforge/search.hpp"
#include "planeforge/sharp.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace planeforge {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;
constexpr int kExitGuard = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write " + out_path);
    }
    file << text;
}

json lines_json(const std::vector<std::vector<int>>& lines) {
    json arr = json::array();
    for (const auto& line : lines) arr.push_back(line);
    return arr;
}

json grid_json(const Grid& grid) {
    json arr = json::array();
    for (const auto& row : grid) arr.push_back(row);
    return arr;
}

struct SearchFlags {
    int max_found = 16;
    std::uint64_t max_nodes = 2000000000ull;
    int workers = 0;
    bool json_output = false;
};

void add_search_flags(CLI::App* cmd, SearchFlags& flags) {
    cmd->add_option("--max-found", flags.max_found, "stop after this many witnesses (0: all)");
    cmd->add_option("--max-nodes", flags.max_nodes, "node guard per search (0: unlimited)");
    cmd->add_option("--workers", flags.workers,
                    "worker threads (0: PLANEFORGE_WORKERS or hardware)");
    cmd->add_flag("--json", flags.json_output, "machine-readable output");
}

SearchConfig to_config(const SearchFlags& flags) {
    SearchConfig config;
    config.max_found = flags.max_found;
    config.max_nodes = flags.max_nodes;
    config.workers = flags.workers;
    return config;
}

template <typename W>
int search_exit_code(const SearchOutcome<W>& outcome) {
    if (!outcome.found.empty()) return kExitOk;
    return outcome.exhausted ? kExitNegative : kExitGuard;
}

template <typename W>
void print_search_header(std::ostream& out, const SearchOutcome<W>& outcome) {
    out << "target: " << outcome.target << '\n';
    out << "found: " << outcome.found.size() << '\n';
    out << "exhausted: " << (outcome.exhausted ? "yes" : "no") << '\n';
    out << "nodes: " << outcome.nodes_visited << '\n';
}

template <typename W>
json search_json(const SearchOutcome<W>& outcome) {
    json j;
    j["target"] = outcome.target;
    j["exhausted"] = outcome.exhausted;
    j["nodes_visited"] = outcome.nodes_visited;
    j["elapsed_ms"] = outcome.elapsed.count();
    j["found"] = json::array();
    return j;
}

std::string permset_rows_line(const PermSet& s) {
    std::string out;
    for (int i = 0; i < s.size(); ++i) {
        if (i > 0) out += " / ";
        out += row_string(s[i]);
    }
    return out;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite projective planes from sharply 2-transitive permutation groups"};
    app.require_subcommand(1);
    std::function<int()> action;

    // ----- plane ------------------------------------------------------------
    auto* plane_cmd = app.add_subcommand("plane", "build, verify, and invert planes");
    plane_cmd->require_subcommand(1);
    {
        auto* build = plane_cmd->add_subcommand("build", "construct the plane of a prime-power order");
        auto n = std::make_shared<int>(0);
        auto out_path = std::make_shared<std::string>();
        auto json_output = std::make_shared<bool>(false);
        build->add_option("n", *n, "plane order")->required();
        build->add_option("-o,--output", *out_path, "write to a file instead of stdout");
        build->add_flag("--json", *json_output, "machine-readable output");
        build->callback([&action, n, out_path, json_output, &out]() {
            action = [n, out_path, json_output, &out]() {
                const Plane plane = build_plane(*n);
                if (*json_output) {
                    json j;
                    j["order"] = plane.order;
                    j["lines"] = lines_json(plane.lines);
                    emit(j.dump(2) + "\n", *out_path, out);
                } else {
                    emit(to_text(plane), *out_path, out);
                }
                return kExitOk;
            };
        });
    }
    {
        auto* verify = plane_cmd->add_subcommand("verify", "check the four incidence axioms");
        auto path = std::make_shared<std::string>();
        auto json_output = std::make_shared<bool>(false);
        verify->add_option("file", *path, "plane file")->required();
        verify->add_flag("--json", *json_output, "machine-readable output");
        verify->callback([&action, path, json_output, &out]() {
            action = [path, json_output, &out]() {
                const std::string content = read_file(*path);
                std::istringstream in(content);
                const Plane plane = parse_plane(in);
                const AxiomReport report = verify_plane(plane);

                RunReport run;
                run.command = "plane verify";
                run.inputs_digest = digest_string(content);
                run.verdicts.push_back(
                    {"line-count", report.counts_ok,
                     std::to_string(report.line_count) + " of " +
                         std::to_string(report.expected_count)});
                run.verdicts.push_back({"points-in-range", report.points_in_range, ""});
                run.verdicts.push_back({"axiom-i-line-sizes", report.lines_have_size_ok, ""});
                run.verdicts.push_back(
                    {"axiom-ii-point-degrees", report.points_have_degree_ok, ""});
                run.verdicts.push_back({"axiom-iii-line-pairs", report.line_pairs_ok, ""});
                run.verdicts.push_back({"axiom-iv-point-pairs", report.point_pairs_ok, ""});
                for (const auto& w : report.bad_line_pairs) {
                    run.witnesses.push_back("lines " + std::to_string(w.first_line + 1) +
                                            " and " + std::to_string(w.second_line + 1) +
                                            " share " + std::to_string(w.common_points) +
                                            " points");
                }
                for (const auto& w : report.bad_point_pairs) {
                    run.witnesses.push_back("points " + std::to_string(w.first_point) + "," +
                                            std::to_string(w.second_point) + " on " +
                                            std::to_string(w.line_count) + " lines");
                }
                out << (*json_output ? run.json() + "\n" : run.text());
                return report.pass() ? kExitOk : kExitNegative;
            };
        });
    }
    {
        auto* extract = plane_cmd->add_subcommand(
            "extract", "recover the permutation set of a canonical plane");
        auto path = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::string>();
        extract->add_option("file", *path, "plane file")->required();
        extract->add_option("-o,--output", *out_path, "write to a file instead of stdout");
        extract->callback([&action, path, out_path, &out, &err]() {
            action = [path, out_path, &out, &err]() {
                const std::string content = read_file(*path);
                std::istringstream in(content);
                const Plane plane = parse_plane(in);
                if (!verify_plane(plane).pass()) {
                    err << "plane fails the incidence axioms; nothing to extract\n";
                    return kExitNegative;
                }
                emit(to_text(extract_permutations(plane)), *out_path, out);
                return kExitOk;
            };
        });
    }

    // ----- mols -------------------------------------------------------------
    auto* mols_cmd = app.add_subcommand("mols", "complete sets of orthogonal Latin squares");
    mols_cmd->require_subcommand(1);
    {
        auto* build = mols_cmd->add_subcommand("build", "n-1 squares from the affine group");
        auto n = std::make_shared<int>(0);
        auto out_path = std::make_shared<std::string>();
        build->add_option("n", *n, "square order")->required();
        build->add_option("-o,--output", *out_path, "write to a file instead of stdout");
        build->callback([&action, n, out_path, &out]() {
            action = [n, out_path, &out]() {
                const MolsSet mols = mols_from_group(agl1(FieldSpec::for_order(*n)).group);
                emit(to_text(mols), *out_path, out);
                return kExitOk;
            };
        });
    }
    {
        auto* verify = mols_cmd->add_subcommand("verify", "Latin and pairwise-orthogonality check");
        auto path = std::make_shared<std::string>();
        auto json_output = std::make_shared<bool>(false);
        verify->add_option("file", *path, "mols file")->required();
        verify->add_flag("--json", *json_output, "machine-readable output");
        verify->callback([&action, path, json_output, &out]() {
            action = [path, json_output, &out]() {
                const std::string content = read_file(*path);
                std::istringstream in(content);
                const ParsedMols parsed = parse_mols(in);

                RunReport run;
                run.command = "mols verify";
                run.inputs_digest = digest_string(content);
                bool all_latin = true;
                for (size_t i = 0; i < parsed.grids.size(); ++i) {
                    const LatinCheck check = is_latin(parsed.grids[i]);
                    run.verdicts.push_back({"latin-" + std::to_string(i + 1), check.ok, ""});
                    if (!check.ok) all_latin = false;
                }
                if (all_latin) {
                    std::vector<LatinSquare> squares;
                    for (const auto& g : parsed.grids) squares.emplace_back(g);
                    for (size_t i = 0; i < squares.size(); ++i) {
                        for (size_t j = i + 1; j < squares.size(); ++j) {
                            const bool orth = are_orthogonal(squares[i], squares[j]);
                            run.verdicts.push_back({"orthogonal-" + std::to_string(i + 1) + "-" +
                                                        std::to_string(j + 1),
                                                    orth, ""});
                        }
                    }
                }
                out << (*json_output ? run.json() + "\n" : run.text());
                return run.all_pass() ? kExitOk : kExitNegative;
            };
        });
    }

    // ----- group ------------------------------------------------------------
    auto* group_cmd = app.add_subcommand("group", "permutation set inspection");
    group_cmd->require_subcommand(1);
    {
        auto* agl = group_cmd->add_subcommand("agl", "the affine group of a prime-power order");
        auto q = std::make_shared<int>(0);
        auto json_output = std::make_shared<bool>(false);
        agl->add_option("q", *q, "field order")->required();
        agl->add_flag("--json", *json_output, "machine-readable output");
        agl->callback([&action, q, json_output, &out]() {
            action = [q, json_output, &out]() {
                const Agl1 g = agl1(FieldSpec::for_order(*q));
                if (*json_output) {
                    json j;
                    j["order"] = g.group.size();
                    j["degree"] = g.group.degree();
                    j["s"] = g.s.images();
                    j["t"] = g.t.images();
                    j["elements"] = json::array();
                    for (const auto& p : g.group.elements()) {
                        j["elements"].push_back(
                            {{"cycles", cycle_string(p)}, {"row", p.images()}});
                    }
                    out << j.dump(2) << '\n';
                } else {
                    for (const auto& p : g.group.elements()) {
                        out << cycle_string(p) << " | " << row_string(p) << '\n';
                    }
                }
                return kExitOk;
            };
        });
    }
    {
        auto* check = group_cmd->add_subcommand("check", "sharp 2-transitivity report");
        auto path = std::make_shared<std::string>();
        auto observations = std::make_shared<bool>(false);
        auto json_output = std::make_shared<bool>(false);
        check->add_option("file", *path, "permset file")->required();
        check->add_flag("--observations", *observations, "also run the structural observations");
        check->add_flag("--json", *json_output, "machine-readable output");
        check->callback([&action, path, observations, json_output, &out]() {
            action = [path, observations, json_output, &out]() {
                const std::string content = read_file(*path);
                std::istringstream in(content);
                const PermSet set = parse_permset(in);
                const SharpReport report = check_sharp2t(set);

                RunReport run;
                run.command = "group check";
                run.inputs_digest = digest_string(content);
                run.verdicts.push_back(
                    {"size", report.size == report.degree * (report.degree - 1),
                     std::to_string(report.size) + " of " +
                         std::to_string(report.degree * (report.degree - 1))});
                run.verdicts.push_back(
                    {"s1-column-pairs", report.s1_pass,
                     report.s1_pass ? ""
                                    : std::to_string(report.s1_violation_total) + " violations"});
                bool verdict_pass = report.s1_pass;

                const bool grouplike = set.is_group();
                run.witnesses.push_back(std::string("is_group: ") + (grouplike ? "yes" : "no"));
                run.witnesses.push_back(std::string("is_transitive: ") +
                                        (set.is_transitive() ? "yes" : "no"));
                run.witnesses.push_back("fixed-point-free elements: " +
                                        std::to_string(report.fpf_count));
                if (grouplike) {
                    if (const auto normal = regular_normal_subgroup(set)) {
                        run.witnesses.push_back(
                            "regular normal subgroup of order " +
                            std::to_string(normal->elements().size()) + ": " +
                            permset_rows_line(normal->elements()));
                    }
                }

                if (*observations) {
                    if (report.s1_pass && report.contains_identity) {
                        for (const auto& obs : check_observations(set)) {
                            run.verdicts.push_back(
                                {"observation-" + obs.id, obs.pass, obs.detail});
                            if (!obs.pass) verdict_pass = false;
                        }
                    } else {
                        run.verdicts.push_back({"observations", false,
                                                report.contains_identity
                                                    ? "set fails S1"
                                                    : "set does not contain the identity"});
                        verdict_pass = false;
                    }
                }
                out << (*json_output ? run.json() + "\n" : run.text());
                return verdict_pass ? kExitOk : kExitNegative;
            };
        });
    }
    {
        auto* normalize = group_cmd->add_subcommand(
            "normalize", "left-multiply by the inverse of a picked element");
        auto path = std::make_shared<std::string>();
        auto pick = std::make_shared<int>(0);
        auto out_path = std::make_shared<std::string>();
        normalize->add_option("file", *path, "permset file")->required();
        normalize->add_option("--pick", *pick, "element index to send to identity");
        normalize->add_option("-o,--output", *out_path, "write to a file instead of stdout");
        normalize->callback([&action, path, pick, out_path, &out]() {
            action = [path, pick, out_path, &out]() {
                const std::string content = read_file(*path);
                std::istringstream in(content);
                const PermSet set = parse_permset(in);
                emit(to_text(normalize_coset(set, *pick)), *out_path, out);
                return kExitOk;
            };
        });
    }

    // ----- search -----------------------------------------------------------
    auto* search_cmd = app.add_subcommand("search", "exhaustive backtracking searches");
    search_cmd->require_subcommand(1);
    {
        auto* sharp = search_cmd->add_subcommand("sharp2t", "sharply 2-transitive sets");
        auto n = std::make_shared<int>(0);
        auto flags = std::make_shared<SearchFlags>();
        sharp->add_option("n", *n, "degree")->required();
        add_search_flags(sharp, *flags);
        sharp->callback([&action, n, flags, &out]() {
            action = [n, flags, &out]() {
                const auto outcome = search_sharp2t_sets(*n, to_config(*flags));
                if (flags->json_output) {
                    json j = search_json(outcome);
                    for (const auto& w : outcome.found) {
                        json rows = json::array();
                        for (const auto& p : w.elements()) rows.push_back(p.images());
                        j["found"].push_back(rows);
                    }
                    out << j.dump(2) << '\n';
                } else {
                    print_search_header(out, outcome);
                    for (size_t i = 0; i < outcome.found.size(); ++i) {
                        out << "witness " << i + 1 << ": "
                            << permset_rows_line(outcome.found[i]) << '\n';
                    }
                }
                return search_exit_code(outcome);
            };
        });
    }
    {
        auto* pair = search_cmd->add_subcommand("mols-pair", "orthogonal Latin square pairs");
        auto n = std::make_shared<int>(0);
        auto flags = std::make_shared<SearchFlags>();
        pair->add_option("n", *n, "square order")->required();
        add_search_flags(pair, *flags);
        pair->callback([&action, n, flags, &out]() {
            action = [n, flags, &out]() {
                const auto outcome = search_mols_pair(*n, to_config(*flags));
                if (flags->json_output) {
                    json j = search_json(outcome);
                    for (const auto& w : outcome.found) {
                        j["found"].push_back(
                            {{"square", grid_json(w.square)}, {"mate", grid_json(w.mate)}});
                    }
                    out << j.dump(2) << '\n';
                } else {
                    print_search_header(out, outcome);
                    for (size_t i = 0; i < outcome.found.size(); ++i) {
                        out << "witness " << i + 1 << ":\n";
                        out << mols_text(*n, {outcome.found[i].square, outcome.found[i].mate});
                    }
                }
                return search_exit_code(outcome);
            };
        });
    }
    {
        auto* subgroups = search_cmd->add_subcommand("subgroups", "transitive subgroups");
        auto n = std::make_shared<int>(0);
        auto order = std::make_shared<int>(0);
        auto flags = std::make_shared<SearchFlags>();
        subgroups->add_option("n", *n, "degree")->required();
        subgroups->add_option("order", *order, "group order")->required();
        add_search_flags(subgroups, *flags);
        subgroups->callback([&action, n, order, flags, &out]() {
            action = [n, order, flags, &out]() {
                const auto outcome = search_transitive_subgroups(*n, *order, to_config(*flags));
                if (flags->json_output) {
                    json j = search_json(outcome);
                    for (const auto& w : outcome.found) {
                        json rows = json::array();
                        for (const auto& p : w.group.elements()) rows.push_back(p.images());
                        j["found"].push_back({{"elements", rows},
                                              {"sharp2t", w.sharp2t},
                                              {"regular_normal", w.regular_normal}});
                    }
                    out << j.dump(2) << '\n';
                } else {
                    print_search_header(out, outcome);
                    for (size_t i = 0; i < outcome.found.size(); ++i) {
                        const auto& w = outcome.found[i];
                        out << "witness " << i + 1 << " (sharp2t: "
                            << (w.sharp2t ? "yes" : "no") << ", regular normal: "
                            << (w.regular_normal ? "yes" : "no") << "): "
                            << permset_rows_line(w.group) << '\n';
                    }
                }
                return search_exit_code(outcome);
            };
        });
    }

    // ----- graph ------------------------------------------------------------
    auto* graph_cmd = app.add_subcommand("graph", "graph-theoretic equivalents");
    graph_cmd->require_subcommand(1);
    {
        auto* pack = graph_cmd->add_subcommand("pack", "tight packing by monochromatic cliques");
        auto path = std::make_shared<std::string>();
        auto json_output = std::make_shared<bool>(false);
        pack->add_option("file", *path, "plane file")->required();
        pack->add_flag("--json", *json_output, "machine-readable output");
        pack->callback([&action, path, json_output, &out]() {
            action = [path, json_output, &out]() {
                const std::string content = read_file(*path);
                std::istringstream in(content);
                const PackingReport report = plane_to_packing(parse_plane(in));
                if (*json_output) {
                    json j;
                    j["vertices"] = report.packing.vertex_count;
                    j["tight"] = report.tight;
                    j["covered_pairs"] = report.covered_pairs;
                    j["duplicate_pairs"] = report.duplicate_pairs;
                    j["missing_pairs"] = report.missing_pairs;
                    j["blocks"] = json::array();
                    for (const auto& [color, block] : report.packing.blocks) {
                        j["blocks"].push_back({{"color", color}, {"vertices", block}});
                    }
                    out << j.dump(2) << '\n';
                } else {
                    out << "vertices: " << report.packing.vertex_count << '\n';
                    out << "blocks: " << report.packing.blocks.size() << '\n';
                    out << "tight: " << (report.tight ? "yes" : "no") << '\n';
                    out << "pairs covered once: " << report.covered_pairs << '\n';
                }
                return report.tight ? kExitOk : kExitNegative;
            };
        });
    }
    {
        auto* pg = graph_cmd->add_subcommand("pair-group", "induced action on ordered pairs");
        auto path = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::string>();
        pg->add_option("file", *path, "permset file")->required();
        pg->add_option("-o,--output", *out_path, "write to a file instead of stdout");
        pg->callback([&action, path, out_path, &out]() {
            action = [path, out_path, &out]() {
                const std::string content = read_file(*path);
                std::istringstream in(content);
                emit(to_text(pair_group(parse_permset(in))), *out_path, out);
                return kExitOk;
            };
        });
    }
    {
        auto* cover = graph_cmd->add_subcommand("cycle-cover", "directed cycle cover report");
        auto path = std::make_shared<std::string>();
        auto json_output = std::make_shared<bool>(false);
        cover->add_option("file", *path, "permset file")->required();
        cover->add_flag("--json", *json_output, "machine-readable output");
        cover->callback([&action, path, json_output, &out]() {
            action = [path, json_output, &out]() {
                const std::string content = read_file(*path);
                std::istringstream in(content);
                const PermSet set = parse_permset(in);
                const CycleCoverReport report = cycle_cover(set);
                if (*json_output) {
                    json j;
                    j["vertices"] = report.cover.vertex_count;
                    j["complete"] = report.complete;
                    j["covered_arcs"] = report.covered_arcs;
                    j["duplicate_arcs"] = report.duplicate_arcs;
                    j["missing_arcs"] = report.missing_arcs;
                    j["cycles"] = json::array();
                    for (const auto& cycles : report.cover.element_cycles) {
                        json element = json::array();
                        for (const auto& cycle : cycles) element.push_back(cycle);
                        j["cycles"].push_back(element);
                    }
                    out << j.dump(2) << '\n';
                } else {
                    out << "vertices: " << report.cover.vertex_count << '\n';
                    out << "complete: " << (report.complete ? "yes" : "no") << '\n';
                    out << "arcs covered once: " << report.covered_arcs << " of "
                        << report.cover.vertex_count * (report.cover.vertex_count - 1) << '\n';
                    for (size_t e = 0; e < report.cover.element_cycles.size(); ++e) {
                        out << "element " << e + 1 << ":";
                        if (report.cover.element_cycles[e].empty()) {
                            out << " (no cycles)";
                        }
                        for (const auto& cycle : report.cover.element_cycles[e]) {
                            out << " (";
                            for (size_t i = 0; i < cycle.size(); ++i) {
                                if (i > 0) out << ' ';
                                out << cycle[i];
                            }
                            out << ')';
                        }
                        out << '\n';
                    }
                }
                return report.complete ? kExitOk : kExitNegative;
            };
        });
    }

    // ----- sieve ------------------------------------------------------------
    auto* sieve_cmd = app.add_subcommand("sieve", "number-theoretic exclusions");
    {
        auto* br = sieve_cmd->add_subcommand("bruck-ryser", "the 4k+3 square-free-part test");
        auto lo = std::make_shared<long long>(0);
        auto hi = std::make_shared<long long>(0);
        auto json_output = std::make_shared<bool>(false);
        br->add_option("lo", *lo, "first order")->required();
        br->add_option("hi", *hi, "last order")->required();
        br->add_flag("--json", *json_output, "machine-readable output");
        br->callback([&action, lo, hi, json_output, &out]() {
            action = [lo, hi, json_output, &out]() {
                if (*lo < 2 || *hi < *lo) {
                    throw std::invalid_argument("range must satisfy 2 <= lo <= hi");
                }
                std::vector<long long> excluded;
                for (long long n = *lo; n <= *hi; ++n) {
                    if (bruck_ryser_excluded(n)) excluded.push_back(n);
                }
                if (*json_output) {
                    json j;
                    j["lo"] = *lo;
                    j["hi"] = *hi;
                    j["excluded"] = excluded;
                    out << j.dump(2) << '\n';
                } else {
                    out << "excluded:";
                    for (long long n : excluded) out << ' ' << n;
                    out << '\n';
                    out << "count: " << excluded.size() << " of " << (*hi - *lo + 1) << '\n';
                }
                return excluded.empty() ? kExitNegative : kExitOk;
            };
        });
    }
    sieve_cmd->require_subcommand(1);

    // ----- dispatch ---------------------------------------------------------
    std::vector<const char*> argv;
    argv.push_back("planeforge");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        err << "run with --help for usage\n";
        return kExitError;
    }

    try {
        return action ? action() : kExitError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitError;
    } catch (const NotPrimePowerError& e) {
        err << e.what() << '\n';
        return kExitError;
    } catch (const CanonicalFormRequired& e) {
        err << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

} // namespace planeforge
