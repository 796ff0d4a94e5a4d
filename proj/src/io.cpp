#include "planeforge/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace planeforge {
namespace {

struct LineReader {
    std::istream& in;
    int number = 0;

    // next non-blank, non-comment line; false at end of input
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++number;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

std::vector<int> parse_ints(const std::string& line, int line_number) {
    std::vector<int> values;
    std::istringstream is(line);
    std::string token;
    while (is >> token) {
        try {
            size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(line_number, "expected an integer, got '" + token + "'");
        }
    }
    return values;
}

template <typename T>
T parse_stream_file(const std::string& path, T (*parse)(std::istream&)) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return parse(in);
}

} // namespace

Permutation parse_permutation(const std::string& text, int degree, int line_number) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '(') {
        CycleForm form;
        form.degree = degree;
        std::vector<char> seen(static_cast<size_t>(degree) + 1, 0);
        size_t pos = first;
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                continue;
            }
            if (text[pos] != '(') {
                throw ParseError(line_number, "unexpected character in cycle form");
            }
            const size_t close = text.find(')', pos);
            if (close == std::string::npos) {
                throw ParseError(line_number, "unclosed cycle");
            }
            std::string body = text.substr(pos + 1, close - pos - 1);
            std::replace(body.begin(), body.end(), ',', ' ');
            std::vector<int> cycle;
            if (body.find(' ') == std::string::npos && degree <= 9 && body.size() > 1) {
                for (char c : body) {
                    if (!std::isdigit(static_cast<unsigned char>(c))) {
                        throw ParseError(line_number, "bad symbol in cycle");
                    }
                    cycle.push_back(c - '0');
                }
            } else {
                cycle = parse_ints(body, line_number);
            }
            if (cycle.empty()) {
                throw ParseError(line_number, "empty cycle");
            }
            for (int v : cycle) {
                if (v < 1 || v > degree) {
                    throw ParseError(line_number, "cycle symbol out of range");
                }
                if (seen[static_cast<size_t>(v)]) {
                    throw ParseError(line_number, "symbol repeats across cycles");
                }
                seen[static_cast<size_t>(v)] = 1;
            }
            form.cycles.push_back(std::move(cycle));
            pos = close + 1;
        }
        for (int v = 1; v <= degree; ++v) {
            if (!seen[static_cast<size_t>(v)]) form.cycles.push_back({v});
        }
        std::sort(form.cycles.begin(), form.cycles.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      return a.front() < b.front();
                  });
        try {
            return from_cycles(form);
        } catch (const std::invalid_argument& err) {
            throw ParseError(line_number, err.what());
        }
    }

    const std::vector<int> images = parse_ints(text, line_number);
    if (static_cast<int>(images.size()) != degree) {
        throw ParseError(line_number, "expected " + std::to_string(degree) +
                                          " images, got " + std::to_string(images.size()));
    }
    try {
        return Permutation(images);
    } catch (const std::invalid_argument& err) {
        throw ParseError(line_number, err.what());
    }
}

PermSet parse_permset(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) {
        throw ParseError(1, "missing 'permset n m' header");
    }
    std::istringstream header(line);
    std::string tag;
    int degree = 0, count = 0;
    if (!(header >> tag >> degree >> count) || tag != "permset" || degree < 1 || count < 0) {
        throw ParseError(reader.number, "malformed header, expected 'permset n m'");
    }
    std::vector<Permutation> elems;
    elems.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        if (!reader.next(line)) {
            throw ParseError(reader.number + 1, "expected " + std::to_string(count) +
                                                    " permutations, found " + std::to_string(i));
        }
        elems.push_back(parse_permutation(line, degree, reader.number));
    }
    if (reader.next(line)) {
        throw ParseError(reader.number, "trailing content after the listed permutations");
    }
    try {
        return PermSet(degree, std::move(elems));
    } catch (const std::invalid_argument& err) {
        throw ParseError(reader.number, err.what());
    }
}

Plane parse_plane(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) {
        throw ParseError(1, "missing 'plane n' header");
    }
    std::istringstream header(line);
    std::string tag;
    int order = 0;
    if (!(header >> tag >> order) || tag != "plane" || order < 1) {
        throw ParseError(reader.number, "malformed header, expected 'plane n'");
    }
    Plane plane;
    plane.order = order;
    const int expected = order * order + order + 1;
    for (int i = 0; i < expected; ++i) {
        if (!reader.next(line)) {
            throw ParseError(reader.number + 1, "expected " + std::to_string(expected) +
                                                    " lines, found " + std::to_string(i));
        }
        std::vector<int> points = parse_ints(line, reader.number);
        if (static_cast<int>(points.size()) != order + 1) {
            throw ParseError(reader.number, "expected " + std::to_string(order + 1) +
                                                " points on a line");
        }
        for (size_t j = 0; j < points.size(); ++j) {
            if (points[j] < 1 || points[j] > expected) {
                throw ParseError(reader.number, "point out of range");
            }
            if (j > 0 && points[j] <= points[j - 1]) {
                throw ParseError(reader.number, "points must be strictly increasing");
            }
        }
        plane.lines.push_back(std::move(points));
    }
    if (reader.next(line)) {
        throw ParseError(reader.number, "trailing content after the listed lines");
    }
    return plane;
}

ParsedMols parse_mols(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) {
        throw ParseError(1, "missing 'mols n k' header");
    }
    std::istringstream header(line);
    std::string tag;
    int order = 0, count = 0;
    if (!(header >> tag >> order >> count) || tag != "mols" || order < 1 || count < 0) {
        throw ParseError(reader.number, "malformed header, expected 'mols n k'");
    }
    ParsedMols out;
    out.order = order;
    for (int s = 0; s < count; ++s) {
        Grid grid;
        for (int r = 0; r < order; ++r) {
            if (!reader.next(line)) {
                throw ParseError(reader.number + 1, "expected " + std::to_string(count) +
                                                        " squares of " + std::to_string(order) +
                                                        " rows");
            }
            std::vector<int> row = parse_ints(line, reader.number);
            if (static_cast<int>(row.size()) != order) {
                throw ParseError(reader.number,
                                 "expected " + std::to_string(order) + " values in a row");
            }
            for (int v : row) {
                if (v < 1 || v > order) {
                    throw ParseError(reader.number, "value " + std::to_string(v) +
                                                        " out of range 1.." +
                                                        std::to_string(order));
                }
            }
            grid.push_back(std::move(row));
        }
        out.grids.push_back(std::move(grid));
    }
    if (reader.next(line)) {
        throw ParseError(reader.number, "trailing content after the listed squares");
    }
    return out;
}

PermSet parse_permset_file(const std::string& path) {
    return parse_stream_file(path, parse_permset);
}
Plane parse_plane_file(const std::string& path) { return parse_stream_file(path, parse_plane); }
ParsedMols parse_mols_file(const std::string& path) {
    return parse_stream_file(path, parse_mols);
}

std::string to_text(const PermSet& s) {
    std::ostringstream os;
    os << "permset " << s.degree() << ' ' << s.size() << '\n';
    for (const auto& p : s.elements()) {
        os << row_string(p) << '\n';
    }
    return os.str();
}

std::string to_text(const Plane& p) {
    std::ostringstream os;
    os << "plane " << p.order << '\n';
    for (const auto& line : p.lines) {
        for (size_t i = 0; i < line.size(); ++i) {
            if (i > 0) os << ' ';
            os << line[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string mols_text(int order, const std::vector<Grid>& grids) {
    std::ostringstream os;
    os << "mols " << order << ' ' << grids.size() << '\n';
    for (size_t s = 0; s < grids.size(); ++s) {
        if (s > 0) os << '\n';
        for (const auto& row : grids[s]) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i > 0) os << ' ';
                os << row[i];
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string to_text(const MolsSet& m) {
    std::vector<Grid> grids;
    grids.reserve(m.squares.size());
    for (const auto& sq : m.squares) grids.push_back(sq.grid());
    return mols_text(m.order, grids);
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_string(const std::string& data) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

bool RunReport::all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const Verdict& v) { return v.pass; });
}

std::string RunReport::text() const {
    std::ostringstream os;
    os << "command: " << command << '\n';
    if (!inputs_digest.empty()) os << "inputs: " << inputs_digest << '\n';
    for (const auto& v : verdicts) {
        os << v.name << ": " << (v.pass ? "ok" : "FAIL");
        if (!v.detail.empty()) os << " (" << v.detail << ')';
        os << '\n';
    }
    for (const auto& w : witnesses) {
        os << "witness: " << w << '\n';
    }
    return os.str();
}

std::string RunReport::json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs_digest"] = inputs_digest;
    j["verdicts"] = nlohmann::json::array();
    for (const auto& v : verdicts) {
        j["verdicts"].push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    }
    j["witnesses"] = witnesses;
    j["timing_us"] = timing_us;
    return j.dump(2);
}

RunReport RunReport::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    RunReport report;
    report.command = j.at("command").get<std::string>();
    report.inputs_digest = j.at("inputs_digest").get<std::string>();
    for (const auto& v : j.at("verdicts")) {
        report.verdicts.push_back({v.at("name").get<std::string>(), v.at("pass").get<bool>(),
                                   v.at("detail").get<std::string>()});
    }
    report.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    report.timing_us = j.at("timing_us").get<std::int64_t>();
    return report;
}

} // namespace planeforge
