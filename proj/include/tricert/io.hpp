#pragma once

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "graph.hpp"

namespace tricert {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool to_long(std::string_view s, long long& out) {
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

inline std::vector<std::pair<int, std::string_view>> numbered_lines(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> out;
    int no = 0;
    size_t i = 0;
    while (i <= text.size()) {
        size_t j = text.find('\n', i);
        if (j == std::string_view::npos) j = text.size();
        ++no;
        out.emplace_back(no, text.substr(i, j - i));
        if (j == text.size()) break;
        i = j + 1;
    }
    return out;
}

}  // namespace detail

struct ParsedGraph {
    Graph graph;
    std::optional<Witness> non_simple;  // first loop / duplicate, 0-based ids
    int non_simple_line = 0;
};

// Accepts loops and duplicates, reporting the first one.
inline ParsedGraph parse_graph_lenient(std::string_view text) {
    auto lines = detail::numbered_lines(text);
    ParsedGraph out;
    bool header = false;
    bool bare = false;
    long long n = 0, m = 0;
    std::vector<std::pair<long long, long long>> raw;
    std::vector<int> raw_line;

    for (auto [no, line] : lines) {
        auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0][0] == 'c' || tok[0][0] == '#') continue;
        if (!header && !bare) {
            if (tok[0] == "p") {
                size_t k = 1;
                if (tok.size() == 4) k = 2;  // "p edge n m"
                if (tok.size() != k + 2 || !detail::to_long(tok[k], n) ||
                    !detail::to_long(tok[k + 1], m) || n < 0 || m < 0)
                    throw ParseError(no, "malformed problem line");
                header = true;
                continue;
            }
            bare = true;
        }
        long long a = 0, b = 0;
        if (header) {
            if (tok.size() != 3 || tok[0] != "e" || !detail::to_long(tok[1], a) ||
                !detail::to_long(tok[2], b))
                throw ParseError(no, "malformed edge line");
            if (a < 1 || a > n || b < 1 || b > n) throw ParseError(no, "vertex id out of range");
        } else {
            if (tok.size() != 2 || !detail::to_long(tok[0], a) || !detail::to_long(tok[1], b))
                throw ParseError(no, "malformed edge line");
            if (a < 1 || b < 1) throw ParseError(no, "vertex id out of range");
            n = std::max({n, a, b});
        }
        raw.emplace_back(a - 1, b - 1);
        raw_line.push_back(no);
    }
    if (header && static_cast<long long>(raw.size()) != m)
        throw ParseError(lines.empty() ? 0 : lines.back().first,
                         "expected " + std::to_string(m) + " edges, found " +
                             std::to_string(raw.size()));
    if (n > 100000000) throw ParseError(0, "vertex count too large");

    out.graph = Graph(static_cast<int>(n));
    std::unordered_set<unsigned long long> seen;
    seen.reserve(raw.size() * 2);
    for (size_t i = 0; i < raw.size(); ++i) {
        int u = static_cast<int>(raw[i].first), v = static_cast<int>(raw[i].second);
        unsigned long long key = (static_cast<unsigned long long>(std::min(u, v)) << 32) |
                                 static_cast<unsigned>(std::max(u, v));
        if (!out.non_simple && (u == v || !seen.insert(key).second)) {
            out.non_simple = Witness{WitnessKind::NonSimple, u, v};
            out.non_simple_line = raw_line[i];
        }
        out.graph.add_edge(u, v);
    }
    return out;
}

inline Graph parse_graph(std::string_view text) {
    ParsedGraph pg = parse_graph_lenient(text);
    if (pg.non_simple) {
        const Witness& w = *pg.non_simple;
        throw ParseError(pg.non_simple_line, w.u == w.v ? "self-loop" : "duplicate edge");
    }
    return std::move(pg.graph);
}

inline std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << "p " << g.n << ' ' << g.m << '\n';
    for (auto [u, v] : g.edges) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

inline std::string format_witness(const Witness& w) {
    std::string s = std::string("witness ") + witness_name(w.kind);
    int k = witness_arity(w.kind);
    if (k >= 1) s += ' ' + std::to_string(w.u + 1);
    if (k >= 2) s += ' ' + std::to_string(w.v + 1);
    return s;
}

inline std::string format_negative(const Witness& w) {
    return "tricert 1 negative\n" + format_witness(w) + '\n';
}

// parses "witness <kind> args" (1-based ids)
inline Witness parse_witness_line(std::string_view line) {
    auto tok = detail::split_ws(line);
    if (tok.size() < 2 || tok[0] != "witness") throw ParseError(0, "malformed witness line");
    static const WitnessKind kinds[] = {WitnessKind::LowDegree,      WitnessKind::NotConnected,
                                        WitnessKind::CutVertex,      WitnessKind::SeparationPair,
                                        WitnessKind::NonSimple,      WitnessKind::TooSmall};
    for (WitnessKind k : kinds) {
        if (tok[1] != witness_name(k)) continue;
        int need = witness_arity(k);
        if (static_cast<int>(tok.size()) != 2 + need) throw ParseError(0, "wrong witness arity");
        Witness w{k};
        long long a = 0;
        if (need >= 1) {
            if (!detail::to_long(tok[2], a)) throw ParseError(0, "bad witness vertex");
            w.u = static_cast<int>(a - 1);
        }
        if (need >= 2) {
            if (!detail::to_long(tok[3], a)) throw ParseError(0, "bad witness vertex");
            w.v = static_cast<int>(a - 1);
        }
        return w;
    }
    throw ParseError(0, "unknown witness kind");
}

}  // namespace tricert
