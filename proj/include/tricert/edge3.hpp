#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "certificate.hpp"
#include "construction.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "verifier.hpp"

namespace tricert {

struct Wheel {
    int hub = -1;
    std::vector<int> rims;  // rims[i] carries the i-th edge of adj[v]
};

struct WheelMapping {
    std::vector<Wheel> phi;
};

// Hub of v, then its rims in adjacency order; vertex ids are assigned consecutively.
inline WheelMapping default_wheel_mapping(const Graph& g) {
    WheelMapping w;
    w.phi.resize(g.n);
    int next = 0;
    for (int v = 0; v < g.n; ++v) {
        w.phi[v].hub = next++;
        for (size_t i = 0; i < g.adj[v].size(); ++i) w.phi[v].rims.push_back(next++);
    }
    return w;
}

// nullopt if phi is not a bijection onto 0..n+2m-1 with one rim per incidence, or some degree is below 3
inline std::optional<Graph> expand_wheels(const Graph& g, const WheelMapping& w) {
    if (static_cast<int>(w.phi.size()) != g.n) return std::nullopt;
    const long long total = static_cast<long long>(g.n) + 2LL * g.m;
    std::vector<char> used(total, 0);
    auto take = [&](int id) {
        if (id < 0 || id >= total || used[id]) return false;
        used[id] = 1;
        return true;
    };
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) < 3 || w.phi[v].rims.size() != g.adj[v].size() || !take(w.phi[v].hub))
            return std::nullopt;
        for (int r : w.phi[v].rims)
            if (!take(r)) return std::nullopt;
    }
    Graph gp(static_cast<int>(total));
    for (int v = 0; v < g.n; ++v) {
        const auto& rims = w.phi[v].rims;
        const int d = static_cast<int>(rims.size());
        for (int i = 0; i < d; ++i) gp.add_edge(w.phi[v].hub, rims[i]);
        for (int i = 0; i < d; ++i) gp.add_edge(rims[i], rims[(i + 1) % d]);
    }
    // slot of each edge in the adjacency of its ends
    std::vector<int> slot_u(g.m, -1), slot_v(g.m, -1);
    for (int v = 0; v < g.n; ++v)
        for (size_t i = 0; i < g.adj[v].size(); ++i) {
            int e = g.adj[v][i].second;
            (g.edges[e].first == v && slot_u[e] < 0 ? slot_u[e] : slot_v[e]) = static_cast<int>(i);
        }
    for (int e = 0; e < g.m; ++e) {
        auto [u, v] = g.edges[e];
        gp.add_edge(w.phi[u].rims[slot_u[e]], w.phi[v].rims[slot_v[e]]);
    }
    return gp;
}

struct WheelReduction {
    Graph gprime;
    WheelMapping phi;
};

// Requires minimum degree 3; |V'| = n+2m, |E'| = 5m.
inline WheelReduction wheel_reduce(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < 3) throw std::invalid_argument("wheel reduction needs minimum degree 3");
    WheelReduction r;
    r.phi = default_wheel_mapping(g);
    r.gprime = *expand_wheels(g, r.phi);
    return r;
}

struct Edge3Certificate {
    WheelMapping phi;
    Certificate cert;  // for the expanded graph
};

struct Edge3Result {
    std::optional<Edge3Certificate> certificate;
    std::optional<EdgeCut> cut;
    bool positive() const { return certificate.has_value(); }
};

namespace detail {

inline EdgeCut cut_of(const Graph& g, const std::vector<int>& es) {
    EdgeCut c;
    for (int e : es) c.edges.push_back(g.edges[e]);
    return c;
}

// Candidate cuts among the original edges at the wheels of the separating vertices.
inline std::optional<EdgeCut> map_back(const Graph& g, const WheelMapping& w, const Witness& wit) {
    std::vector<int> owner(static_cast<size_t>(g.n) + 2 * static_cast<size_t>(g.m), -1);
    for (int v = 0; v < g.n; ++v) {
        owner[w.phi[v].hub] = v;
        for (int r : w.phi[v].rims) owner[r] = v;
    }
    std::vector<int> cand;
    std::unordered_set<int> seen;
    auto add_vertex = [&](int x) {
        if (x < 0) return;
        for (auto [y, e] : g.adj[owner[x]])
            if (seen.insert(e).second) cand.push_back(e);
    };
    if (wit.kind == WitnessKind::NotConnected) {
        EdgeCut none;
        if (verify_edge_cut(g, none)) return none;
    }
    add_vertex(wit.u);
    add_vertex(wit.v);
    for (size_t i = 0; i < cand.size(); ++i) {
        EdgeCut one = cut_of(g, {cand[i]});
        if (verify_edge_cut(g, one)) return one;
    }
    for (size_t i = 0; i < cand.size(); ++i)
        for (size_t j = i + 1; j < cand.size(); ++j) {
            EdgeCut two = cut_of(g, {cand[i], cand[j]});
            if (verify_edge_cut(g, two)) return two;
        }
    return std::nullopt;
}

}  // namespace detail

inline Edge3Result certify_edge3(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("need at least two vertices");
    if (find_non_simple(g)) throw std::invalid_argument("input graph is not simple");
    Edge3Result res;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < 3) {
            std::vector<int> es;
            for (auto [w, e] : g.adj[v]) es.push_back(e);
            EdgeCut cut = detail::cut_of(g, es);
            if (!verify_edge_cut(g, cut)) throw InternalError("low-degree edge cut failed verification");
            res.cut = cut;
            return res;
        }
    WheelReduction wr = wheel_reduce(g);
    CertifyResult cr = certify(wr.gprime);
    if (cr.positive()) {
        res.certificate = Edge3Certificate{std::move(wr.phi), std::move(*cr.certificate)};
        return res;
    }
    auto cut = detail::map_back(g, wr.phi, *cr.witness);
    if (!cut) throw InternalError("could not map the separation back to an edge cut");
    res.cut = std::move(cut);
    return res;
}

struct Edge3VerifyResult {
    bool accepted = false;
    bool phi_ok = false;
    VerifyResult inner;
};

inline Edge3VerifyResult verify_edge3(const Graph& g, const Edge3Certificate& c) {
    Edge3VerifyResult r;
    auto gp = expand_wheels(g, c.phi);
    if (!gp || c.cert.n != gp->n || c.cert.m != gp->m) return r;
    std::unordered_set<std::uint64_t> expected, claimed;
    for (auto [a, b] : gp->edges) expected.insert(detail::pair_key(a, b));
    auto collect = [&](const std::vector<int>& p) {
        for (size_t k = 1; k < p.size(); ++k) claimed.insert(detail::pair_key(p[k - 1], p[k]));
    };
    for (const auto& p : c.cert.s3) collect(p);
    for (const auto& p : c.cert.paths) collect(p);
    if (claimed != expected) return r;
    r.phi_ok = true;
    r.inner = verify_certificate(*gp, c.cert);
    r.accepted = r.inner.accepted;
    return r;
}

inline std::string format_edge_cut(const EdgeCut& c) {
    std::string out = "witness edgecut";
    for (auto [u, v] : c.edges) out += ' ' + std::to_string(u + 1) + '-' + std::to_string(v + 1);
    return out + '\n';
}

inline std::string format_edge3_certificate(const Edge3Certificate& c) {
    std::string out = "tricert 1 edge3-positive\n";
    for (size_t v = 0; v < c.phi.phi.size(); ++v) {
        out += "phi " + std::to_string(v + 1) + " hub " + std::to_string(c.phi.phi[v].hub + 1) + " rim";
        for (int r : c.phi.phi[v].rims) out += ' ' + std::to_string(r + 1);
        out += '\n';
    }
    return out + format_certificate(c.cert);
}

inline std::string format_edge3_result(const Edge3Result& r) {
    if (r.positive()) return format_edge3_certificate(*r.certificate);
    return "tricert 1 negative\n" + format_edge_cut(*r.cut);
}

inline Edge3Certificate parse_edge3_certificate(std::string_view text) {
    Edge3Certificate out;
    bool header = false;
    size_t inner_at = std::string_view::npos;
    for (auto [no, line] : detail::numbered_lines(text)) {
        auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0] == "c" || tok[0][0] == '#') continue;
        if (!header) {
            if (tok.size() != 3 || tok[0] != "tricert" || tok[1] != "1" || tok[2] != "edge3-positive")
                throw ParseError(no, "expected edge3 certificate header");
            header = true;
            continue;
        }
        if (tok[0] == "tricert") {
            inner_at = static_cast<size_t>(line.data() - text.data());
            break;
        }
        long long v = 0, h = 0;
        if (tok.size() < 4 || tok[0] != "phi" || tok[2] != "hub" || !detail::to_long(tok[1], v) ||
            !detail::to_long(tok[3], h) || v != static_cast<long long>(out.phi.phi.size()) + 1 || h < 1 ||
            h > 2000000000LL)
            throw ParseError(no, "malformed phi line");
        Wheel w;
        w.hub = static_cast<int>(h - 1);
        if (tok.size() < 5 || tok[4] != "rim") throw ParseError(no, "malformed phi line");
        w.rims = detail::parse_verts(tok, 5, no);
        out.phi.phi.push_back(std::move(w));
    }
    if (!header) throw ParseError(0, "empty certificate");
    if (inner_at == std::string_view::npos) throw ParseError(0, "missing embedded certificate");
    CertificateFile cf = parse_certificate(text.substr(inner_at));
    if (!cf.positive) throw ParseError(0, "embedded certificate is not positive");
    out.cert = std::move(cf.cert);
    return out;
}

}  // namespace tricert
