#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace tricert {

// Seeded 64-bit source; (seed, stream) pairs give independent reproducible sequences.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        eng_.seed(seq);
    }
    std::uint64_t next() { return eng_(); }
    // uniform in [0, bound), bound > 0; plain rejection so results do not depend on the std library
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do x = eng_();
        while (x >= limit);
        return x % bound;
    }
    int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(static_cast<std::uint64_t>(i))]);
    }

private:
    std::mt19937_64 eng_;
};

struct OracleResult {
    bool ok = false;
    std::optional<Witness> witness;
};

inline OracleResult brute_vertex_3conn(const Graph& g) {
    if (g.n <= 3) return {false, Witness{WitnessKind::TooSmall}};
    std::vector<char> removed(g.n, 0);
    if (count_components(g, removed) > 1) {
        auto label = component_labels(g);
        for (int v = 1; v < g.n; ++v)
            if (label[v] != label[0]) return {false, Witness{WitnessKind::NotConnected, 0, v}};
    }
    for (int u = 0; u < g.n; ++u) {
        removed[u] = 1;
        if (count_components(g, removed) > 1) return {false, Witness{WitnessKind::CutVertex, u}};
        for (int v = u + 1; v < g.n; ++v) {
            removed[v] = 1;
            bool split = count_components(g, removed) > 1;
            removed[v] = 0;
            if (split) return {false, Witness{WitnessKind::SeparationPair, u, v}};
        }
        removed[u] = 0;
    }
    return {true, std::nullopt};
}

struct EdgeCut {
    std::vector<std::pair<int, int>> edges;  // empty: the graph is already disconnected

    bool operator==(const EdgeCut&) const = default;
};

// deletes the named edges (one copy each) and counts components
inline bool verify_edge_cut(const Graph& g, const EdgeCut& cut) {
    if (g.n < 2) return false;
    if (cut.edges.size() > 2) return false;
    int skip[2] = {-1, -1};
    for (size_t k = 0; k < cut.edges.size(); ++k) {
        auto [u, v] = cut.edges[k];
        if (u < 0 || v < 0 || u >= g.n || v >= g.n) return false;
        for (auto [w, e] : g.adj[u])
            if (w == v && e != skip[0]) {
                skip[k] = e;
                break;
            }
        if (skip[k] < 0) return false;
    }
    std::vector<char> removed(g.n, 0);
    return count_components(g, removed, skip[0], skip[1]) > 1;
}

struct EdgeOracleResult {
    bool ok = false;
    bool too_small = false;
    std::optional<EdgeCut> cut;
};

inline EdgeOracleResult brute_edge_3conn(const Graph& g) {
    if (g.n < 2) return {false, true, std::nullopt};
    std::vector<char> removed(g.n, 0);
    if (count_components(g, removed) > 1) return {false, false, EdgeCut{}};
    for (int e = 0; e < g.m; ++e)
        if (count_components(g, removed, e) > 1) return {false, false, EdgeCut{{g.edges[e]}}};
    for (int e = 0; e < g.m; ++e) {
        for (int f = e + 1; f < g.m; ++f)
            if (count_components(g, removed, e, f) > 1)
                return {false, false, EdgeCut{{g.edges[e], g.edges[f]}}};
    }
    return {true, false, std::nullopt};
}

// Subdivision held as an edge subset of g; links are recomputed on every query.
class NaiveSubdivisionModel {
public:
    struct Link {
        std::vector<int> verts;
        std::vector<int> edges;
    };

    explicit NaiveSubdivisionModel(const Graph& g) : g_(&g), in_(g.m, 0), deg_(g.n, 0) {}

    const Graph& graph() const { return *g_; }

    void add_path(const std::vector<int>& p) {
        for (size_t k = 1; k < p.size(); ++k) {
            int e = edge_between(p[k - 1], p[k]);
            if (e < 0 || in_[e]) throw std::invalid_argument("not a fresh edge of g");
            in_[e] = 1;
            ++deg_[p[k - 1]];
            ++deg_[p[k]];
        }
    }

    bool contains_vertex(int v) const { return deg_[v] > 0; }
    bool contains_edge(int e) const { return in_[e] != 0; }
    int degree(int v) const { return deg_[v]; }
    bool is_real(int v) const { return deg_[v] >= 3; }
    int real_count() const {
        int c = 0;
        for (int v = 0; v < g_->n; ++v) c += is_real(v);
        return c;
    }

    std::vector<Link> links() const {
        std::vector<Link> out;
        std::vector<char> used(g_->m, 0);
        for (int v = 0; v < g_->n; ++v) {
            if (!is_real(v)) continue;
            for (auto [w, e] : g_->adj[v]) {
                if (!in_[e] || used[e]) continue;
                Link L{{v}, {}};
                int cur = v, ce = e;
                while (true) {
                    used[ce] = 1;
                    L.edges.push_back(ce);
                    cur = g_->other(ce, cur);
                    L.verts.push_back(cur);
                    if (is_real(cur)) break;
                    int nxt = -1;
                    for (auto [x, f] : g_->adj[cur])
                        if (in_[f] && !used[f]) nxt = f;
                    if (nxt < 0) break;
                    ce = nxt;
                }
                out.push_back(std::move(L));
            }
        }
        return out;
    }

    int edge_between(int u, int v) const {
        for (auto [w, e] : g_->adj[u])
            if (w == v) return e;
        return -1;
    }

private:
    const Graph* g_;
    std::vector<char> in_;
    std::vector<int> deg_;
};

// The three conditions of a BG-path, evaluated literally.
inline bool is_bg_path_naive(const NaiveSubdivisionModel& s, const std::vector<int>& p) {
    const Graph& g = s.graph();
    if (p.size() < 2) return false;
    const int x = p.front(), y = p.back();
    if (x == y) return false;
    std::set<int> seen;
    for (size_t k = 0; k < p.size(); ++k) {
        if (!seen.insert(p[k]).second) return false;
        bool inner = k > 0 && k + 1 < p.size();
        if (inner == s.contains_vertex(p[k])) return false;
        if (k > 0) {
            int e = s.edge_between(p[k - 1], p[k]);
            if (e < 0 || s.contains_edge(e)) return false;
        }
    }
    (void)g;
    auto links = s.links();
    auto inner_of = [&](const NaiveSubdivisionModel::Link& L, int v) {
        for (size_t k = 1; k + 1 < L.verts.size(); ++k)
            if (L.verts[k] == v) return true;
        return false;
    };
    auto has = [&](const NaiveSubdivisionModel::Link& L, int v) {
        return std::find(L.verts.begin(), L.verts.end(), v) != L.verts.end();
    };
    for (const auto& L : links) {
        if (has(L, x) && has(L, y) && (inner_of(L, x) || inner_of(L, y))) return false;
    }
    int lx = -1, ly = -1;
    for (size_t i = 0; i < links.size(); ++i) {
        if (inner_of(links[i], x)) lx = static_cast<int>(i);
        if (inner_of(links[i], y)) ly = static_cast<int>(i);
    }
    if (lx >= 0 && ly >= 0 && s.real_count() >= 4) {
        auto ends = [&](int i) -> std::pair<int, int> {
            return std::minmax(links[i].verts.front(), links[i].verts.back());
        };
        if (lx != ly && ends(lx) == ends(ly)) return false;
    }
    return true;
}

namespace detail {

inline std::uint64_t pair_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

struct GrowingGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<std::uint64_t> has;

    void add(int u, int v) {
        edges.emplace_back(u, v);
        has.insert(pair_key(u, v));
    }
    int subdivide(int e) {
        auto [a, b] = edges[e];
        int x = n++;
        has.erase(pair_key(a, b));
        edges[e] = {a, x};
        has.insert(pair_key(a, x));
        add(x, b);
        return x;
    }
};

inline Graph relabel(int n, std::vector<std::pair<int, int>> edges, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    rng.shuffle(edges);
    Graph g(n);
    for (auto [u, v] : edges) {
        if (rng.below(2)) std::swap(u, v);
        g.add_edge(perm[u], perm[v]);
    }
    return g;
}

}  // namespace detail

struct GenStats {
    int add = 0, sub1 = 0, sub2 = 0;
};

// K4 followed by k random BG-operations, then labels and edge order shuffled.
inline Graph gen_random_3connected(int k, std::uint64_t seed, GenStats* stats = nullptr) {
    Rng rng(seed, 1);
    detail::GrowingGraph G;
    G.n = 4;
    G.edges.reserve(6 + 3 * static_cast<size_t>(k));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) G.add(i, j);
    GenStats st;
    for (int op = 0; op < k; ++op) {
        int kind = rng.below(3);
        long long full = static_cast<long long>(G.n) * (G.n - 1) / 2;
        if (kind == 0 && static_cast<long long>(G.edges.size()) == full) {
            --op;
            continue;
        }
        if (kind == 0) {
            int u, v;
            do {
                u = rng.below(G.n);
                v = rng.below(G.n);
            } while (u == v || G.has.count(detail::pair_key(u, v)));
            G.add(u, v);
            ++st.add;
        } else if (kind == 1) {
            int e = rng.below(static_cast<int>(G.edges.size()));
            auto [a, b] = G.edges[e];
            int y;
            do y = rng.below(G.n);
            while (y == a || y == b);
            int x = G.subdivide(e);
            G.add(x, y);
            ++st.sub1;
        } else {
            int m = static_cast<int>(G.edges.size());
            int e = rng.below(m), f;
            do f = rng.below(m);
            while (f == e);
            int x = G.subdivide(e);
            int y = G.subdivide(f);
            G.add(x, y);
            ++st.sub2;
        }
    }
    if (stats) *stats = st;
    return detail::relabel(G.n, std::move(G.edges), rng);
}

// Erdős–Rényi G(n,p); may be anything
inline Graph gen_gnp(int n, double p, std::uint64_t seed) {
    Rng rng(seed, 2);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.emplace_back(u, v);
    return detail::relabel(n, std::move(edges), rng);
}

struct PlantedGraph {
    Graph graph;
    int u = -1, v = -1;  // the planted separation pair
};

// Glue a random 3-connected gadget onto two vertices of g; an edge present on both sides is kept once.
inline PlantedGraph plant_separation_pair(const Graph& g, std::uint64_t seed, int gadget_ops = 2) {
    if (g.n < 4) throw std::invalid_argument("host graph too small");
    Rng rng(seed, 3);
    Graph h = gen_random_3connected(gadget_ops, rng.next());
    int u = rng.below(g.n), v = rng.below(g.n - 1);
    if (v >= u) ++v;
    int p = rng.below(h.n), q = rng.below(h.n - 1);
    if (q >= p) ++q;
    bool uv_adj = false;
    for (auto [w, e] : g.adj[u]) uv_adj |= w == v;
    // gadget vertex -> combined id
    std::vector<int> map(h.n);
    int next = g.n;
    for (int w = 0; w < h.n; ++w) map[w] = w == p ? u : w == q ? v : next++;
    std::vector<std::pair<int, int>> edges = g.edges;
    for (auto [a, b] : h.edges) {
        if (uv_adj && std::minmax(a, b) == std::minmax(p, q)) continue;
        edges.emplace_back(map[a], map[b]);
    }
    std::vector<int> perm(next);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    rng.shuffle(edges);
    PlantedGraph out{Graph(next), perm[u], perm[v]};
    for (auto [a, b] : edges) out.graph.add_edge(perm[a], perm[b]);
    if (!verify_witness(out.graph, {WitnessKind::SeparationPair, out.u, out.v}))
        throw std::logic_error("planted pair does not separate");
    return out;
}

}  // namespace tricert
