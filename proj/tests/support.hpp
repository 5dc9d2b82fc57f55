#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <tricert/tricert.hpp>

namespace tricert::testing {

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// hub 0, rim 1..k
inline Graph wheel(int k) {
    Graph g(k + 1);
    for (int i = 0; i < k; ++i) g.add_edge(1 + i, 1 + (i + 1) % k);
    for (int i = 0; i < k; ++i) g.add_edge(0, 1 + i);
    return g;
}

// two K4s sharing the adjacent pair {0,1}
inline Graph glued_k4() {
    return make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

// two K4s joined by the edges 0-4 and 1-5
inline Graph k4_pair_bridge() {
    return make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7},
                          {6, 7}, {0, 4}, {1, 5}});
}

inline int min_degree(const Graph& g) {
    int d = g.n ? g.degree(0) : 0;
    for (int v = 1; v < g.n; ++v) d = std::min(d, g.degree(v));
    return d;
}

struct CorpusGraph {
    Graph g;
    std::string origin;
};

// Mixed small corpus: generator outputs, planted pairs, and random graphs with min degree 3.
inline std::vector<CorpusGraph> small_corpus(int count, std::uint64_t seed, int max_n = 10) {
    std::vector<CorpusGraph> out;
    Rng rng(seed, 11);
    while (static_cast<int>(out.size()) < count) {
        const int kind = static_cast<int>(out.size() % 3);
        const std::uint64_t s = rng.next();
        if (kind == 0) {
            Graph g = gen_random_3connected(static_cast<int>(rng.below(9)), s);
            if (g.n <= max_n) out.push_back({std::move(g), "gen"});
        } else if (kind == 1) {
            Graph host = gen_random_3connected(static_cast<int>(rng.below(3)), s);
            if (host.n > max_n - 2) continue;
            PlantedGraph p = plant_separation_pair(host, rng.next(), static_cast<int>(rng.below(3)));
            if (p.graph.n <= max_n) out.push_back({std::move(p.graph), "planted"});
        } else {
            int n = 4 + static_cast<int>(rng.below(max_n - 3));
            double prob = 0.35 + 0.5 * rng.unit();
            Graph g = gen_gnp(n, prob, s);
            if (min_degree(g) >= 3) out.push_back({std::move(g), "gnp"});
        }
    }
    return out;
}

// Inputs for the edge-connectivity check: two small 3-connected parts joined by one to three edges,
// and random graphs without a degree filter.
inline std::vector<CorpusGraph> edge_corpus(int count, std::uint64_t seed, int max_n = 9) {
    std::vector<CorpusGraph> out;
    Rng rng(seed, 12);
    while (static_cast<int>(out.size()) < count) {
        if (out.size() % 2 == 0) {
            Graph a = gen_random_3connected(static_cast<int>(rng.below(2)), rng.next());
            Graph b = gen_random_3connected(static_cast<int>(rng.below(2)), rng.next());
            if (a.n + b.n > max_n) continue;
            Graph g(a.n + b.n);
            for (auto [x, y] : a.edges) g.add_edge(x, y);
            for (auto [x, y] : b.edges) g.add_edge(a.n + x, a.n + y);
            const int joins = 1 + static_cast<int>(rng.below(3));
            std::set<std::pair<int, int>> used;
            while (static_cast<int>(used.size()) < joins) {
                std::pair<int, int> e{static_cast<int>(rng.below(a.n)), a.n + static_cast<int>(rng.below(b.n))};
                if (used.insert(e).second) g.add_edge(e.first, e.second);
            }
            out.push_back({std::move(g), "joined"});
        } else {
            int n = 2 + static_cast<int>(rng.below(max_n - 1));
            out.push_back({gen_gnp(n, 0.3 + 0.6 * rng.unit(), rng.next()), "gnp"});
        }
    }
    return out;
}

// Smoothed graph of the subdivision: real vertices, one edge per link.
inline Graph smoothed(const NaiveSubdivisionModel& s) {
    const Graph& g = s.graph();
    std::vector<int> id(g.n, -1);
    int k = 0;
    for (int v = 0; v < g.n; ++v)
        if (s.is_real(v)) id[v] = k++;
    Graph h(k);
    for (const auto& L : s.links()) h.add_edge(id[L.verts.front()], id[L.verts.back()]);
    return h;
}

// Independent forward check of a certificate: S3 base, Def. 4 at every step, full edge cover.
inline bool naive_certificate_ok(const Graph& g, const Certificate& c) {
    if (c.n != g.n || c.m != g.m) return false;
    NaiveSubdivisionModel s(g);
    auto valid_ids = [&](const std::vector<int>& p) {
        if (p.size() < 2) return false;
        std::set<int> seen;
        for (int v : p)
            if (v < 0 || v >= g.n || !seen.insert(v).second) return false;
        for (size_t k = 1; k < p.size(); ++k)
            if (s.edge_between(p[k - 1], p[k]) < 0) return false;
        return true;
    };
    // S3: three internally disjoint paths between the same two ends
    const int p = c.s3[0].empty() ? -1 : c.s3[0].front();
    const int q = c.s3[0].empty() ? -1 : c.s3[0].back();
    for (const auto& ch : c.s3) {
        if (!valid_ids(ch)) return false;
        if (!((ch.front() == p && ch.back() == q) || (ch.front() == q && ch.back() == p))) return false;
        for (size_t k = 1; k + 1 < ch.size(); ++k)
            if (s.contains_vertex(ch[k])) return false;
        try {
            s.add_path(ch);
        } catch (const std::invalid_argument&) {
            return false;
        }
    }
    if (p == q) return false;
    for (const auto& path : c.paths) {
        if (!valid_ids(path) || !is_bg_path_naive(s, path)) return false;
        try {
            s.add_path(path);
        } catch (const std::invalid_argument&) {
            return false;
        }
    }
    for (int e = 0; e < g.m; ++e)
        if (!s.contains_edge(e)) return false;
    return true;
}

// Replays every emitted path on the naive model and checks the checkpoint invariants.
struct CheckpointReplay : ConstructionObserver {
    const Graph& g;
    const ChainDecomposition& d;
    const Engine* eng = nullptr;
    NaiveSubdivisionModel s;
    int paths = 0, bad_paths = 0, checkpoints = 0;
    int not_closed = 0, not_modular = 0, r1_violations = 0, r2_violations = 0;
    int goodness_checked = 0, goodness_mismatch = 0;

    CheckpointReplay(const Graph& g_, const ChainDecomposition& d_) : g(g_), d(d_), s(g_) {
        for (int c = 0; c < 3; ++c) s.add_path(d.chains[c].verts);
    }

    void on_path(const std::vector<int>& p, const PathOrigin& o) override {
        ++paths;
        if (!is_bg_path_naive(s, p)) ++bad_paths;
        s.add_path(p);
        if (o.kind == PathOrigin::Single) {
            ChainType t = d.chains[o.id].type;
            if (t != ChainType::T1 && t != ChainType::T2a && t != ChainType::T3a) ++r1_violations;
        }
    }

    void on_checkpoint() override {
        ++checkpoints;
        const DfsForest& f = d.forest;
        for (int v = 0; v < g.n; ++v)
            if (s.contains_vertex(v) && v != f.root && !s.contains_edge(f.parent_edge[v])) ++not_closed;
        std::vector<int> in_chain(d.chains.size(), 0), len(d.chains.size(), 0);
        for (int e = 0; e < g.m; ++e) {
            ++len[d.edge_chain[e]];
            in_chain[d.edge_chain[e]] += s.contains_edge(e);
        }
        for (size_t c = 0; c < d.chains.size(); ++c)
            if (in_chain[c] != 0 && in_chain[c] != len[c]) ++not_modular;
        // R2: tree-only links have no parallel link, except C0 while it is still a link of S3
        auto links = s.links();
        auto ends = [](const NaiveSubdivisionModel::Link& L) {
            return std::minmax(L.verts.front(), L.verts.back());
        };
        for (size_t i = 0; i < links.size(); ++i) {
            bool tree_only = true, is_c0 = true;
            for (int e : links[i].edges) {
                tree_only = tree_only && f.is_tree[e];
                is_c0 = is_c0 && d.edge_chain[e] == 0;
            }
            if (!tree_only || (is_c0 && static_cast<int>(links[i].edges.size()) == d.chains[0].length())) continue;
            for (size_t j = 0; j < links.size(); ++j)
                if (j != i && ends(links[i]) == ends(links[j])) ++r2_violations;
        }
        if (eng) check_goodness();
    }

    // literal reading: case 1, or a real vertex of C_k strictly between s(C_k) and s(C_j)
    void check_goodness() {
        for (size_t cat = 0; cat < d.caterpillars.size(); ++cat) {
            const Caterpillar& L = d.caterpillars[cat];
            if (!eng->chain_added(L.parent) || eng->chain_added(L.members.front())) continue;
            const Chain& ck = d.chains[L.parent];
            const int sj = d.chains[L.members.front()].s();
            bool literal = false;
            if (d.forest.dfi[sj] < d.forest.dfi[ck.t()]) {
                literal = true;
            } else {
                auto it = std::find(ck.verts.begin() + 1, ck.verts.end(), sj);
                if (it != ck.verts.end())
                    for (auto w = ck.verts.begin() + 1; w != it; ++w) literal = literal || s.is_real(*w);
            }
            ++goodness_checked;
            if (literal != eng->is_good_caterpillar(static_cast<int>(cat))) ++goodness_mismatch;
        }
    }
};

enum class Mutation { Drop, Duplicate, SwapAdjacent, Splice, Truncate, Reverse };

inline const char* mutation_name(Mutation m) {
    switch (m) {
        case Mutation::Drop: return "drop";
        case Mutation::Duplicate: return "duplicate";
        case Mutation::SwapAdjacent: return "swap";
        case Mutation::Splice: return "splice";
        case Mutation::Truncate: return "truncate";
        case Mutation::Reverse: return "reverse";
    }
    return "?";
}

// nullopt when the mutation does not apply to this certificate
inline std::optional<Certificate> mutate(const Graph& g, const Certificate& c, Mutation m, Rng& rng) {
    Certificate out = c;
    auto& ps = out.paths;
    if (ps.empty()) return std::nullopt;
    const size_t i = rng.below(ps.size());
    switch (m) {
        case Mutation::Drop:
            ps.erase(ps.begin() + static_cast<long>(i));
            break;
        case Mutation::Duplicate:
            ps.insert(ps.begin() + static_cast<long>(rng.below(ps.size() + 1)), ps[i]);
            break;
        case Mutation::SwapAdjacent:
            if (ps.size() < 2) return std::nullopt;
            std::swap(ps[std::min(i, ps.size() - 2)], ps[std::min(i, ps.size() - 2) + 1]);
            break;
        case Mutation::Splice: {
            auto& p = ps[i];
            const size_t k = rng.below(p.size());
            int v = static_cast<int>(rng.below(g.n));
            if (v == p[k]) v = (v + 1) % g.n;
            p[k] = v;
            break;
        }
        case Mutation::Truncate:
            if (ps[i].size() < 3) return std::nullopt;
            ps[i].pop_back();
            break;
        case Mutation::Reverse:
            std::reverse(ps[i].begin(), ps[i].end());
            break;
    }
    return out;
}

inline constexpr Mutation kAllMutations[] = {Mutation::Drop,     Mutation::Duplicate, Mutation::SwapAdjacent,
                                             Mutation::Splice,   Mutation::Truncate,  Mutation::Reverse};

}  // namespace tricert::testing
