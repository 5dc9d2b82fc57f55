#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "counters.hpp"
#include "dfs.hpp"
#include "graph.hpp"

namespace tricert {

enum class ChainType : unsigned char { None, T1, T2a, T2b, T3a, T3b };

inline const char* chain_type_name(ChainType t) {
    switch (t) {
        case ChainType::None: return "0";
        case ChainType::T1: return "1";
        case ChainType::T2a: return "2a";
        case ChainType::T2b: return "2b";
        case ChainType::T3a: return "3a";
        case ChainType::T3b: return "3b";
    }
    return "?";
}

struct Chain {
    std::vector<int> verts;  // s(C) first, t(C) last
    int backedge = -1;
    int parent = -1;
    ChainType type = ChainType::None;
    int caterpillar = -1;

    int s() const { return verts.front(); }
    int t() const { return verts.back(); }
    int length() const { return static_cast<int>(verts.size()) - 1; }
};

struct Caterpillar {
    std::vector<int> members;  // the 3b chain first, then its 2b ancestors upwards
    int parent = -1;
};

struct ChainDecomposition {
    DfsForest forest;
    std::vector<Chain> chains;
    std::vector<int> edge_chain;
    std::vector<int> inner_chain_of;
    std::vector<std::vector<int>> children;
    std::vector<Caterpillar> caterpillars;
    int r = -1;
    int x = -1;

    // position of v along chain c, for v an inner vertex or t(c); c >= 1 uses the tree part
    int position(int c, int v) const {
        const Chain& ch = chains[c];
        if (c == 0) return forest.depth[ch.verts.front()] - forest.depth[v];
        if (v == ch.s()) return 0;
        return 1 + forest.depth[ch.verts[1]] - forest.depth[v];
    }
};

namespace detail {

// D1: first candidate that verifies as a cut vertex
inline std::variant<ChainDecomposition, Witness> cut_vertex_from(const Graph& g,
                                                                 const std::vector<int>& cand) {
    std::vector<char> tried(g.n, 0);
    for (int v : cand) {
        if (v < 0 || tried[v]) continue;
        tried[v] = 1;
        Witness w{WitnessKind::CutVertex, v};
        if (verify_witness(g, w)) return w;
    }
    throw std::logic_error("no verified cut vertex among candidates");
}

}  // namespace detail

inline std::variant<ChainDecomposition, Witness> decompose(const Graph& g, DfsForest f,
                                                           Counters* cnt = nullptr) {
    const int r = f.root;
    if (f.tree_children[r] >= 2) {
        Witness w{WitnessKind::CutVertex, r};
        if (verify_witness(g, w)) return w;
        throw std::logic_error("root witness failed verification");
    }
    const int u = f.second;
    if (f.tree_children[u] >= 2) {
        Witness w{WitnessKind::SeparationPair, r, u};
        if (verify_witness(g, w)) return w;
        throw std::logic_error("second-vertex witness failed verification");
    }

    ChainDecomposition d;
    d.r = r;
    d.edge_chain.assign(g.m, -1);
    d.inner_chain_of.assign(g.n, -1);
    std::vector<char> in_chain(g.n, 0);

    int ea = -1, eb = -1;
    for (auto [w, e] : g.adj[r]) {
        if (f.is_tree[e]) continue;
        if (ea < 0) ea = e;
        else if (eb < 0) eb = e;
    }
    if (eb < 0) throw std::logic_error("root has fewer than two backedges");
    const int a = g.other(ea, r), b = g.other(eb, r);
    int x = a;
    while (!f.is_ancestor(x, b)) x = f.parent[x];
    d.x = x;

    auto step = [&] {
        if (cnt) ++cnt->decompose_steps;
    };

    // C0 = x ->T r
    {
        Chain c0;
        for (int v = x;; v = f.parent[v]) {
            step();
            c0.verts.push_back(v);
            in_chain[v] = 1;
            if (v == r) break;
            d.edge_chain[f.parent_edge[v]] = 0;
            if (v != x) d.inner_chain_of[v] = 0;
        }
        d.chains.push_back(std::move(c0));
    }
    // C1, C2 = r a ->T x, r b ->T x
    for (int e : {ea, eb}) {
        int id = static_cast<int>(d.chains.size());
        Chain c;
        c.backedge = e;
        d.edge_chain[e] = id;
        c.verts.push_back(r);
        for (int v = g.other(e, r);; v = f.parent[v]) {
            step();
            c.verts.push_back(v);
            if (v == x) break;
            in_chain[v] = 1;
            d.inner_chain_of[v] = id;
            d.edge_chain[f.parent_edge[v]] = id;
        }
        d.chains.push_back(std::move(c));
    }

    d.chains.reserve(std::max(3, g.m - g.n + 2));
    std::vector<int> suspects;
    for (int v : f.order) {
        for (auto [w, e] : g.adj[v]) {
            step();
            if (f.is_tree[e] || d.edge_chain[e] >= 0 || f.dfi[w] < f.dfi[v]) continue;
            int id = static_cast<int>(d.chains.size());
            Chain c;
            c.backedge = e;
            d.edge_chain[e] = id;
            int len = 2;
            for (int u = w; !in_chain[u] && u != v; u = f.parent[u]) ++len;
            c.verts.reserve(len);
            c.verts.push_back(v);
            int cur = w;
            while (!in_chain[cur] && cur != v) {
                step();
                c.verts.push_back(cur);
                in_chain[cur] = 1;
                d.inner_chain_of[cur] = id;
                d.edge_chain[f.parent_edge[cur]] = id;
                cur = f.parent[cur];
            }
            c.verts.push_back(cur);
            if (cur == v) suspects.push_back(v);
            d.chains.push_back(std::move(c));
        }
    }

    for (int e = 0; e < g.m; ++e) {
        if (d.edge_chain[e] >= 0) continue;
        suspects.push_back(g.edges[e].first);
        suspects.push_back(g.edges[e].second);
    }
    if (!suspects.empty()) return detail::cut_vertex_from(g, suspects);

    d.children.assign(d.chains.size(), {});
    for (size_t i = 1; i < d.chains.size(); ++i) {
        int t = d.chains[i].t();
        int p = d.edge_chain[f.parent_edge[t]];
        d.chains[i].parent = p;
        d.children[p].push_back(static_cast<int>(i));
    }
    d.forest = std::move(f);
    return d;
}

inline void classify(ChainDecomposition& d, Counters* cnt = nullptr) {
    const DfsForest& f = d.forest;
    std::vector<char> marked(d.chains.size(), 0);
    d.caterpillars.clear();
    for (size_t i = 1; i < d.chains.size(); ++i) {
        if (cnt) ++cnt->classify_steps;
        Chain& c = d.chains[i];
        int k = c.parent;
        const Chain& p = d.chains[k];
        if (k == 0 || f.dfi[c.s()] >= f.dfi[p.t()]) {
            c.type = ChainType::T1;
        } else if (c.s() == p.s()) {
            if (c.length() == 1) {
                c.type = ChainType::T2a;
            } else {
                c.type = ChainType::T2b;
                marked[i] = 1;
            }
        } else if (!marked[k]) {
            c.type = ChainType::T3a;
        } else {
            c.type = ChainType::T3b;
            Caterpillar cat;
            int id = static_cast<int>(d.caterpillars.size());
            cat.members.push_back(static_cast<int>(i));
            c.caterpillar = id;
            int j = k;
            while (marked[j]) {
                if (cnt) ++cnt->classify_steps;
                marked[j] = 0;
                cat.members.push_back(j);
                d.chains[j].caterpillar = id;
                j = d.chains[j].parent;
            }
            cat.parent = j;
            d.caterpillars.push_back(std::move(cat));
        }
    }
}

inline std::string dump_chains(const ChainDecomposition& d) {
    std::string out;
    for (size_t i = 0; i < d.chains.size(); ++i) {
        const Chain& c = d.chains[i];
        out += 'C' + std::to_string(i) + " type=" + chain_type_name(c.type) +
               " parent=" + std::to_string(c.parent) + " :";
        for (int v : c.verts) out += ' ' + std::to_string(v + 1);
        out += '\n';
    }
    return out;
}

}  // namespace tricert
