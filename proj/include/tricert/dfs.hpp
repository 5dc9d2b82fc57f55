#pragma once

#include <variant>
#include <vector>

#include "counters.hpp"
#include "graph.hpp"

namespace tricert {

struct DfsForest {
    int root = 0;
    int second = -1;
    std::vector<int> dfi;
    std::vector<int> order;  // vertex by dfi
    std::vector<int> parent;
    std::vector<int> parent_edge;
    std::vector<int> subtree_size;
    std::vector<int> depth;
    std::vector<char> is_tree;  // per edge
    std::vector<int> tree_children;

    bool is_ancestor(int x, int y) const {
        return dfi[x] <= dfi[y] && dfi[y] < dfi[x] + subtree_size[x];
    }

    // ancestor endpoint of a backedge
    int back_source(const Graph& g, int e) const {
        auto [a, b] = g.edges[e];
        return dfi[a] < dfi[b] ? a : b;
    }
};

inline std::variant<DfsForest, Witness> run_dfs(const Graph& g, int root = 0,
                                                Counters* cnt = nullptr) {
    DfsForest f;
    f.root = root;
    f.dfi.assign(g.n, -1);
    f.parent.assign(g.n, -1);
    f.parent_edge.assign(g.n, -1);
    f.subtree_size.assign(g.n, 1);
    f.depth.assign(g.n, 0);
    f.is_tree.assign(g.m, 0);
    f.tree_children.assign(g.n, 0);
    f.order.reserve(g.n);

    std::vector<int> next(g.n, 0);
    std::vector<int> stack;
    f.dfi[root] = 0;
    f.order.push_back(root);
    stack.push_back(root);
    while (!stack.empty()) {
        int v = stack.back();
        if (next[v] == static_cast<int>(g.adj[v].size())) {
            stack.pop_back();
            if (f.parent[v] >= 0) f.subtree_size[f.parent[v]] += f.subtree_size[v];
            continue;
        }
        auto [w, e] = g.adj[v][next[v]++];
        if (cnt) ++cnt->dfs_steps;
        if (f.dfi[w] >= 0) continue;
        f.dfi[w] = static_cast<int>(f.order.size());
        f.order.push_back(w);
        f.parent[w] = v;
        f.parent_edge[w] = e;
        f.depth[w] = f.depth[v] + 1;
        f.is_tree[e] = 1;
        ++f.tree_children[v];
        stack.push_back(w);
    }
    if (static_cast<int>(f.order.size()) < g.n) {
        for (int v = 0; v < g.n; ++v)
            if (f.dfi[v] < 0) return Witness{WitnessKind::NotConnected, root, v};
    }
    if (g.n > 1) f.second = f.order[1];
    return f;
}

}  // namespace tricert
