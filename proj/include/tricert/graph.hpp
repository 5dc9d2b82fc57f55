#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tricert {

struct Graph {
    int n = 0;
    int m = 0;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge id)
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(vertices) {}

    // no simplicity check here; see find_non_simple
    int add_edge(int u, int v) {
        int id = m++;
        edges.emplace_back(u, v);
        adj[u].emplace_back(v, id);
        if (u != v) adj[v].emplace_back(u, id);
        return id;
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    int other(int e, int v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }
};

enum class WitnessKind { LowDegree, NotConnected, CutVertex, SeparationPair, NonSimple, TooSmall };

struct Witness {
    WitnessKind kind = WitnessKind::TooSmall;
    int u = -1;
    int v = -1;

    bool operator==(const Witness&) const = default;
};

inline const char* witness_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::LowDegree: return "lowdegree";
        case WitnessKind::NotConnected: return "notconnected";
        case WitnessKind::CutVertex: return "cutvertex";
        case WitnessKind::SeparationPair: return "separationpair";
        case WitnessKind::NonSimple: return "nonsimple";
        case WitnessKind::TooSmall: return "toosmall";
    }
    return "?";
}

inline int witness_arity(WitnessKind k) {
    switch (k) {
        case WitnessKind::LowDegree:
        case WitnessKind::CutVertex: return 1;
        case WitnessKind::NotConnected:
        case WitnessKind::SeparationPair:
        case WitnessKind::NonSimple: return 2;
        case WitnessKind::TooSmall: return 0;
    }
    return 0;
}

// first loop or repeated edge, as a NonSimple witness
inline std::optional<Witness> find_non_simple(const Graph& g) {
    std::vector<int> seen(g.n, -1);
    for (int u = 0; u < g.n; ++u) {
        for (auto [w, e] : g.adj[u]) {
            if (w == u) return Witness{WitnessKind::NonSimple, u, u};
            if (seen[w] == u) return Witness{WitnessKind::NonSimple, u, w};
            seen[w] = u;
        }
    }
    return std::nullopt;
}

inline std::optional<Witness> precheck(const Graph& g) {
    if (g.n <= 3) return Witness{WitnessKind::TooSmall};
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) <= 2) return Witness{WitnessKind::LowDegree, v};
    return std::nullopt;
}

// number of components of g minus the vertices flagged in removed (and minus edge skip_a / skip_b)
inline int count_components(const Graph& g, const std::vector<char>& removed, int skip_a = -1,
                            int skip_b = -1) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    int comps = 0;
    for (int s = 0; s < g.n; ++s) {
        if (removed[s] || seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adj[v]) {
                if (e == skip_a || e == skip_b || removed[w] || seen[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return comps;
}

inline std::vector<int> component_labels(const Graph& g) {
    std::vector<int> label(g.n, -1);
    std::vector<int> stack;
    int c = 0;
    for (int s = 0; s < g.n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adj[v])
                if (label[w] < 0) {
                    label[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    return label;
}

inline bool verify_witness(const Graph& g, const Witness& w) {
    int need = witness_arity(w.kind);
    auto check = [&](int v) {
        if (v < 0 || v >= g.n) throw std::out_of_range("witness vertex out of range");
    };
    if (need >= 1) check(w.u);
    if (need >= 2) check(w.v);

    switch (w.kind) {
        case WitnessKind::TooSmall: return g.n <= 3;
        case WitnessKind::LowDegree: return g.degree(w.u) <= 2;
        case WitnessKind::NotConnected: {
            auto label = component_labels(g);
            return label[w.u] != label[w.v];
        }
        case WitnessKind::CutVertex: {
            std::vector<char> removed(g.n, 0);
            removed[w.u] = 1;
            return count_components(g, removed) >= 2;
        }
        case WitnessKind::SeparationPair: {
            if (w.u == w.v) return false;
            std::vector<char> removed(g.n, 0);
            removed[w.u] = removed[w.v] = 1;
            return count_components(g, removed) >= 2;
        }
        case WitnessKind::NonSimple: {
            int copies = 0;
            for (auto [x, e] : g.adj[w.u])
                if (x == w.v) ++copies;
            return w.u == w.v ? copies >= 1 : copies >= 2;
        }
    }
    return false;
}

}  // namespace tricert
