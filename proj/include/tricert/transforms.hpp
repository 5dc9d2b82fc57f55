#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "certificate.hpp"
#include "graph.hpp"
#include "verifier.hpp"

namespace tricert {

enum class OpKind { AddEdge, SubdivideOne, SubdivideTwo };

inline const char* op_kind_name(OpKind k) {
    switch (k) {
        case OpKind::AddEdge: return "add";
        case OpKind::SubdivideOne: return "sub1";
        case OpKind::SubdivideTwo: return "sub2";
    }
    return "?";
}

struct LinkEnds {
    int a = -1, b = -1;  // both -1 when the vertex is real
    bool inner() const { return a >= 0; }
};

struct BgOperation {
    OpKind kind = OpKind::AddEdge;
    std::vector<int> path;
    LinkEnds x, y;  // roles of path.front() and path.back()
};

// ops[0] builds K4 from the S3 base; the rest are the operations from K4 upward
struct EdgeRepresentation {
    BgOperation base;
    std::vector<BgOperation> ops;
};

struct TransformError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline EdgeRepresentation to_edge_representation(const Graph& g, const Certificate& c) {
    std::vector<EndRoles> roles;
    VerifyResult vr = verify_certificate(g, c, roles);
    if (!vr.accepted)
        throw TransformError(std::string("certificate rejected: ") + reject_name(vr.reason) + " at step " +
                             std::to_string(vr.step));
    if (c.paths.empty()) throw TransformError("certificate has no K4 step");
    auto make = [&](size_t i) {
        BgOperation op;
        op.path = c.paths[i];
        op.x = {roles[i].link_a[0], roles[i].link_b[0]};
        op.y = {roles[i].link_a[1], roles[i].link_b[1]};
        int inner = op.x.inner() + op.y.inner();
        op.kind = inner == 0 ? OpKind::AddEdge : inner == 1 ? OpKind::SubdivideOne : OpKind::SubdivideTwo;
        return op;
    };
    EdgeRepresentation out;
    out.base = make(0);
    if (out.base.kind != OpKind::SubdivideTwo) throw TransformError("first path does not form K4");
    for (size_t i = 1; i < c.paths.size(); ++i) out.ops.push_back(make(i));
    return out;
}

struct RemovalStep {
    OpKind kind = OpKind::AddEdge;  // of the operation this step undoes
    std::vector<int> path;  // the removed abstract edge, as a path in G
    int nx = 0, ny = 0, nxy = 0;
    bool ok() const { return nx >= 3 && ny >= 3 && nxy >= 5; }
};

struct RemovalSequence {
    std::vector<RemovalStep> steps;  // from G down to K4
    bool all_ok = true;
};

// Replays the removals on the abstract multigraph, G first.
inline RemovalSequence to_removal_sequence(const Graph& g, const Certificate& c) {
    EdgeRepresentation er = to_edge_representation(g, c);
    // neighbor -> multiplicity
    std::vector<std::unordered_map<int, int>> nb(g.n);
    for (auto [u, v] : g.edges) {
        ++nb[u][v];
        ++nb[v][u];
    }
    auto drop = [&](int u, int v) {
        auto it = nb[u].find(v);
        if (--it->second == 0) nb[u].erase(it);
    };
    auto smooth = [&](int v) {
        if (nb[v].size() != 2) return;
        auto it = nb[v].begin();
        if (it->second != 1) return;
        int p = it->first;
        ++it;
        if (it->second != 1) return;
        int q = it->first;
        drop(p, v);
        drop(q, v);
        nb[v].clear();
        ++nb[p][q];
        ++nb[q][p];
    };
    RemovalSequence out;
    for (auto it = er.ops.rbegin(); it != er.ops.rend(); ++it) {
        const int x = it->path.front(), y = it->path.back();
        RemovalStep st;
        st.kind = it->kind;
        st.path = it->path;
        st.nx = static_cast<int>(nb[x].size());
        st.ny = static_cast<int>(nb[y].size());
        const auto& small = nb[x].size() <= nb[y].size() ? nb[x] : nb[y];
        const auto& large = nb[x].size() <= nb[y].size() ? nb[y] : nb[x];
        int common = 0;
        for (const auto& kv : small) common += large.count(kv.first) ? 1 : 0;
        st.nxy = st.nx + st.ny - common;
        out.all_ok = out.all_ok && st.ok();
        if (!nb[x].count(y)) throw TransformError("removed path is not an abstract edge");
        drop(x, y);
        drop(y, x);
        smooth(x);
        smooth(y);
        out.steps.push_back(std::move(st));
    }
    return out;
}

inline std::string format_edge_representation(const EdgeRepresentation& er) {
    std::string out;
    auto line = [&](const char* tag, size_t k, const BgOperation& op) {
        out += std::string(tag) + ' ' + std::to_string(k) + " kind=" + op_kind_name(op.kind) + " :";
        for (int v : op.path) out += ' ' + std::to_string(v + 1);
        out += '\n';
    };
    line("op", 0, er.base);
    for (size_t k = 0; k < er.ops.size(); ++k) line("op", k + 1, er.ops[k]);
    return out;
}

inline std::string format_removal_sequence(const RemovalSequence& rs) {
    std::string out;
    for (size_t k = 0; k < rs.steps.size(); ++k) {
        const auto& s = rs.steps[k];
        out += "rm " + std::to_string(k + 1) + " kind=" + op_kind_name(s.kind) + " nx=" + std::to_string(s.nx) + " ny=" + std::to_string(s.ny) +
               " nxy=" + std::to_string(s.nxy) + (s.ok() ? " ok" : " violated") + " :";
        for (int v : s.path) out += ' ' + std::to_string(v + 1);
        out += '\n';
    }
    return out;
}

}  // namespace tricert
