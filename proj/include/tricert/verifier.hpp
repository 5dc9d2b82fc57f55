#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "graph.hpp"

namespace tricert {

enum class RejectReason { None, Format, InputDegree, PathInG, Partition, NotAnEdge, Cond1, Cond2, Cond3, FinalShape };

inline const char* reject_name(RejectReason r) {
    switch (r) {
        case RejectReason::None: return "none";
        case RejectReason::Format: return "format";
        case RejectReason::InputDegree: return "input-degree";
        case RejectReason::PathInG: return "path-in-G";
        case RejectReason::Partition: return "partition";
        case RejectReason::NotAnEdge: return "not-an-edge";
        case RejectReason::Cond1: return "cond1";
        case RejectReason::Cond2: return "cond2";
        case RejectReason::Cond3: return "cond3";
        case RejectReason::FinalShape: return "final-shape";
    }
    return "?";
}

struct VerifyResult {
    bool accepted = false;
    int step = 0;  // 1-based path index, 0 for the s3 part or global checks
    RejectReason reason = RejectReason::None;
    std::uint64_t touches = 0;
};

// Roles of a path's end vertices at the time it is added; -1 links mean the end was real.
struct EndRoles {
    std::array<int, 2> link_a{-1, -1};
    std::array<int, 2> link_b{-1, -1};
};

namespace detail {

class ReverseRemoval {
public:
    ReverseRemoval(const Graph& g, const Certificate& c, std::vector<EndRoles>* roles = nullptr)
        : g_(g), c_(c), roles_(roles) {}

    VerifyResult run() {
        if (!format_ok()) return reject(0, RejectReason::Format);
        if (g_.n < 4) return reject(0, RejectReason::InputDegree);
        for (int v = 0; v < g_.n; ++v)
            if (g_.degree(v) < 3) return reject(0, RejectReason::InputDegree);
        if (auto r = map_edges(); r.reason != RejectReason::None) return r;

        deg_.resize(g_.n);
        for (int v = 0; v < g_.n; ++v) deg_[v] = g_.degree(v);
        touch(g_.n);
        pinned_.assign(g_.n, 0);
        present_.assign(g_.m, 1);
        link_of_.assign(g_.m, -1);
        links_.reserve(g_.m);
        for (int e = 0; e < g_.m; ++e) {
            link_of_[e] = static_cast<int>(links_.size());
            links_.push_back({g_.edges[e].first, g_.edges[e].second, e, e, 1});
        }
        real_count_ = g_.n;
        touch(g_.m);

        if (roles_) roles_->assign(c_.paths.size(), {});
        for (int i = static_cast<int>(c_.paths.size()) - 1; i >= 0; --i)
            if (auto r = remove(i); r.reason != RejectReason::None) return r;
        return final_shape();
    }

private:
    struct Link {
        int a, b;    // end vertices
        int ea, eb;  // end edges at a and b
        int len;
    };

    VerifyResult reject(int step, RejectReason why) const {
        VerifyResult r;
        r.step = step;
        r.reason = why;
        r.touches = touches_;
        return r;
    }
    void touch(std::uint64_t k = 1) { touches_ += k; }

    bool format_ok() const {
        if (c_.n != g_.n || c_.m != g_.m) return false;
        auto ok = [&](const std::vector<int>& p) {
            if (p.size() < 2) return false;
            for (int v : p)
                if (v < 0 || v >= g_.n) return false;
            return true;
        };
        for (const auto& p : c_.s3)
            if (!ok(p)) return false;
        for (const auto& p : c_.paths)
            if (!ok(p)) return false;
        return true;
    }

    // edge id for every consecutive pair of every path, or -1; queries grouped by first vertex
    std::vector<int> resolve_pairs() {
        std::vector<const std::vector<int>*> all;
        for (const auto& p : c_.s3) all.push_back(&p);
        for (const auto& p : c_.paths) all.push_back(&p);
        std::vector<int> off(g_.n + 1, 0);
        size_t q = 0;
        for (auto* p : all)
            for (size_t k = 1; k < p->size(); ++k, ++q) ++off[(*p)[k - 1] + 1];
        for (int v = 0; v < g_.n; ++v) off[v + 1] += off[v];
        std::vector<int> by_vertex(q), answer(q, -1);
        {
            std::vector<int> fill(off.begin(), off.end() - 1);
            q = 0;
            for (auto* p : all)
                for (size_t k = 1; k < p->size(); ++k, ++q) by_vertex[fill[(*p)[k - 1]]++] = static_cast<int>(q);
        }
        std::vector<int> target(q);
        q = 0;
        for (auto* p : all)
            for (size_t k = 1; k < p->size(); ++k, ++q) target[q] = (*p)[k];
        std::vector<int> mark(g_.n, -1), edge(g_.n, -1);
        for (int v = 0; v < g_.n; ++v) {
            if (off[v] == off[v + 1]) continue;
            for (auto [w, e] : g_.adj[v]) {
                touch();
                mark[w] = v;
                edge[w] = e;
            }
            for (int i = off[v]; i < off[v + 1]; ++i) {
                const int b = target[by_vertex[i]];
                answer[by_vertex[i]] = mark[b] == v ? edge[b] : -1;
            }
        }
        return answer;
    }

    // path edges as ids; checks path-in-G and the partition of E(G)
    VerifyResult map_edges() {
        const std::vector<int> pair_edge = resolve_pairs();
        size_t q = 0;
        std::vector<char> used(g_.m, 0);
        std::vector<int> seen(g_.n, -1);
        int stamp = 0;
        path_edges_.assign(c_.paths.size(), {});
        auto walk = [&](const std::vector<int>& p, int step, std::vector<int>* out) -> RejectReason {
            ++stamp;
            for (size_t k = 0; k < p.size(); ++k) {
                touch();
                if (seen[p[k]] == stamp) return RejectReason::PathInG;
                seen[p[k]] = stamp;
                if (k == 0) continue;
                const int e = pair_edge[q++];
                if (e < 0) return RejectReason::PathInG;
                if (used[e]) return RejectReason::Partition;
                used[e] = 1;
                if (out) out->push_back(e);
            }
            (void)step;
            return RejectReason::None;
        };
        for (const auto& p : c_.s3)
            if (auto r = walk(p, 0, nullptr); r != RejectReason::None) return reject(0, r);
        for (size_t i = 0; i < c_.paths.size(); ++i)
            if (auto r = walk(c_.paths[i], static_cast<int>(i) + 1, &path_edges_[i]); r != RejectReason::None)
                return reject(static_cast<int>(i) + 1, r);
        for (int e = 0; e < g_.m; ++e)
            if (!used[e]) return reject(0, RejectReason::Partition);
        return {};
    }

    bool endpoint(int v) const { return deg_[v] >= 3 || pinned_[v]; }

    // the two links at a degree-2 endpoint; far ends through them
    struct Around {
        int l1 = -1, l2 = -1;
        int f1 = -1, f2 = -1;
    };
    Around around(int v) {
        Around r;
        for (auto [w, e] : g_.adj[v]) {
            touch();
            if (!present_[e]) continue;
            int l = link_of_[e];
            const Link& L = links_[l];
            int far = (L.ea == e && L.a == v) ? L.b : L.a;
            if (r.l1 < 0) {
                r.l1 = l;
                r.f1 = far;
            } else {
                r.l2 = l;
                r.f2 = far;
            }
        }
        return r;
    }

    void set_real(int v, bool before, bool after) {
        if (before && !after) --real_count_;
        if (!before && after) ++real_count_;
        (void)v;
    }

    void smooth(int v, const Around& s) {
        if (s.l1 == s.l2 || s.f1 == s.f2) {
            pinned_[v] = 1;
            return;
        }
        Link& p = links_[s.l1];
        Link& q = links_[s.l2];
        // far end of p and its end edge
        int pa = p.a == v ? p.b : p.a;
        int pe = p.a == v ? p.eb : p.ea;
        int qa = q.a == v ? q.b : q.a;
        int qe = q.a == v ? q.eb : q.ea;
        Link merged{pa, qa, pe, qe, p.len + q.len};
        int id = s.l1;
        links_[id] = merged;
        link_of_[pe] = id;
        link_of_[qe] = id;
        touch(2);
    }

    VerifyResult remove(int i) {
        const int step = i + 1;
        const auto& p = c_.paths[i];
        const auto& pe = path_edges_[i];
        const int a = p.front(), b = p.back();
        for (size_t k = 1; k + 1 < p.size(); ++k) {
            touch();
            if (deg_[p[k]] != 2 || pinned_[p[k]]) return reject(step, RejectReason::NotAnEdge);
        }
        if (!endpoint(a) || !endpoint(b)) return reject(step, RejectReason::NotAnEdge);
        const int l = link_of_[pe.front()];
        const Link& L = links_[l];
        if (link_of_[pe.back()] != l || L.len != static_cast<int>(pe.size()) ||
            !((L.a == a && L.b == b) || (L.a == b && L.b == a)))
            return reject(step, RejectReason::NotAnEdge);

        for (int e : pe) present_[e] = 0;
        touch(pe.size());
        for (size_t k = 1; k + 1 < p.size(); ++k) deg_[p[k]] = 0;
        bool ra = deg_[a] >= 3, rb = deg_[b] >= 3;
        --deg_[a];
        --deg_[b];
        set_real(a, ra, deg_[a] >= 3);
        set_real(b, rb, deg_[b] >= 3);
        if (deg_[a] < 2 || deg_[b] < 2) return reject(step, RejectReason::Cond1);

        Around sa, sb;
        const bool two_a = deg_[a] == 2, two_b = deg_[b] == 2;
        if (two_a) sa = around(a);
        if (two_b) sb = around(b);
        if ((two_a && (sa.f1 == b || sa.f2 == b)) || (two_b && (sb.f1 == a || sb.f2 == a)))
            return reject(step, RejectReason::Cond2);
        if (two_a && two_b && real_count_ >= 4) {
            bool same = (sa.f1 == sb.f1 && sa.f2 == sb.f2) || (sa.f1 == sb.f2 && sa.f2 == sb.f1);
            if (same) return reject(step, RejectReason::Cond3);
        }
        if (roles_) {
            EndRoles& r = (*roles_)[i];
            if (two_a) r.link_a[0] = sa.f1, r.link_b[0] = sa.f2;
            if (two_b) r.link_a[1] = sb.f1, r.link_b[1] = sb.f2;
        }
        if (two_a) smooth(a, sa);
        if (two_b) smooth(b, sb);
        return {};
    }

    VerifyResult final_shape() {
        std::vector<int> reals;
        int remaining = 0;
        for (int e = 0; e < g_.m; ++e) remaining += present_[e];
        for (int v = 0; v < g_.n; ++v) {
            if (deg_[v] >= 3 || pinned_[v]) reals.push_back(v);
        }
        touch(g_.n + g_.m);
        if (reals.size() != 2) return reject(0, RejectReason::FinalShape);
        const int p = reals[0], q = reals[1];
        if (deg_[p] != 3 || deg_[q] != 3) return reject(0, RejectReason::FinalShape);
        std::vector<int> ls;
        int total = 0;
        for (auto [w, e] : g_.adj[p]) {
            touch();
            if (!present_[e]) continue;
            int l = link_of_[e];
            const Link& L = links_[l];
            if (!((L.a == p && L.b == q) || (L.a == q && L.b == p))) return reject(0, RejectReason::FinalShape);
            for (int x : ls)
                if (x == l) return reject(0, RejectReason::FinalShape);
            ls.push_back(l);
            total += L.len;
        }
        if (ls.size() != 3 || total != remaining) return reject(0, RejectReason::FinalShape);
        for (const auto& s : c_.s3) {
            int x = s.front(), y = s.back();
            if (!((x == p && y == q) || (x == q && y == p))) return reject(0, RejectReason::FinalShape);
        }
        VerifyResult r;
        r.accepted = true;
        r.touches = touches_;
        return r;
    }

    const Graph& g_;
    const Certificate& c_;
    std::vector<EndRoles>* roles_;
    std::vector<std::vector<int>> path_edges_;
    std::vector<int> deg_;
    std::vector<char> pinned_;
    std::vector<char> present_;
    std::vector<int> link_of_;
    std::vector<Link> links_;
    int real_count_ = 0;
    std::uint64_t touches_ = 0;
};

}  // namespace detail

inline VerifyResult verify_certificate(const Graph& g, const Certificate& c) {
    return detail::ReverseRemoval(g, c).run();
}

// Also reports, per path, which ends were inner link vertices when it was added.
inline VerifyResult verify_certificate(const Graph& g, const Certificate& c, std::vector<EndRoles>& roles) {
    return detail::ReverseRemoval(g, c, &roles).run();
}

}  // namespace tricert
