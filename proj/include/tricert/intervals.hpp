#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace tricert {

inline constexpr int kBaseOwner = -1;

struct Interval {
    int lo = 0;
    int hi = 0;
    int owner = kBaseOwner;

    bool operator==(const Interval&) const = default;
};

inline bool overlaps(const Interval& p, const Interval& q) {
    return (p.lo < q.lo && q.lo < p.hi && p.hi < q.hi) || (q.lo < p.lo && p.lo < q.hi && q.hi < p.hi);
}

// reals sorted ascending: [b1,bj] and [bj,bk] for 1<j<k
inline void append_base_intervals(const std::vector<int>& b, std::vector<Interval>& out) {
    const size_t k = b.size();
    for (size_t j = 1; j + 1 < k; ++j) out.push_back({b.front(), b[j], kBaseOwner});
    for (size_t j = 1; j + 1 < k; ++j) out.push_back({b[j], b.back(), kBaseOwner});
}

// attachments sorted ascending and distinct: [a1,aj] for 1<j<=k, [aj,ak] for 1<j<k
inline void append_segment_intervals(const std::vector<int>& a, int owner, std::vector<Interval>& out) {
    const size_t k = a.size();
    for (size_t j = 1; j < k; ++j) out.push_back({a.front(), a[j], owner});
    for (size_t j = 1; j + 1 < k; ++j) out.push_back({a[j], a.back(), owner});
}

struct OverlapForest {
    std::vector<int> component;                // per interval
    std::vector<std::pair<int, int>> edges;    // overlapping interval pairs spanning each component
};

// Sweep with a stack of blocks. Left ends are ordered by (lo asc, hi desc), so a block above
// the block of an ending interval J only holds intervals starting strictly inside J.
inline OverlapForest overlap_forest(const std::vector<Interval>& iv) {
    const int k = static_cast<int>(iv.size());
    OverlapForest res;
    res.component.assign(k, -1);
    if (k == 0) return res;

    int span = 0;
    for (const auto& x : iv) span = std::max(span, x.hi + 1);

    // rank = position in (lo asc, hi desc) order, via two counting passes
    std::vector<int> rank_order(k), tmp(k), cnt(span + 1, 0);
    for (const auto& x : iv) ++cnt[span - x.hi];
    for (int i = 1; i <= span; ++i) cnt[i] += cnt[i - 1];
    for (int i = k - 1; i >= 0; --i) tmp[--cnt[span - iv[i].hi]] = i;
    std::fill(cnt.begin(), cnt.end(), 0);
    for (const auto& x : iv) ++cnt[x.lo];
    for (int i = 1; i <= span; ++i) cnt[i] += cnt[i - 1];
    for (int i = k - 1; i >= 0; --i) rank_order[--cnt[iv[tmp[i]].lo]] = tmp[i];
    std::vector<int> rank(k);
    for (int r = 0; r < k; ++r) rank[rank_order[r]] = r;

    // right ends per position, larger rank first; starts are runs of rank_order
    std::vector<int> end_off(span + 1, 0), end_list(k);
    for (const auto& x : iv) ++end_off[x.hi + 1];
    for (int i = 1; i <= span; ++i) end_off[i] += end_off[i - 1];
    {
        std::vector<int> fill(end_off.begin(), end_off.end() - 1);
        for (int r = k - 1; r >= 0; --r) end_list[fill[iv[rank_order[r]].hi]++] = rank_order[r];
    }

    std::vector<int> dsu(k);
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int a) {
        while (dsu[a] != a) a = dsu[a] = dsu[dsu[a]];
        return a;
    };
    struct Block {
        int rep;
        int open;
        int far;  // interval with the largest hi
    };
    std::vector<Block> stack;
    std::vector<int> block_pos(k, -1);  // by dsu representative

    int next_start = 0;
    for (int p = 0; p < span; ++p) {
        for (int q = end_off[p]; q < end_off[p + 1]; ++q) {
            const int j = end_list[q];
            int bj = block_pos[find(j)];
            Block& base = stack[bj];
            while (static_cast<int>(stack.size()) > bj + 1) {
                Block top = stack.back();
                stack.pop_back();
                res.edges.emplace_back(j, top.far);
                dsu[find(top.rep)] = find(base.rep);
                base.open += top.open;
                if (iv[top.far].hi > iv[base.far].hi) base.far = top.far;
            }
            block_pos[find(base.rep)] = bj;
            if (--base.open == 0) stack.pop_back();
        }
        for (; next_start < k && iv[rank_order[next_start]].lo == p; ++next_start) {
            const int j = rank_order[next_start];
            block_pos[j] = static_cast<int>(stack.size());
            stack.push_back({j, 1, j});
        }
    }
    for (int i = 0; i < k; ++i) res.component[i] = find(i);
    return res;
}

struct OverlapOrder {
    std::vector<int> reachable;    // owners in discovery order
    std::vector<int> unreachable;  // ascending
};

// owners are 0..owners-1 plus kBaseOwner
inline OverlapOrder overlap_order(const std::vector<Interval>& iv, int owners) {
    OverlapForest f = overlap_forest(iv);
    auto slot = [&](int owner) { return owner == kBaseOwner ? owners : owner; };
    std::vector<int> off(owners + 2, 0), nb;
    for (auto [a, b] : f.edges) {
        int oa = slot(iv[a].owner), ob = slot(iv[b].owner);
        if (oa == ob) continue;
        ++off[oa + 1];
        ++off[ob + 1];
    }
    for (int i = 1; i <= owners + 1; ++i) off[i] += off[i - 1];
    nb.resize(off[owners + 1]);
    {
        std::vector<int> fill(off.begin(), off.end() - 1);
        for (auto [a, b] : f.edges) {
            int oa = slot(iv[a].owner), ob = slot(iv[b].owner);
            if (oa == ob) continue;
            nb[fill[oa]++] = ob;
            nb[fill[ob]++] = oa;
        }
    }
    OverlapOrder res;
    std::vector<char> seen(owners + 1, 0);
    std::vector<int> queue{owners};
    seen[owners] = 1;
    for (size_t h = 0; h < queue.size(); ++h) {
        const int u = queue[h];
        std::sort(nb.begin() + off[u], nb.begin() + off[u + 1]);
        for (int q = off[u]; q < off[u + 1]; ++q) {
            const int o = nb[q];
            if (seen[o]) continue;
            seen[o] = 1;
            queue.push_back(o);
            res.reachable.push_back(o);
        }
    }
    for (int o = 0; o < owners; ++o)
        if (!seen[o]) res.unreachable.push_back(o);
    return res;
}

}  // namespace tricert
