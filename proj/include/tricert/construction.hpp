#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "certificate.hpp"
#include "chains.hpp"
#include "counters.hpp"
#include "dfs.hpp"
#include "graph.hpp"
#include "intervals.hpp"
#include "verifier.hpp"

namespace tricert {

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct PathOrigin {
    enum Kind { Single, CaterpillarPart } kind = Single;
    int id = -1;    // chain id, or caterpillar id
    int part = 0;   // index within the caterpillar decomposition

    bool operator==(const PathOrigin&) const = default;
};

// Hooks for tests. on_checkpoint fires whenever the subdivision is upwards-closed and modular.
struct ConstructionObserver {
    virtual ~ConstructionObserver() = default;
    virtual void on_path(const std::vector<int>& /*path*/, const PathOrigin& /*origin*/) {}
    virtual void on_checkpoint() {}
};

namespace detail {

struct Fenwick {
    std::vector<int> t;

    void reset(int n) { t.assign(n + 1, 0); }
    void build(const std::vector<char>& flags) {
        reset(static_cast<int>(flags.size()));
        for (size_t i = 0; i < flags.size(); ++i) t[i + 1] = flags[i];
        for (size_t i = 1; i < t.size(); ++i) {
            size_t j = i + (i & (~i + 1));
            if (j < t.size()) t[j] += t[i];
        }
    }
    void add(int i) {
        for (++i; i < static_cast<int>(t.size()); i += i & -i) ++t[i];
    }
    int prefix(int i) const {  // count over [0, i)
        int s = 0;
        for (; i > 0; i -= i & -i) s += t[i];
        return s;
    }
    int count(int lo, int hi) const {  // over [lo, hi)
        return hi <= lo ? 0 : prefix(hi) - prefix(lo);
    }
};

// Segments waiting for a real vertex p with lo < p < hi, keyed by lo.
class TriggerTree {
public:
    void reset(int n) {
        size_ = 1;
        while (size_ < n) size_ <<= 1;
        best_.assign(2 * size_, -1);
        bucket_.assign(size_, {});
    }
    void insert(int seg, int lo, int hi) {
        bucket_[lo].emplace(hi, seg);
        refresh(lo);
    }
    // some segment with lo < p < hi, or -1
    int extract(int p) {
        if (p <= 0) return -1;
        int leaf = find(1, 0, size_ - 1, p - 1, p);
        if (leaf < 0) return -1;
        int seg = bucket_[leaf].top().second;
        bucket_[leaf].pop();
        refresh(leaf);
        return seg;
    }

private:
    void refresh(int lo) {
        int i = lo + size_;
        best_[i] = bucket_[lo].empty() ? -1 : bucket_[lo].top().first;
        for (i >>= 1; i >= 1; i >>= 1) best_[i] = std::max(best_[2 * i], best_[2 * i + 1]);
    }
    int find(int node, int l, int r, int qr, int p) const {
        if (l > qr || best_[node] <= p) return -1;
        if (l == r) return l;
        int mid = (l + r) / 2;
        int res = find(2 * node, l, mid, qr, p);
        return res >= 0 ? res : find(2 * node + 1, mid + 1, r, qr, p);
    }

    int size_ = 1;
    std::vector<int> best_;
    std::vector<std::priority_queue<std::pair<int, int>>> bucket_;
};

// Articulation points of g minus `gone`, iterative lowpoints. Returns one, or -1.
inline int articulation_point(const Graph& g, int gone, std::vector<int>& disc, std::vector<int>& low,
                              std::vector<int>& it) {
    std::fill(disc.begin(), disc.end(), -1);
    std::fill(it.begin(), it.end(), 0);
    int root = gone == 0 ? 1 : 0;
    if (root >= g.n) return -1;
    std::vector<std::pair<int, int>> stack;  // vertex, parent edge
    int timer = 0, root_children = 0;
    disc[root] = low[root] = timer++;
    stack.emplace_back(root, -1);
    while (!stack.empty()) {
        auto [v, pe] = stack.back();
        if (it[v] < g.degree(v)) {
            auto [w, e] = g.adj[v][it[v]++];
            if (w == gone || e == pe) continue;
            if (disc[w] < 0) {
                disc[w] = low[w] = timer++;
                stack.emplace_back(w, e);
                if (v == root) ++root_children;
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
            continue;
        }
        stack.pop_back();
        if (stack.empty()) break;
        int p = stack.back().first;
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) return p;
    }
    if (root_children >= 2) return root;
    for (int v = 0; v < g.n; ++v)
        if (v != gone && disc[v] < 0) return root;  // g - gone disconnected
    return -1;
}

}  // namespace detail

// O(n(n+m)) search for a cut vertex or separation pair, used only when the linear path fails.
inline std::optional<Witness> find_separation_slow(const Graph& g) {
    if (g.n <= 3) return Witness{WitnessKind::TooSmall};
    std::vector<int> disc(g.n), low(g.n), it(g.n);
    int a = detail::articulation_point(g, -1, disc, low, it);
    if (a >= 0) {
        Witness w{WitnessKind::CutVertex, a};
        if (verify_witness(g, w)) return w;
    }
    for (int v = 0; v < g.n; ++v) {
        int b = detail::articulation_point(g, v, disc, low, it);
        if (b < 0) continue;
        Witness w{WitnessKind::SeparationPair, std::min(v, b), std::max(v, b)};
        if (verify_witness(g, w)) return w;
    }
    return std::nullopt;
}

class Engine {
public:
    Engine(const Graph& g, const ChainDecomposition& d, Counters* cnt = nullptr,
           ConstructionObserver* obs = nullptr)
        : g_(g), d_(d), f_(d.forest), cnt_(cnt), obs_(obs) {}

    // nullopt when every chain was added
    std::optional<Witness> run() {
        init();
        const int z = static_cast<int>(d_.chains.size());
        for (int i = 0; i < z; ++i) {
            if (!added_[i]) throw InternalError("chain " + std::to_string(i) + " unadded when processed");
            if (auto w = process(i)) return w;
        }
        return std::nullopt;
    }

    const std::vector<std::vector<int>>& paths() const { return paths_; }
    const std::vector<PathOrigin>& origins() const { return origins_; }

    bool in_subdivision(int v) const { return in_sub_[v] != 0; }
    bool is_real(int v) const { return in_sub_[v] && sdeg_[v] >= 3; }
    int subdivision_degree(int v) const { return sdeg_[v]; }
    bool chain_added(int c) const { return added_[c] != 0; }

    // state after S3 without processing, for tests
    void init() {
        const int n = g_.n, z = static_cast<int>(d_.chains.size());
        in_sub_.assign(n, 0);
        sdeg_.assign(n, 0);
        seg_marker_.assign(n, -1);
        consumed_.assign(n, 0);
        pos_.assign(n, 0);
        stamp_.assign(n, -1);
        added_.assign(z, 0);
        min_real_inner_.assign(z, INT32_MAX);
        type3_at_.assign(n, {});
        deferred_.assign(z, {});
        child_stamp_.assign(z, -1);
        child_seg_.assign(z, -1);
        paths_.clear();
        origins_.clear();
        for (int c = 1; c < z; ++c) {
            ChainType t = d_.chains[c].type;
            if (t == ChainType::T3a || t == ChainType::T3b) type3_at_[d_.chains[c].s()].push_back(c);
        }
        for (int c = 0; c < 3; ++c) {
            const auto& vs = d_.chains[c].verts;
            for (size_t k = 0; k < vs.size(); ++k) {
                in_sub_[vs[k]] = 1;
                sdeg_[vs[k]] += (k == 0 || k + 1 == vs.size()) ? 1 : 2;
            }
            added_[c] = 1;
        }
        if (obs_) obs_->on_checkpoint();
    }

    int find_segment_min(int c) {
        int t = d_.chains[c].t();
        if (in_sub_[t]) return c;
        walk_.clear();
        int v = t, res = -1;
        while (true) {
            step(cnt_ ? &cnt_->segmin_steps : nullptr);
            int mk = seg_marker_[v];
            if (mk >= 0 && !added_[mk]) {
                res = mk;
                break;
            }
            walk_.push_back(v);
            if (in_sub_[f_.parent[v]]) {
                res = d_.edge_chain[f_.parent_edge[v]];
                break;
            }
            v = f_.parent[v];
        }
        for (int u : walk_) seg_marker_[u] = res;
        return res;
    }

    bool is_good_caterpillar(int cat) const {
        const Caterpillar& L = d_.caterpillars[cat];
        const int ck = L.parent;
        const int sj = d_.chains[L.members.front()].s();
        if (f_.dfi[sj] < f_.dfi[d_.chains[ck].t()]) return true;
        if (!on_chain(ck, sj)) return false;
        return min_real_inner_[ck] < d_.position(ck, sj);
    }

private:
    struct Segment {
        int d = -1;
        std::vector<int> members;
        int lo = 0, hi = 0;    // dependent path
        int tlo = 0, thi = 0;  // waiting for a real position strictly inside
        bool done = false;
    };

    static void step(uint64_t* c, uint64_t k = 1) {
        if (c) *c += k;
    }

    bool on_chain(int c, int v) const {
        const Chain& ch = d_.chains[c];
        return v == ch.s() || v == ch.t() || d_.inner_chain_of[v] == c;
    }

    void became_real(int v) {
        int c = d_.inner_chain_of[v];
        if (c >= 0) min_real_inner_[c] = std::min(min_real_inner_[c], d_.position(c, v));
        if (stamp_[v] == cur_) {
            fen_.add(pos_[v]);
            pending_real_.push_back(pos_[v]);
        }
    }

    void add_path(std::vector<int> p, PathOrigin origin) {
        const int k = static_cast<int>(p.size());
        if (k < 2 || p.front() == p.back() || !in_sub_[p.front()] || !in_sub_[p.back()])
            throw InternalError("path endpoints not in the subdivision");
        for (int j = 1; j + 1 < k; ++j)
            if (in_sub_[p[j]]) throw InternalError("path meets the subdivision at an inner vertex");
        step(cnt_ ? &cnt_->process_steps : nullptr, k);
        for (int j = 1; j + 1 < k; ++j) {
            in_sub_[p[j]] = 1;
            sdeg_[p[j]] = 2;
        }
        for (int v : {p.front(), p.back()})
            if (++sdeg_[v] == 3) became_real(v);
        if (obs_) obs_->on_path(p, origin);
        paths_.push_back(std::move(p));
        origins_.push_back(origin);
    }

    void add_single(int c) {
        add_path(d_.chains[c].verts, {PathOrigin::Single, c, 0});
        added_[c] = 1;
        if (obs_) obs_->on_checkpoint();
    }

    std::vector<int> tree_path(int from, int to) const {
        std::vector<int> p{from};
        while (from != to) {
            from = f_.parent[from];
            if (from < 0) throw InternalError("tree path does not reach its target");
            p.push_back(from);
        }
        return p;
    }

    std::vector<int> prefix_to(int c, int v) const {
        const auto& vs = d_.chains[c].verts;
        int k = d_.position(c, v);
        if (k < 1 || k >= static_cast<int>(vs.size()) || vs[k] != v)
            throw InternalError("vertex not on chain");
        return {vs.begin(), vs.begin() + k + 1};
    }

    void add_caterpillar(int cat) {
        const Caterpillar& L = d_.caterpillars[cat];
        const auto& mem = L.members;
        if (mem.size() < 2) throw InternalError("caterpillar with fewer than two chains");
        if (!added_[L.parent]) throw InternalError("caterpillar parent not added");
        for (int c : mem)
            if (added_[c]) throw InternalError("caterpillar member already added");
        if (!is_good_caterpillar(cat)) throw InternalError("bad caterpillar");
        if (d_.chains[mem.front()].s() == d_.chains[mem.back()].t())
            throw InternalError("caterpillar closes a cycle at its start");

        const Chain& cj = d_.chains[mem[0]];
        const int y = d_.chains[mem.back()].t();
        const bool case1 = f_.dfi[cj.s()] < f_.dfi[d_.chains[L.parent].t()];
        int part = 0;
        auto emit = [&](std::vector<int> p) { add_path(std::move(p), {PathOrigin::CaterpillarPart, cat, part++}); };

        std::vector<int> up = tree_path(cj.t(), y);
        size_t rest = 1;
        if (case1) {
            std::vector<int> p = cj.verts;
            p.insert(p.end(), up.begin() + 1, up.end());
            emit(std::move(p));
        } else {
            std::vector<int> p = cj.verts;
            std::vector<int> pre = prefix_to(mem[1], cj.t());
            p.insert(p.end(), pre.rbegin() + 1, pre.rend());
            emit(std::move(p));
            emit(std::move(up));
            rest = 2;
        }
        for (size_t k = rest; k < mem.size(); ++k) emit(prefix_to(mem[k], d_.chains[mem[k - 1]].t()));
        for (int c : mem) added_[c] = 1;
        if (obs_) obs_->on_checkpoint();
    }

    bool closes_cycle(int cat) const {
        const auto& mem = d_.caterpillars[cat].members;
        return d_.chains[mem.front()].s() == d_.chains[mem.back()].t();
    }

    // Adds c after its unadded ancestors, or adds nothing and returns false when some caterpillar
    // on the way cannot be decomposed yet.
    bool add_with_ancestors(int c) {
        anc_.clear();
        for (int q = c; !added_[q]; q = d_.chains[q].parent) {
            step(cnt_ ? &cnt_->process_steps : nullptr);
            anc_.push_back(q);
        }
        std::vector<int> todo(anc_.rbegin(), anc_.rend());
        for (size_t k = 0; k < todo.size(); ++k) {
            const Chain& ch = d_.chains[todo[k]];
            if (ch.type != ChainType::T2b && ch.type != ChainType::T3b) continue;
            if (ch.caterpillar < 0) return false;
            const Caterpillar& L = d_.caterpillars[ch.caterpillar];
            if (L.members.back() != todo[k] || closes_cycle(ch.caterpillar)) return false;
            if (added_[L.parent]) {
                if (!is_good_caterpillar(ch.caterpillar)) return false;
            } else if (f_.dfi[d_.chains[L.members.front()].s()] >= f_.dfi[d_.chains[L.parent].t()]) {
                return false;  // a fresh parent has no inner real vertex
            }
            k += L.members.size() - 1;
        }
        for (int q : todo) {
            if (added_[q]) continue;
            const Chain& ch = d_.chains[q];
            if (ch.type == ChainType::T2b || ch.type == ChainType::T3b) add_caterpillar(ch.caterpillar);
            else add_single(q);
        }
        return true;
    }

    // A type-3 chain that cannot be added yet waits for the parent of its segment's minimal chain.
    void add_or_defer(int c) {
        if (add_with_ancestors(c)) return;
        const Chain& top = d_.chains[anc_.back()];
        if (top.type == ChainType::T3a || top.type == ChainType::T3b || top.parent <= cur_)
            throw InternalError("type-3 chain cannot be added");
        deferred_[top.parent].push_back(c);
    }

    bool triggered(const Segment& s) const { return fen_.count(s.tlo + 1, s.thi) > 0; }

    void add_segment(Segment& s) {
        s.done = true;
        if (!add_with_ancestors(s.d)) throw InternalError("triggered segment cannot be added");
        for (int c : s.members)
            if (!added_[c]) add_or_defer(c);
    }

    std::optional<Witness> process(int i) {
        const Chain& ci = d_.chains[i];
        const int len = ci.length();
        cur_ = i;
        std::vector<char> real_flags(len + 1, 0);
        for (int p = 0; p <= len; ++p) {
            int v = ci.verts[p];
            pos_[v] = p;
            stamp_[v] = i;
            real_flags[p] = is_real(v);
        }
        fen_.build(real_flags);
        pending_real_.clear();
        step(cnt_ ? &cnt_->process_steps : nullptr, len + 1);

        std::vector<int> children;
        for (int c : d_.children[i]) {
            ChainType t = d_.chains[c].type;
            if (added_[c] || t == ChainType::T3a || t == ChainType::T3b) continue;
            children.push_back(c);
            child_stamp_[c] = i;
        }
        std::vector<int> types;
        for (int v : ci.verts) {
            if (consumed_[v]) continue;
            consumed_[v] = 1;
            for (int c : type3_at_[v])
                if (!added_[c]) types.push_back(c);
        }
        for (int c : deferred_[i])
            if (!added_[c]) types.push_back(c);
        std::sort(types.begin(), types.end());
        types.erase(std::unique(types.begin(), types.end()), types.end());
        step(cnt_ ? &cnt_->process_steps : nullptr, children.size() + types.size());

        std::vector<Segment> segs;
        for (int c : children) {
            child_seg_[c] = static_cast<int>(segs.size());
            segs.emplace_back().d = c;
        }
        for (int c : types) {
            if (added_[c]) continue;
            int dmin = find_segment_min(c);
            if (child_stamp_[dmin] == i && !added_[dmin]) segs[child_seg_[dmin]].members.push_back(c);
            else add_or_defer(c);
        }

        for (auto& s : segs) {
            const Chain& dc = d_.chains[s.d];
            if (added_[s.d]) {
                s.done = true;
                continue;
            }
            if (dc.type == ChainType::T2a && is_real(dc.t())) add_segment(s);
        }

        std::vector<int> hard;
        std::vector<Interval> iv;
        std::vector<int> attach;
        for (int k = 0; k < static_cast<int>(segs.size()); ++k) {
            Segment& s = segs[k];
            if (s.done) continue;
            const Chain& dc = d_.chains[s.d];
            attach.clear();
            attach.push_back(pos_on_current(dc.s()));
            attach.push_back(pos_on_current(dc.t()));
            for (int c : s.members) attach.push_back(pos_on_current(d_.chains[c].s()));
            std::sort(attach.begin(), attach.end());
            attach.erase(std::unique(attach.begin(), attach.end()), attach.end());
            s.lo = attach.front();
            s.hi = attach.back();
            if (dc.type == ChainType::T2a) {
                s.tlo = 0;
                s.thi = attach.back() + 1;
            } else if (dc.type == ChainType::T2b && dc.caterpillar < 0) {
                s.tlo = s.thi = 0;
            } else if (dc.type == ChainType::T2b) {
                // the caterpillar becomes good exactly when (s(Ci), s(Cj)) gets a real vertex
                const Caterpillar& L = d_.caterpillars[dc.caterpillar];
                const int sj = d_.chains[L.members.front()].s();
                s.tlo = 0;
                if (f_.dfi[sj] < f_.dfi[ci.t()]) s.thi = s.hi;
                else s.thi = stamp_[sj] == i ? pos_[sj] : 0;
                if (closes_cycle(dc.caterpillar)) s.thi = 0;
            } else {
                s.tlo = s.lo;
                s.thi = s.hi;
            }
            hard.push_back(k);
            append_segment_intervals(attach, k, iv);
        }
        if (hard.empty()) return std::nullopt;

        std::vector<int> reals;
        for (int p = 0; p <= len; ++p)
            if (is_real(ci.verts[p])) reals.push_back(p);
        append_base_intervals(reals, iv);
        step(cnt_ ? &cnt_->process_steps : nullptr, iv.size());
        OverlapOrder order = overlap_order(iv, static_cast<int>(segs.size()));

        trig_.reset(len + 2);
        std::vector<int> ready;
        auto park = [&](int k) {
            if (triggered(segs[k])) ready.push_back(k);
            else trig_.insert(k, segs[k].tlo, segs[k].thi);
        };
        for (int k : order.unreachable)
            if (!segs[k].done) park(k);

        size_t qi = 0;
        while (true) {
            while (!pending_real_.empty()) {
                int p = pending_real_.back();
                pending_real_.pop_back();
                for (int k; (k = trig_.extract(p)) >= 0;) ready.push_back(k);
            }
            int k = -1;
            bool by_overlap = false;
            if (qi < order.reachable.size()) {
                k = order.reachable[qi++];
                by_overlap = true;
            } else if (!ready.empty()) {
                k = ready.back();
                ready.pop_back();
            } else {
                break;
            }
            if (segs[k].done) continue;
            if (!triggered(segs[k])) {
                if (!by_overlap) throw InternalError("woken segment without trigger");
                park(k);
                continue;
            }
            if (cnt_) ++(by_overlap ? cnt_->segments_by_overlap : cnt_->segments_by_real_trigger);
            add_segment(segs[k]);
        }

        std::vector<int> stuck;
        for (int k : hard)
            if (!segs[k].done) stuck.push_back(k);
        if (stuck.empty()) return std::nullopt;
        return extract_pair(ci, segs, stuck);
    }

    int pos_on_current(int v) const {
        if (stamp_[v] != cur_) throw InternalError("attachment point off the processed chain");
        return pos_[v];
    }

    Witness extract_pair(const Chain& ci, const std::vector<Segment>& segs, const std::vector<int>& stuck) {
        std::vector<Interval> iv;
        std::vector<int> attach;
        for (int k : stuck) {
            const Segment& s = segs[k];
            attach.clear();
            attach.push_back(pos_on_current(d_.chains[s.d].s()));
            attach.push_back(pos_on_current(d_.chains[s.d].t()));
            for (int c : s.members) attach.push_back(pos_on_current(d_.chains[c].s()));
            std::sort(attach.begin(), attach.end());
            attach.erase(std::unique(attach.begin(), attach.end()), attach.end());
            append_segment_intervals(attach, k, iv);
        }
        OverlapForest f = overlap_forest(iv);
        struct Comp {
            int min_d = INT32_MAX, lo = INT32_MAX, hi = -1;
        };
        std::vector<Comp> comp(iv.size());
        for (size_t j = 0; j < iv.size(); ++j) {
            Comp& c = comp[f.component[j]];
            c.min_d = std::min(c.min_d, segs[iv[j].owner].d);
            c.lo = std::min(c.lo, iv[j].lo);
            c.hi = std::max(c.hi, iv[j].hi);
        }
        std::vector<Comp> cand;
        for (const Comp& c : comp)
            if (c.hi >= 0) cand.push_back(c);
        std::sort(cand.begin(), cand.end(), [](const Comp& a, const Comp& b) { return a.min_d < b.min_d; });
        for (const Comp& c : cand) {
            int u = ci.verts[c.lo], v = ci.verts[c.hi];
            Witness w{WitnessKind::SeparationPair, std::min(u, v), std::max(u, v)};
            if (u != v && verify_witness(g_, w)) return w;
        }
        if (auto w = find_separation_slow(g_)) {
            if (cnt_) ++cnt_->fallback_witnesses;
            return *w;
        }
        throw InternalError("stuck segments but no separation pair found");
    }

    const Graph& g_;
    const ChainDecomposition& d_;
    const DfsForest& f_;
    Counters* cnt_;
    ConstructionObserver* obs_;

    std::vector<char> in_sub_;
    std::vector<int> sdeg_;
    std::vector<int> seg_marker_;
    std::vector<char> consumed_;
    std::vector<char> added_;
    std::vector<int> min_real_inner_;
    std::vector<std::vector<int>> type3_at_;
    std::vector<std::vector<int>> deferred_;
    std::vector<int> pos_, stamp_;
    std::vector<int> child_stamp_, child_seg_;
    int cur_ = -1;
    detail::Fenwick fen_;
    detail::TriggerTree trig_;
    std::vector<int> pending_real_;
    std::vector<int> walk_, anc_;
    std::vector<std::vector<int>> paths_;
    std::vector<PathOrigin> origins_;
};

struct CertifyOptions {
    int root = 0;
    ConstructionObserver* observer = nullptr;
};

struct CertifyResult {
    std::optional<Certificate> certificate;
    std::optional<Witness> witness;
    std::vector<PathOrigin> origins;
    Counters counters;

    bool positive() const { return certificate.has_value(); }
};

inline CertifyResult certify(const Graph& g, const CertifyOptions& opt = {}) {
    CertifyResult res;
    Counters& cnt = res.counters;
    auto negative = [&](Witness w) {
        if (!verify_witness(g, w)) throw InternalError("witness failed self-verification");
        res.witness = w;
        return res;
    };
    if (auto w = find_non_simple(g)) return negative(*w);
    if (auto w = precheck(g)) return negative(*w);
    if (opt.root < 0 || opt.root >= g.n) throw std::out_of_range("root out of range");

    auto dr = run_dfs(g, opt.root, &cnt);
    if (auto* w = std::get_if<Witness>(&dr)) return negative(*w);
    auto dec = decompose(g, std::move(std::get<DfsForest>(dr)), &cnt);
    if (auto* w = std::get_if<Witness>(&dec)) return negative(*w);
    ChainDecomposition& d = std::get<ChainDecomposition>(dec);
    classify(d, &cnt);

    auto slow = [&](const char* why) {
        auto w = find_separation_slow(g);
        if (!w) throw InternalError(why);
        ++cnt.fallback_witnesses;
        return negative(*w);
    };

    Engine eng(g, d, &cnt, opt.observer);
    std::optional<Witness> fail;
    try {
        fail = eng.run();
    } catch (const InternalError& e) {
        return slow(e.what());
    }
    if (fail) return negative(*fail);

    Certificate cert;
    cert.n = g.n;
    cert.m = g.m;
    for (int k = 0; k < 3; ++k) cert.s3[k] = d.chains[k].verts;
    cert.paths = eng.paths();
    VerifyResult vr = verify_certificate(g, cert);
    cnt.verifier_touches += vr.touches;
    if (!vr.accepted) return slow("engine certificate rejected by the verifier");
    res.certificate = std::move(cert);
    res.origins = eng.origins();
    return res;
}

}  // namespace tricert
