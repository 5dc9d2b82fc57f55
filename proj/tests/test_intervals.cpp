#include <gtest/gtest.h>

#include <queue>

#include "support.hpp"

using namespace tricert;
using namespace tricert::testing;

namespace {

// quadratic reference: overlap graph BFS from BASE over owners, ascending neighbours
OverlapOrder brute_order(const std::vector<Interval>& iv, int owners) {
    std::vector<std::set<int>> adj(owners + 1);
    auto slot = [&](int o) { return o == kBaseOwner ? owners : o; };
    for (size_t i = 0; i < iv.size(); ++i)
        for (size_t j = 0; j < iv.size(); ++j)
            if (overlaps(iv[i], iv[j]) && slot(iv[i].owner) != slot(iv[j].owner))
                adj[slot(iv[i].owner)].insert(slot(iv[j].owner));
    OverlapOrder out;
    std::vector<char> seen(owners + 1, 0);
    std::queue<int> q;
    q.push(owners);
    seen[owners] = 1;
    while (!q.empty()) {
        int o = q.front();
        q.pop();
        for (int w : adj[o])
            if (!seen[w]) {
                seen[w] = 1;
                out.reachable.push_back(w);
                q.push(w);
            }
    }
    for (int o = 0; o < owners; ++o)
        if (!seen[o]) out.unreachable.push_back(o);
    return out;
}

std::vector<int> brute_components(const std::vector<Interval>& iv) {
    std::vector<int> comp(iv.size());
    std::iota(comp.begin(), comp.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < iv.size(); ++i)
            for (size_t j = 0; j < iv.size(); ++j)
                if (overlaps(iv[i], iv[j]) && comp[i] != comp[j]) {
                    int a = std::min(comp[i], comp[j]);
                    comp[i] = comp[j] = a;
                    changed = true;
                }
    }
    return comp;
}

}  // namespace

TEST(Intervals, OverlapIsStrictCrossing) {
    EXPECT_TRUE(overlaps({1, 3}, {2, 5}));
    EXPECT_FALSE(overlaps({1, 5}, {2, 3}));  // nested
    EXPECT_FALSE(overlaps({1, 3}, {3, 5}));  // touching
    EXPECT_FALSE(overlaps({1, 3}, {1, 5}));  // shared end
}

TEST(Intervals, SpecExampleOrder) {
    auto o = overlap_order({{1, 3, kBaseOwner}, {2, 5, 0}, {4, 6, 1}}, 2);
    EXPECT_EQ(o.reachable, (std::vector<int>{0, 1}));
    EXPECT_TRUE(o.unreachable.empty());
}

TEST(Intervals, NestedSegmentUnreachable) {
    std::vector<Interval> iv;
    append_base_intervals({0, 2, 6}, iv);
    append_segment_intervals({3, 5}, 0, iv);
    auto o = overlap_order(iv, 1);
    EXPECT_TRUE(o.reachable.empty());
    EXPECT_EQ(o.unreachable, (std::vector<int>{0}));
}

TEST(Intervals, BaseAndSegmentShapes) {
    std::vector<Interval> iv;
    append_base_intervals({0, 2, 4, 7}, iv);
    EXPECT_EQ(iv, (std::vector<Interval>{{0, 2}, {0, 4}, {2, 7}, {4, 7}}));
    iv.clear();
    append_segment_intervals({1, 3, 5}, 4, iv);
    EXPECT_EQ(iv, (std::vector<Interval>{{1, 3, 4}, {1, 5, 4}, {3, 5, 4}}));
}

TEST(Intervals, ComponentsMatchBruteForce) {
    Rng rng(17);
    for (int round = 0; round < 500; ++round) {
        int k = 1 + static_cast<int>(rng.below(14));
        int span = 2 + static_cast<int>(rng.below(12));
        std::vector<Interval> iv;
        for (int i = 0; i < k; ++i) {
            int a = static_cast<int>(rng.below(span)), b = static_cast<int>(rng.below(span));
            if (a == b) continue;
            iv.push_back({std::min(a, b), std::max(a, b), static_cast<int>(rng.below(4)) - 1});
        }
        auto f = overlap_forest(iv);
        auto ref = brute_components(iv);
        for (size_t i = 0; i < iv.size(); ++i)
            for (size_t j = 0; j < iv.size(); ++j)
                ASSERT_EQ(f.component[i] == f.component[j], ref[i] == ref[j]) << "round " << round;
        for (auto [a, b] : f.edges) EXPECT_TRUE(overlaps(iv[a], iv[b]));
        auto o = overlap_order(iv, 3);
        auto bo = brute_order(iv, 3);
        std::vector<int> r1 = o.reachable, r2 = bo.reachable;
        std::sort(r1.begin(), r1.end());
        std::sort(r2.begin(), r2.end());
        EXPECT_EQ(r1, r2) << "round " << round;
        EXPECT_EQ(o.unreachable, bo.unreachable);
    }
}
