#include <gtest/gtest.h>

#include "support.hpp"

using namespace tricert;
using namespace tricert::testing;

namespace {

struct OracleStep {
    int nx, ny, nxy;
    bool after_3conn;
};

// Materializes G_l from the first l paths and measures the removal of path l-1 directly.
std::vector<OracleStep> oracle_removals(const Graph& g, const Certificate& c) {
    std::vector<OracleStep> out;
    for (size_t l = c.paths.size(); l >= 2; --l) {
        NaiveSubdivisionModel s(g);
        for (const auto& ch : c.s3) s.add_path(ch);
        for (size_t k = 0; k < l; ++k) s.add_path(c.paths[k]);
        std::vector<std::set<int>> nb(g.n);
        for (const auto& L : s.links()) {
            nb[L.verts.front()].insert(L.verts.back());
            nb[L.verts.back()].insert(L.verts.front());
        }
        const int x = c.paths[l - 1].front(), y = c.paths[l - 1].back();
        std::set<int> u = nb[x];
        u.insert(nb[y].begin(), nb[y].end());
        NaiveSubdivisionModel before(g);
        for (const auto& ch : c.s3) before.add_path(ch);
        for (size_t k = 0; k + 1 < l; ++k) before.add_path(c.paths[k]);
        out.push_back({static_cast<int>(nb[x].size()), static_cast<int>(nb[y].size()), static_cast<int>(u.size()),
                       brute_vertex_3conn(smoothed(before)).ok});
    }
    return out;
}

}  // namespace

TEST(EdgeRepresentation, K4) {
    Graph g = complete(4);
    EdgeRepresentation er = to_edge_representation(g, *certify(g).certificate);
    EXPECT_EQ(er.base.kind, OpKind::SubdivideTwo);
    EXPECT_EQ(er.base.path, (std::vector<int>{1, 3}));
    EXPECT_EQ(std::minmax(er.base.x.a, er.base.x.b), std::minmax(0, 2));
    EXPECT_EQ(std::minmax(er.base.y.a, er.base.y.b), std::minmax(0, 2));
    EXPECT_TRUE(er.ops.empty());
    EXPECT_TRUE(to_removal_sequence(g, *certify(g).certificate).steps.empty());
}

TEST(EdgeRepresentation, K5KindsAndIdentities) {
    Graph g = complete(5);
    EdgeRepresentation er = to_edge_representation(g, *certify(g).certificate);
    std::vector<OpKind> kinds;
    for (const auto& op : er.ops) kinds.push_back(op.kind);
    EXPECT_EQ(kinds, (std::vector<OpKind>{OpKind::AddEdge, OpKind::SubdivideOne, OpKind::AddEdge}));
    int a = 2, b = 1, c = 0;
    EXPECT_EQ(b + 2 * c, g.n - 4);
    EXPECT_EQ(a + 2 * b + 3 * c, g.m - 6);
    EXPECT_EQ(format_edge_representation(er),
              "op 0 kind=sub2 : 2 4\nop 1 kind=add : 2 5 4\nop 2 kind=sub1 : 1 5\nop 3 kind=add : 3 5\n");
}

TEST(EdgeRepresentation, IdentitiesOnGenerator) {
    for (int s = 0; s < 300; ++s) {
        Graph g = gen_random_3connected(s % 50, s);
        EdgeRepresentation er = to_edge_representation(g, *certify(g).certificate);
        int a = 0, b = 0, c = 0;
        for (const auto& op : er.ops) {
            a += op.kind == OpKind::AddEdge;
            b += op.kind == OpKind::SubdivideOne;
            c += op.kind == OpKind::SubdivideTwo;
            EXPECT_EQ(op.x.inner() + op.y.inner(), static_cast<int>(op.kind));
        }
        EXPECT_EQ(static_cast<int>(er.ops.size()), g.m - g.n - 2);
        EXPECT_EQ(b + 2 * c, g.n - 4);
        EXPECT_EQ(a + 2 * b + 3 * c, g.m - 6);
    }
}

TEST(EdgeRepresentation, RefusesTamperedCertificate) {
    Graph g = complete(5);
    Certificate c = *certify(g).certificate;
    std::swap(c.paths[1], c.paths[2]);
    EXPECT_THROW(to_edge_representation(g, c), TransformError);
    EXPECT_THROW(to_removal_sequence(g, c), TransformError);
}

TEST(RemovalSequence, K5MatchesOracle) {
    Graph g = complete(5);
    Certificate c = *certify(g).certificate;
    RemovalSequence rs = to_removal_sequence(g, c);
    ASSERT_EQ(rs.steps.size(), 3u);
    auto ref = oracle_removals(g, c);
    for (size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(rs.steps[k].nx, ref[k].nx);
        EXPECT_EQ(rs.steps[k].ny, ref[k].ny);
        EXPECT_EQ(rs.steps[k].nxy, ref[k].nxy);
        EXPECT_TRUE(ref[k].after_3conn);
    }
    // the last removal undoes an edge added parallel to a K4 edge
    EXPECT_EQ(rs.steps[2].nxy, 4);
    EXPECT_FALSE(rs.all_ok);
    EXPECT_EQ(format_removal_sequence(rs),
              "rm 1 kind=add nx=4 ny=4 nxy=5 ok : 3 5\n"
              "rm 2 kind=sub1 nx=4 ny=3 nxy=5 ok : 1 5\n"
              "rm 3 kind=add nx=3 ny=3 nxy=4 violated : 2 5 4\n");
}

TEST(RemovalSequence, MatchesOracleOnSmallCorpus) {
    int graphs = 0;
    for (const auto& cg : small_corpus(200, 4)) {
        auto r = certify(cg.g);
        if (!r.positive()) continue;
        ++graphs;
        RemovalSequence rs = to_removal_sequence(cg.g, *r.certificate);
        auto ref = oracle_removals(cg.g, *r.certificate);
        ASSERT_EQ(rs.steps.size(), ref.size());
        EXPECT_EQ(static_cast<int>(rs.steps.size()), cg.g.m - cg.g.n - 2);
        for (size_t k = 0; k < ref.size(); ++k) {
            EXPECT_EQ(rs.steps[k].nx, ref[k].nx);
            EXPECT_EQ(rs.steps[k].ny, ref[k].ny);
            EXPECT_EQ(rs.steps[k].nxy, ref[k].nxy);
            EXPECT_TRUE(ref[k].after_3conn);
        }
    }
    EXPECT_GT(graphs, 50);
}
