#include <gtest/gtest.h>

#include "corpus.hpp"
#include "dgaut/graph_aut.hpp"
#include "dgaut/group_iso.hpp"
#include "dgaut/realize.hpp"

using namespace dgaut;

TEST(Realize, VertexCountFormula) {
    EXPECT_EQ(realize_vertex_count(1), 6);
    EXPECT_EQ(realize_vertex_count(2), 2);
    EXPECT_EQ(realize_vertex_count(3), 57);
    EXPECT_EQ(realize_vertex_count(4), 136);
    EXPECT_EQ(realize_vertex_count(5), 265);
    EXPECT_EQ(realize_vertex_count(6), 456);
    EXPECT_EQ(realize_vertex_count(8), 1072);
    EXPECT_EQ(realize_vertex_count(16), 8416);
}

TEST(Realize, CountMatchesBuiltGraph) {
    for (int n : {1, 2, 3, 4, 5}) {
        auto g = GroupTable::cyclic(n);
        EXPECT_EQ(realize(g).n_vertices(), realize_vertex_count(n)) << "order " << n;
    }
}

TEST(Realize, AsymmetricGraphIsRigid) {
    auto g = asymmetric_graph();
    EXPECT_EQ(g.n_vertices(), 6);
    EXPECT_TRUE(is_connected(g));
    auto auts = automorphisms(g);
    ASSERT_EQ(auts.size(), 1u);
    EXPECT_TRUE(auts[0].is_identity());
}

TEST(Realize, SmallGroupsVerify) {
    for (const auto& [name, g] : corpus::realization_groups()) {
        if (g.n > 6) continue;  // D4/Q8 are exercised by the acceptance run
        auto graph = realize(g);
        EXPECT_TRUE(is_connected(graph)) << name;
        auto check = verify_realization(g, graph);
        EXPECT_TRUE(check.ok) << name << ": " << check.detail;
        EXPECT_EQ(check.n_automorphisms, g.n) << name;
        ASSERT_TRUE(check.witness.has_value()) << name;
        // the witness maps group elements to automorphism indices bijectively
        std::vector<char> hit(g.n, 0);
        for (int v : *check.witness) {
            ASSERT_GE(v, 0);
            ASSERT_LT(v, g.n);
            EXPECT_FALSE(hit[v]++);
        }
    }
}

TEST(Realize, DetectsWrongGroupOfSameOrder) {
    auto z4 = GroupTable::cyclic(4);
    auto z2z2 = GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2));
    auto check = verify_realization(z4, realize(z2z2));
    EXPECT_FALSE(check.ok);
    EXPECT_NE(check.detail.find("different group"), std::string::npos);
    EXPECT_EQ(check.n_automorphisms, 4);
}

TEST(Realize, DetectsWrongAutomorphismCount) {
    auto check = verify_realization(GroupTable::cyclic(3), corpus::path_graph(3));
    EXPECT_FALSE(check.ok);
    EXPECT_NE(check.detail.find("count"), std::string::npos);
}

TEST(Realize, DetectsDisconnectedGraph) {
    Graph g;
    g.add_edge("a", "b");
    g.add_vertex("c");
    auto check = verify_realization(GroupTable::cyclic(2), g);
    EXPECT_FALSE(check.ok);
    EXPECT_NE(check.detail.find("connected"), std::string::npos);
}

TEST(Realize, RejectsInvalidTable) {
    EXPECT_THROW(realize(GroupTable(2, {0, 0, 1, 1})), ValidationError);
}

TEST(AutomorphismGroupTable, BuildsClosedSet) {
    auto auts = automorphisms(corpus::complete_graph(3));
    ASSERT_EQ(auts.size(), 6u);
    auto table = automorphism_group_table(auts);
    EXPECT_TRUE(validate(table).ok);
    EXPECT_TRUE(is_isomorphic(corpus::s3(), table).isomorphic);
}

TEST(AutomorphismGroupTable, ThrowsOnNonClosedSet) {
    // identity plus a single 5-cycle rotation: its square is missing
    auto id = VertexPermutation::identity(5);
    VertexPermutation rot;
    rot.image = {1, 2, 3, 4, 0};
    EXPECT_THROW(automorphism_group_table({id, rot}), StructureError);
}

TEST(Realize, BaseVerticesKeepHighDegree) {
    // gadget vertices have degree <= 3, group vertices degree 2(n-1) >= 4,
    // so the two layers cannot be exchanged by any automorphism
    auto g = GroupTable::cyclic(3);
    auto graph = realize(g);
    for (int k = 0; k < g.n; ++k) {
        int v = graph.index_of("g" + std::to_string(k));
        EXPECT_EQ(graph.degree(v), 2 * (g.n - 1));
    }
    int small = 0;
    for (int v = 0; v < graph.n_vertices(); ++v)
        if (graph.degree(v) <= 3) ++small;
    EXPECT_EQ(small, graph.n_vertices() - g.n);
}
