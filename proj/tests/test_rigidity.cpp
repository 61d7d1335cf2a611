#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "dgaut/constraint_poly.hpp"
#include "dgaut/graph_aut.hpp"
#include "dgaut/lift.hpp"
#include "dgaut/rigidity.hpp"

using namespace dgaut;

TEST(ConstraintPoly, Arithmetic) {
    auto x = Poly::var(0), y = Poly::var(1);
    auto p = x * x + Poly::constant(3) * y - Poly::constant(1);
    EXPECT_FALSE(p.is_constant());
    EXPECT_EQ(p.degree_in(0), 2);
    EXPECT_EQ(p.degree_in(1), 1);
    auto q = p.substituted(0, Poly::constant(2));
    // 4 + 3y - 1
    EXPECT_EQ(q.degree_in(0), 0);
    auto r = q.substituted(1, Poly::constant(-1));
    ASSERT_TRUE(r.is_constant());
    EXPECT_EQ(r.constant_value(), Rational(0));
    EXPECT_TRUE((p - p).is_constant());
    EXPECT_EQ((p - p).constant_value(), Rational(0));
}

TEST(ConstraintPoly, UnivariateRootExtraction) {
    auto t = Poly::var(3);
    // (t - 2)(t + 1/2) = t^2 - 3/2 t - 1
    auto p = t * t - Poly::constant(Rational(3, 2)) * t - Poly::constant(1);
    auto coeffs = univariate_coeffs(p, 3);
    ASSERT_TRUE(coeffs.has_value());
    auto roots = rational_roots(*coeffs);
    ASSERT_TRUE(roots.has_value());
    std::set<Rational> expect{Rational(2), Rational(-1, 2)};
    EXPECT_EQ(std::set<Rational>(roots->begin(), roots->end()), expect);
    // multivariate polynomials decline
    auto q = t * Poly::var(1);
    EXPECT_FALSE(univariate_coeffs(q, 3).has_value());
}

TEST(Rigidity, SolutionCountsMatchGraphAutomorphisms) {
    std::vector<std::pair<std::string, Graph>> cases{
        {"single", corpus::single_vertex()}, {"p2", corpus::path_graph(2)},
        {"p3", corpus::path_graph(3)},       {"p4", corpus::path_graph(4)},
        {"k3", corpus::complete_graph(3)},   {"k4", corpus::complete_graph(4)},
        {"c5", corpus::cycle_graph(5)},
    };
    for (const auto& [name, g] : cases) {
        auto p = encode_graph(g);
        auto result = solve_rigidity(p, g, RigidityOptions{});
        EXPECT_EQ(result.status, RigidityStatus::Ok) << name;
        EXPECT_EQ(result.mode, "symbolic") << name;
        auto auts = automorphisms(g);
        ASSERT_EQ(result.solutions.size(), auts.size()) << name;
        std::set<std::vector<int>> want, got;
        for (const auto& s : auts) want.insert(s.image);
        for (const auto& s : result.solutions) {
            got.insert(s.sigma.image);
            EXPECT_TRUE(s.admissible()) << name;
            EXPECT_EQ(s.lambda1, Rational(1)) << name;
            EXPECT_EQ(s.lambda2, Rational(1)) << name;
        }
        EXPECT_EQ(got, want) << name;
    }
}

TEST(Rigidity, SolutionsAreSortedAndLiftable) {
    auto g = corpus::complete_graph(3);
    auto p = encode_graph(g);
    auto shape = recover_shape(p);
    auto result = solve_rigidity(p, g, RigidityOptions{});
    ASSERT_EQ(result.solutions.size(), 6u);
    EXPECT_TRUE(result.solutions.front().sigma.is_identity());
    EXPECT_TRUE(std::is_sorted(result.solutions.begin(), result.solutions.end(),
                               [](const auto& a, const auto& b) {
                                   return a.sigma.image < b.sigma.image;
                               }));
    for (const auto& s : result.solutions) EXPECT_NO_THROW(lift(p, shape, s.sigma));
}

TEST(Rigidity, IsolatedVertexPinsTheScalingFamily) {
    auto g = corpus::single_vertex();
    auto result = solve_rigidity(encode_graph(g), g, RigidityOptions{});
    EXPECT_EQ(result.status, RigidityStatus::Ok);
    ASSERT_EQ(result.solutions.size(), 1u);
    EXPECT_TRUE(result.solutions[0].from_family);
    EXPECT_TRUE(result.solutions[0].admissible());
    bool noted = false;
    for (const auto& n : result.notes)
        noted = noted || n.find("free scaling direction pinned to 1") != std::string::npos;
    EXPECT_TRUE(noted);
}

TEST(Rigidity, SearchModeVerifiesEveryCandidate) {
    auto g = corpus::path_graph(7);
    auto p = encode_graph(g);
    auto result = solve_rigidity(p, g, RigidityOptions{});
    EXPECT_EQ(result.status, RigidityStatus::Ok);
    EXPECT_EQ(result.mode, "search");
    ASSERT_EQ(result.solutions.size(), 2u);
    for (const auto& s : result.solutions) EXPECT_TRUE(s.admissible());
    ASSERT_FALSE(result.notes.empty());
    EXPECT_NE(result.notes[0].find("verified via lift"), std::string::npos);
}

TEST(Rigidity, SearchModeMatchesOracleOnRandomGraphs) {
    for (const auto& [name, g] : corpus::random_graphs()) {
        if (g.n_vertices() <= 6) continue;  // those run in symbolic mode elsewhere
        auto result = solve_rigidity(encode_graph(g), g, RigidityOptions{});
        EXPECT_EQ(result.status, RigidityStatus::Ok) << name;
        EXPECT_EQ(result.mode, "search") << name;
        EXPECT_EQ(result.solutions.size(), automorphisms(g, 1 << 20).size()) << name;
    }
}

TEST(Rigidity, RejectsMismatchedGraph) {
    auto p = encode_graph(corpus::path_graph(3));
    EXPECT_THROW(solve_rigidity(p, corpus::complete_graph(3), RigidityOptions{}),
                 StructureError);
}

TEST(Rigidity, ThrowsWhenPastTheSearchCap) {
    auto g = corpus::path_graph(4);
    auto p = encode_graph(g);
    RigidityOptions tight;
    tight.symbolic_cap = 2;
    tight.search_cap = 3;
    EXPECT_THROW(solve_rigidity(p, g, tight), ResourceError);
}

TEST(Rigidity, SymbolicAndSearchAgree) {
    // the same graph through both pipelines
    auto g = corpus::cycle_graph(4);
    auto p = encode_graph(g);
    auto symbolic = solve_rigidity(p, g, RigidityOptions{});
    RigidityOptions force_search;
    force_search.symbolic_cap = 0;
    auto search = solve_rigidity(p, g, force_search);
    EXPECT_EQ(symbolic.mode, "symbolic");
    EXPECT_EQ(search.mode, "search");
    ASSERT_EQ(symbolic.solutions.size(), search.solutions.size());
    for (size_t i = 0; i < symbolic.solutions.size(); ++i)
        EXPECT_EQ(symbolic.solutions[i].sigma.image, search.solutions[i].sigma.image);
}
