#include <gtest/gtest.h>

#include <map>

#include "corpus.hpp"
#include "dgaut/graph_aut.hpp"
#include "dgaut/lift.hpp"
#include "dgaut/sampling.hpp"

using namespace dgaut;

namespace {

Element<Rational> mono(const TablePtr& t, std::vector<std::pair<std::string, int>> factors) {
    std::vector<Monomial::Factor> f;
    for (auto& [name, e] : factors) f.emplace_back(*t->find(name), e);
    auto [sign, m] = normalize_product(*t, f);
    return Element<Rational>::term(t, std::move(m), sign);
}

}  // namespace

TEST(Lift, IdentityLiftsToIdentity) {
    auto g = corpus::path_graph(3);
    auto p = encode_graph(g);
    auto f = lift(p, VertexPermutation::identity(3));
    EXPECT_TRUE(f == GeneratorMap<Rational>::identity(p.table));
}

TEST(Lift, MovesVertexGeneratorsOnly) {
    auto g = corpus::path_graph(3);
    auto p = encode_graph(g);
    auto shape = recover_shape(p);
    VertexPermutation rev;
    rev.image = {2, 1, 0};  // the nontrivial path automorphism
    auto f = lift(p, shape, rev);
    EXPECT_EQ(f.image(shape.x1).str(), "1 * x1");
    EXPECT_EQ(f.image(shape.z).str(), "1 * z");
    EXPECT_EQ(f.image(*p.table->find("xv:a")).str(), "1 * xv:c");
    EXPECT_EQ(f.image(*p.table->find("zv:c")).str(), "1 * zv:a");
    EXPECT_EQ(f.image(*p.table->find("xv:b")).str(), "1 * xv:b");
}

TEST(Lift, RejectsNonAutomorphismWithResidual) {
    auto g = corpus::path_graph(3);
    auto p = encode_graph(g);
    VertexPermutation swap_ab;
    swap_ab.image = {1, 0, 2};  // not an automorphism: sends edge b-c to a-c
    try {
        lift(p, swap_ab);
        FAIL() << "expected LiftError";
    } catch (const LiftError& e) {
        EXPECT_EQ(e.generator, "zv:a");
        EXPECT_EQ(e.residual, "-1 * x2^4 xv:b xv:c");
        EXPECT_EQ(std::string(e.what()),
                  "commutation with d fails on generator zv:a: residual -1 * x2^4 xv:b xv:c");
    }
}

TEST(Lift, RejectsSizeMismatchAndNonPermutations) {
    auto p = encode_graph(corpus::path_graph(3));
    EXPECT_THROW(lift(p, VertexPermutation::identity(4)), ValidationError);
    VertexPermutation bad;
    bad.image = {0, 0, 1};
    EXPECT_THROW(lift(p, bad), ValidationError);
}

TEST(Lift, IsAGroupHomomorphism) {
    for (const auto& g : {corpus::complete_graph(4), corpus::cycle_graph(5)}) {
        auto p = encode_graph(g);
        auto shape = recover_shape(p);
        auto auts = automorphisms(g);
        std::vector<GeneratorMap<Rational>> lifts;
        for (const auto& s : auts) lifts.push_back(lift(p, shape, s));
        for (size_t i = 0; i < auts.size(); ++i)
            for (size_t j = 0; j < auts.size(); ++j) {
                auto st = compose(auts[i], auts[j]);
                // generator maps compose left-to-right like the permutations
                EXPECT_TRUE(lift(p, shape, st) == compose(lifts[i], lifts[j]));
            }
        // injectivity: distinct automorphisms give distinct lifts
        for (size_t i = 0; i < lifts.size(); ++i)
            for (size_t j = i + 1; j < lifts.size(); ++j)
                EXPECT_FALSE(lifts[i] == lifts[j]);
    }
}

TEST(Kernel, FrozenShiftOfTopGenerator) {
    auto p = encode_graph(corpus::path_graph(2));
    auto shape = recover_shape(p);
    auto m = mono(p.table, {{"x1", 5}, {"x2", 1}, {"y1", 1}, {"y2", 1}});
    auto f = kernel_element(p, shape, m);
    EXPECT_EQ(f.image(shape.z).str(), "-1 * x1^7 x2^3 y1 + 1 * x1^8 x2^2 y2 + 1 * z");
    for (int i = 0; i < p.table->size(); ++i)
        if (i != shape.z) EXPECT_TRUE(f.image(i) == Element<Rational>::generator(p.table, i));
}

TEST(Kernel, ClosedShiftGivesIdentity) {
    auto p = encode_graph(corpus::path_graph(2));
    auto m = mono(p.table, {{"x1", 1}, {"x2", 11}});  // a cocycle of degree 118
    auto f = kernel_element(p, m);
    EXPECT_TRUE(f == GeneratorMap<Rational>::identity(p.table));
}

TEST(Kernel, ShiftsVertexPartners) {
    auto g = corpus::complete_graph(3);
    auto p = encode_graph(g);
    auto shape = recover_shape(p);
    // d(x1^6 x2^7) = 0, so shifts by it vanish and the map is the identity
    auto mz = mono(p.table, {{"x1", 6}, {"x2", 7}});
    std::map<int, Element<Rational>> mzv{{0, mz}, {2, mz + mz}};
    auto f = kernel_element(p, shape, Element<Rational>::zero(p.table), mzv);
    EXPECT_TRUE(f == GeneratorMap<Rational>::identity(p.table));

    // a non-closed shift on one partner moves that partner only
    auto m2 = mono(p.table, {{"x1", 5}, {"x2", 1}, {"y1", 1}, {"y2", 1}});
    auto f2 = kernel_element(p, shape, Element<Rational>::zero(p.table), {{1, m2}});
    EXPECT_EQ(f2.image(shape.zv[1]).str(), "-1 * x1^7 x2^3 y1 + 1 * x1^8 x2^2 y2 + 1 * zv:b");
    EXPECT_TRUE(f2.image(shape.z) == Element<Rational>::generator(p.table, shape.z));
}

TEST(Kernel, RejectsWrongDegreeAndBadKeys) {
    auto p = encode_graph(corpus::path_graph(2));
    auto shape = recover_shape(p);
    auto wrong = mono(p.table, {{"x1", 4}, {"x2", 1}, {"y1", 1}, {"y2", 1}});  // degree 110
    EXPECT_THROW(kernel_element(p, shape, wrong), DegreeError);
    auto ok = mono(p.table, {{"x1", 6}, {"x2", 7}});
    EXPECT_THROW(kernel_element(p, shape, Element<Rational>::zero(p.table), {{9, ok}}),
                 ValidationError);
}

TEST(Kernel, PropertyReportAcceptsKernelPairs) {
    auto p = encode_graph(corpus::complete_graph(3));
    auto shape = recover_shape(p);
    auto m1 = mono(p.table, {{"x1", 5}, {"x2", 1}, {"y1", 1}, {"y2", 1}});
    auto m3 = mono(p.table, {{"x1", 2}, {"x2", 3}, {"y2", 1}, {"y3", 1}});
    auto f = kernel_element(p, shape, m1, {{0, m3}});
    auto mprime = mono(p.table, {{"x1", 6}, {"y1", 1}, {"y3", 1}});
    auto g = kernel_element(p, shape, mprime, {{1, m1}, {2, m3}});
    auto rep = check_kernel_properties(p, f, g);
    EXPECT_TRUE(rep.ok()) << rep.detail;
    EXPECT_TRUE(rep.kernel_shaped);
    EXPECT_TRUE(rep.power_law);
    EXPECT_TRUE(rep.torsion_free);
    EXPECT_TRUE(rep.commuting);
}

TEST(Kernel, PropertyReportFlagsNonKernelMaps) {
    auto p = encode_graph(corpus::path_graph(3));
    auto shape = recover_shape(p);
    // a genuine graph lift moves degree-40 generators, so it is not kernel shaped
    VertexPermutation rev;
    rev.image = {2, 1, 0};
    auto f = lift(p, shape, rev);
    auto rep = check_kernel_properties(p, f, GeneratorMap<Rational>::identity(p.table));
    EXPECT_FALSE(rep.ok());
    EXPECT_FALSE(rep.kernel_shaped);
    EXPECT_NE(rep.detail.find("moves generator"), std::string::npos);
    // the involution also breaks the linear power law on the moved generators
    EXPECT_FALSE(rep.power_law);
}

TEST(Kernel, RandomSamplesSatisfyTheLaws) {
    auto p = encode_graph(corpus::complete_graph(3));
    auto shape = recover_shape(p);
    Rng rng(corpus::kCorpusSeed);
    int built = 0;
    for (int round = 0; round < 20; ++round) {
        auto mz = random_homogeneous(rng, p.table, 118, 3);
        auto mv = random_homogeneous(rng, p.table, 118, 3);
        auto f = kernel_element(p, shape, mz, {{round % 3, mv}});
        auto g = kernel_element(p, shape, mv);
        auto rep = check_kernel_properties(p, f, g, 5);
        EXPECT_TRUE(rep.ok()) << rep.detail;
        ++built;
    }
    EXPECT_EQ(built, 20);
}
