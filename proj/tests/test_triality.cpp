#include <gtest/gtest.h>

#include "mss/factor.hpp"
#include "mss/triality.hpp"
#include "oracle/oracle.hpp"

using namespace mss;

class Triality : public ::testing::TestWithParam<std::string> {};

TEST_P(Triality, SolvedDimensionsMatchHandTable) {
    auto s = build_composition(GetParam());
    auto shape = oracle::shapes().at(GetParam());
    EXPECT_EQ(tri_solve_parity(s, 0).size(), static_cast<std::size_t>(shape.tri0));
    EXPECT_EQ(tri_solve_parity(s, 1).size(), static_cast<std::size_t>(shape.tri1));
}

TEST_P(Triality, ThetaPreservesTrialityAndHasOrderThree) {
    auto s = build_composition(GetParam());
    for (auto& t : tri_solve(s)) {
        auto t1 = theta_apply(s, t);
        auto t2 = theta_apply(s, t1);
        auto t3 = theta_apply(s, t2);
        EXPECT_TRUE(satisfies_triality(s, t1));
        EXPECT_TRUE(satisfies_triality(s, t2));
        EXPECT_EQ(t3, t);
    }
}

TEST_P(Triality, FactorGradingIsConsistent) {
    auto f = build_factor(GetParam());
    auto p = verify_factor(f);
    EXPECT_TRUE(p.empty()) << p.front();
    auto shape = oracle::shapes().at(GetParam());
    EXPECT_EQ(f.tri.even_dim(), static_cast<std::size_t>(shape.tri0));
    EXPECT_EQ(f.tri.odd_dim(), static_cast<std::size_t>(shape.tri1));
}

TEST_P(Triality, SupercommutatorClosesOnTri) {
    auto s = build_composition(GetParam());
    auto basis = tri_solve(s);
    for (auto& a : basis)
        for (auto& b : basis) EXPECT_TRUE(satisfies_triality(s, tri_bracket(a, b)));
}

INSTANTIATE_TEST_SUITE_P(AllSix, Triality, ::testing::Values("S1", "S2", "S4", "S8", "S12", "S42"));

class LabeledModel : public ::testing::TestWithParam<std::string> {};

TEST_P(LabeledModel, SpansTheSolvedTri) {
    auto s = build_composition(GetParam());
    auto m = tri_model(s);
    for (auto& t : m.basis) EXPECT_TRUE(satisfies_triality(s, t));
    EXPECT_TRUE(span_equal(m.basis, tri_solve(s), s.dim));
    EXPECT_EQ(m.basis.size(), m.labels.size());
}

INSTANTIATE_TEST_SUITE_P(ExplicitModels, LabeledModel, ::testing::Values("S2", "S4", "S12", "S42"));

TEST(TrialityModel, IdentityHoldsOnEveryBasisTriple) {
    auto v = verify_triality_model();
    EXPECT_TRUE(v.empty()) << v.size() << " violations";
}

TEST(TrialityModel, WrongOddSignIsDetected) {
    EXPECT_FALSE(verify_triality_model(F3(-1)).empty());
}

TEST(LocalTriality, UniqueForTheSuperAlgebras) {
    for (auto name : {"S12", "S42"}) {
        auto lt = local_triality(build_composition(name));
        EXPECT_TRUE(lt.unique()) << name;
        EXPECT_EQ(lt.kernel_dim[0] + lt.kernel_dim[1], 0u) << name;
    }
}

TEST(LocalTriality, OspDimensionsMatchTri) {
    auto lt = local_triality(build_composition("S42"));
    EXPECT_EQ(lt.osp_dim[0], 9u);
    EXPECT_EQ(lt.osp_dim[1], 8u);
}

TEST(TrialityPairs, EveryBasisPairGivesATrialityElement) {
    for (auto name : {"S4", "S12", "S42"}) {
        auto s = build_composition(name);
        for (std::size_t x = 0; x < s.dim; ++x)
            for (std::size_t y = 0; y < s.dim; ++y)
                EXPECT_NO_THROW(t_pair(s, unit(s.dim, x), unit(s.dim, y))) << name << " " << x << "," << y;
    }
}
