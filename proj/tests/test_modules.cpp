#include <gtest/gtest.h>

#include "mss/golden_data.hpp"
#include "mss/verify.hpp"
#include "oracle/oracle.hpp"
#include "support/gen.hpp"

using namespace mss;

namespace {

const GoldenStore& store() {
    static const GoldenStore s(embedded_golden_files());
    return s;
}

std::vector<std::string> module_entries() {
    std::vector<std::string> out;
    for (auto& e : all_entries())
        if (store().has_entry(e) && store().entry(e).module) out.push_back(e);
    return out;
}

ModuleRep adjoint(const LieSuperalgebra& g) {
    ModuleRep m;
    m.dim = g.dim;
    for (std::size_t i = 0; i < g.dim; ++i) m.action.push_back(ad_matrix(g, unit(g.dim, i)));
    m.weights.assign(g.dim, Degree{});
    return m;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    ModuleRep m;
    m.dim = a.dim + b.dim;
    for (std::size_t k = 0; k < a.action.size(); ++k) {
        Mat x(m.dim, m.dim);
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t c = 0; c < a.dim; ++c) x(r, c) = a.action[k](r, c);
        for (std::size_t r = 0; r < b.dim; ++r)
            for (std::size_t c = 0; c < b.dim; ++c) x(a.dim + r, a.dim + c) = b.action[k](r, c);
        m.action.push_back(std::move(x));
    }
    return m;
}

ModuleRep restricted(const ModuleRep& m, const Subspace& s) {
    ModuleRep out;
    out.dim = s.dim();
    Coordinatizer co(s.basis(), m.dim);
    for (auto& a : m.action) {
        Mat x(out.dim, out.dim);
        for (std::size_t c = 0; c < out.dim; ++c) x.set_col(c, *co.coords(a * s.basis()[c]));
        out.action.push_back(std::move(x));
    }
    return out;
}

std::map<Degree, std::size_t> minus(std::map<Degree, std::size_t> a, const std::map<Degree, std::size_t>& b,
                                    std::size_t times) {
    for (auto& [w, n] : b) {
        a[w] -= n * times;
        if (a[w] == 0) a.erase(w);
    }
    return a;
}

std::map<Degree, std::size_t> natural_weights(std::size_t n) { return oracle::wedge_weights(n, 1); }

std::map<Degree, std::size_t> oracle_weights(std::size_t n, std::size_t k) {
    std::map<Degree, std::size_t> out;
    for (auto& [w, c] : oracle::wedge_weights(n, k)) out[Degree(w.begin(), w.end())] = c;
    return out;
}

}  // namespace

TEST(Norton, AgreesWithEnumerationOnSmallModules) {
    std::vector<std::pair<std::string, ModuleRep>> cases;
    cases.push_back({"sl2 adjoint", adjoint(build_entry("S1S1"))});
    cases.push_back({"A2 adjoint", adjoint(build_entry("S1S2"))});
    auto g = build_entry("S1S12");
    auto odd = odd_module(g);
    cases.push_back({"S1S12 odd", odd});
    auto hw = highest_weight_vectors(g, odd, default_order(g));
    ASSERT_FALSE(hw.empty());
    cases.push_back({"S1S12 odd summand", restricted(odd, spin(odd, {hw[0].v}))});
    auto sl2 = adjoint(build_entry("S1S1"));
    cases.push_back({"sl2 adjoint twice", direct_sum(sl2, sl2)});
    for (auto& [name, m] : cases) {
        bool irr = oracle::irreducible_by_enumeration(m.action, m.dim);
        auto nr = norton_irreducible(m);
        ASSERT_NE(nr.verdict, NortonVerdict::inconclusive) << name;
        EXPECT_EQ(nr.verdict == NortonVerdict::irreducible, irr) << name;
        if (nr.verdict == NortonVerdict::reducible) {
            EXPECT_GT(nr.witness.size(), 0u) << name;
            EXPECT_LT(nr.witness.size(), m.dim) << name;
        }
    }
}

TEST(Norton, IsDeterministicForAFixedSeed) {
    auto m = odd_module(build_entry("S4S42"));
    auto a = norton_irreducible(m, 99), b = norton_irreducible(m, 99);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.attempts, b.attempts);
}

TEST(Norton, ZeroActionIsReducible) {
    ModuleRep m;
    m.dim = 3;
    m.action = {Mat(3, 3)};
    EXPECT_EQ(norton_irreducible(m).verdict, NortonVerdict::reducible);
}

class OddModule : public ::testing::TestWithParam<std::string> {};

TEST_P(OddModule, IsARepresentationWithTheListedStructure) {
    auto g = build_entry(GetParam());
    auto G = store().entry(GetParam());
    auto rc = compare_roots(g, G);
    auto m = odd_module(g);
    const auto& mg = *G.module;
    EXPECT_EQ(m.dim, mg.dim);
    EXPECT_EQ(representation_violations(g, m), 0u);
    auto hw = highest_weight_vectors(g, m, rc.rd.order);
    if (mg.verdict == "reducible") {
        std::vector<Vec> seeds;
        for (auto& h : hw) seeds.push_back(h.v);
        auto d = decompose_from(m, seeds);
        EXPECT_TRUE(d.direct);
        std::vector<std::size_t> dims;
        for (auto& s : d.summands) dims.push_back(s.dim());
        EXPECT_EQ(dims, mg.summands);
        for (auto& s : d.summands)
            EXPECT_EQ(norton_irreducible(restricted(m, s)).verdict, NortonVerdict::irreducible);
        EXPECT_EQ(norton_irreducible(m).verdict, NortonVerdict::reducible);
    } else if (mg.verdict == "irreducible") {
        ASSERT_EQ(hw.size(), 1u);
        if (G.odd_highest) {
            EXPECT_EQ(hw[0].weight, *G.odd_highest);
        }
        EXPECT_EQ(norton_irreducible(m).verdict, NortonVerdict::irreducible);
    } else if (mg.verdict == "irreducible_derived") {
        EXPECT_EQ(norton_irreducible(odd_module(g, derived_even_part(g))).verdict, NortonVerdict::irreducible);
    }
}

INSTANTIATE_TEST_SUITE_P(Golden, OddModule, ::testing::ValuesIn(module_entries()));

TEST(Exterior, Sp6LambdaThreeKernel) {
    auto e = exterior_model(ExteriorKind::sp6_lambda3);
    EXPECT_EQ(e.wedge_dim, oracle::binomial(6, 3));
    EXPECT_EQ(e.contraction_rank, 6u);
    EXPECT_EQ(e.kernel_dim, 14u);
    EXPECT_EQ(e.module.dim, 14u);
    auto want = minus(oracle_weights(3, 3), natural_weights(3), 1);
    EXPECT_EQ(weight_multiset(e.module), want);
    ASSERT_EQ(e.highest.size(), 1u);
    EXPECT_EQ(e.highest[0].weight, e.expected_highest);
    EXPECT_EQ(norton_irreducible(e.module).verdict, NortonVerdict::irreducible);
}

TEST(Exterior, Sp8LambdaThreeQuotient) {
    auto e = exterior_model(ExteriorKind::sp8_lambda3);
    EXPECT_EQ(e.wedge_dim, oracle::binomial(8, 3));
    EXPECT_EQ(e.kernel_dim, 48u);
    EXPECT_EQ(e.sub_dim, 8u);
    EXPECT_TRUE(e.sub_in_kernel);
    EXPECT_EQ(e.module.dim, 40u);
    auto want = minus(oracle_weights(4, 3), natural_weights(4), 2);
    EXPECT_EQ(weight_multiset(e.module), want);
    EXPECT_EQ(norton_irreducible(e.module).verdict, NortonVerdict::irreducible);
}

TEST(Exterior, Sp6LambdaTwoQuotient) {
    auto e = exterior_model(ExteriorKind::sp6_lambda2);
    EXPECT_EQ(e.wedge_dim, oracle::binomial(6, 2));
    EXPECT_EQ(e.kernel_dim, 14u);
    EXPECT_EQ(e.sub_dim, 1u);
    EXPECT_TRUE(e.sub_in_kernel);
    EXPECT_EQ(e.module.dim, 13u);
    auto want = oracle_weights(3, 2);
    want[Degree(3, 0)] -= 2;
    EXPECT_EQ(weight_multiset(e.module), want);
    EXPECT_EQ(norton_irreducible(e.module).verdict, NortonVerdict::irreducible);
}

TEST(Exterior, ModelWeightsEqualOddWeights) {
    for (auto entry : {"S1S42", "S12S42", "S4S12"}) {
        auto em = exterior_match(entry);
        ASSERT_TRUE(em.has_value());
        auto e = exterior_model(em->kind);
        auto g = build_entry(entry);
        EXPECT_EQ(expected_odd_weights(e, *em), weight_multiset(odd_module(g))) << entry;
    }
}

TEST(Exterior, TensorWeightsConcatenateCoordinates) {
    auto t = tensor_weights({{Degree{1}, 2}, {Degree{0}, 1}}, {{Degree{1}, 1}, {Degree{-1}, 1}});
    EXPECT_EQ(t, (std::map<Degree, std::size_t>{{{1, 1}, 2}, {{1, -1}, 2}, {{0, 1}, 1}, {{0, -1}, 1}}));
}

TEST(Spin, RandomVectorOfAnIrreducibleModuleSpinsEverything) {
    auto m = odd_module(build_entry("S1S42"));
    testgen::Gen gen(31);
    for (int t = 0; t < 20; ++t) {
        Vec v = gen.vec(m.dim);
        if (is_zero(v)) continue;
        EXPECT_EQ(spin(m, {v}).dim(), m.dim);
    }
}
