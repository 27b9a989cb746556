#include <gtest/gtest.h>

#include "mss/composition.hpp"
#include "oracle/oracle.hpp"
#include "support/gen.hpp"

using namespace mss;

namespace {

oracle::IVec random_even(testgen::Gen& gen, const CompositionSuperalgebra& s) {
    oracle::IVec v(s.dim, 0);
    for (std::size_t i = 0; i < s.dim; ++i)
        if (s.parity[i] == 0) v[i] = static_cast<int>(gen.below(3));
    return v;
}

oracle::IVec random_any(testgen::Gen& gen, std::size_t n) {
    oracle::IVec v(n);
    for (auto& x : v) x = static_cast<int>(gen.below(3));
    return v;
}

}  // namespace

class CompositionAlgebra : public ::testing::TestWithParam<std::string> {};

TEST_P(CompositionAlgebra, SuperDimensions) {
    auto s = build_composition(GetParam());
    auto shape = oracle::shapes().at(GetParam());
    EXPECT_EQ(s.even_dim(), static_cast<std::size_t>(shape.s0));
    EXPECT_EQ(s.odd_dim(), static_cast<std::size_t>(shape.s1));
}

TEST_P(CompositionAlgebra, AxiomsHoldOnAllBasisCombinations) {
    auto v = verify_composition_axioms(build_composition(GetParam()));
    EXPECT_TRUE(v.empty()) << v.size() << " violations, first: " << v.front().str();
}

TEST_P(CompositionAlgebra, NormIsMultiplicativeOnRandomEvenVectors) {
    auto s = build_composition(GetParam());
    oracle::DenseComposition d(s);
    testgen::Gen gen(100 + s.dim);
    for (int t = 0; t < 200; ++t) {
        auto x = random_even(gen, s), y = random_even(gen, s);
        EXPECT_EQ(d.q(d.mul(x, y)), oracle::m3(d.q(x) * d.q(y)));
    }
}

TEST_P(CompositionAlgebra, FormIsAssociativeOnRandomVectors) {
    auto s = build_composition(GetParam());
    oracle::DenseComposition d(s);
    testgen::Gen gen(200 + s.dim);
    for (int t = 0; t < 200; ++t) {
        auto x = random_any(gen, s.dim), y = random_any(gen, s.dim), z = random_any(gen, s.dim);
        EXPECT_EQ(d.b(d.mul(x, y), z), d.b(x, d.mul(y, z)));
    }
}

TEST_P(CompositionAlgebra, SymmetricCompositionIdentityForEvenX) {
    // x*(y*x) = (x*y)*x = q(x) y
    auto s = build_composition(GetParam());
    oracle::DenseComposition d(s);
    testgen::Gen gen(300 + s.dim);
    for (int t = 0; t < 100; ++t) {
        auto x = random_even(gen, s), y = random_any(gen, s.dim);
        oracle::IVec qy(s.dim);
        for (std::size_t k = 0; k < s.dim; ++k) qy[k] = oracle::m3(d.q(x) * y[k]);
        EXPECT_EQ(d.mul(x, d.mul(y, x)), qy);
        EXPECT_EQ(d.mul(d.mul(x, y), x), qy);
    }
}

INSTANTIATE_TEST_SUITE_P(AllSix, CompositionAlgebra,
                         ::testing::Values("S1", "S2", "S4", "S8", "S12", "S42"));

class B12barFamily : public ::testing::TestWithParam<int> {};

TEST_P(B12barFamily, AxiomsHoldForEveryLambda) {
    auto s = build_composition("B12bar_lambda", F3(GetParam()));
    EXPECT_EQ(s.even_dim(), 1u);
    EXPECT_EQ(s.odd_dim(), 2u);
    auto v = verify_composition_axioms(s);
    EXPECT_TRUE(v.empty()) << v.front().str();
}

INSTANTIATE_TEST_SUITE_P(Lambda, B12barFamily, ::testing::Values(0, 1, 2));

TEST(Composition, LambdaZeroIsTheParaHurwitzAlgebra) {
    auto a = build_composition("B12bar_lambda", F3(0));
    auto b = build_composition("S12");
    EXPECT_EQ(a.table, b.table);
    EXPECT_EQ(a.bform, b.bform);
}

TEST(Composition, CorruptedProductIsDetected) {
    auto s = build_composition("S4");
    ASSERT_FALSE(is_zero(s.prod(0, 2)));
    s.prod(0, 2) = F3(-1) * s.prod(0, 2);
    EXPECT_FALSE(verify_composition_axioms(s).empty());
}

TEST(Composition, ConjugationFixesOnlyTheUnitLine) {
    auto h = hurwitz_octonions();
    ASSERT_TRUE(h.unit.has_value());
    EXPECT_EQ(conjugation(h, *h.unit), *h.unit);
    for (std::size_t i = 0; i < h.dim; ++i) {
        Vec e = unit(h.dim, i);
        EXPECT_EQ(conjugation(h, conjugation(h, e)), e);
    }
}

TEST(Composition, UnknownNamesAndStrayLambdaAreRejected) {
    EXPECT_THROW(build_composition("S16"), std::invalid_argument);
    EXPECT_THROW(build_composition("S4", F3(1)), std::invalid_argument);
    EXPECT_THROW(build_composition("B12bar_lambda"), std::invalid_argument);
}
