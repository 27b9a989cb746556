#include <gtest/gtest.h>

#include "mss/entries.hpp"
#include "mss/epsilon.hpp"
#include "mss/golden_data.hpp"
#include "mss/golden.hpp"

using namespace mss;

namespace {

const GoldenStore& store() {
    static const GoldenStore s(embedded_golden_files());
    return s;
}

std::vector<unsigned> listed_subsets() {
    std::vector<unsigned> out;
    for (auto& s : store().epsilon().subsets) out.push_back(*parse_subset(s));
    return out;
}

}  // namespace

TEST(Subsets, NamesRoundTrip) {
    for (unsigned s = 0; s < 8; ++s) EXPECT_EQ(parse_subset(subset_name(s)), s);
    EXPECT_EQ(subset_name(0b101), "{1,3}");
    EXPECT_FALSE(parse_subset("{1,4}").has_value());
}

TEST(EpsilonModel, WordsOfAllSubsetsFormABasis) {
    auto g = build_entry("S1S42");
    EpsilonModel m(g);
    std::vector<Vec> all;
    for (unsigned s = 0; s < 8; ++s)
        for (auto& w : m.words(s)) all.push_back(m.embed(s, w));
    EXPECT_EQ(all.size(), g.dim);
    EXPECT_EQ(rank(all, g.dim), g.dim);
}

TEST(EpsilonModel, RejectsOtherEntries) {
    auto g = build_entry("S1S12");
    EXPECT_THROW(EpsilonModel{g}, std::invalid_argument);
}

TEST(EpsilonTable, AllSixtyFourEntriesMatchModThree) {
    auto g = build_entry("S1S42");
    auto eg = store().epsilon();
    auto subsets = listed_subsets();
    ASSERT_EQ(subsets.size(), 8u);
    auto t = epsilon_table(g, subsets);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            ASSERT_TRUE(t.values[i][j].has_value()) << eg.subsets[i] << " " << eg.subsets[j];
            EXPECT_EQ(*t.values[i][j], F3(eg.table[i][j])) << eg.subsets[i] << " " << eg.subsets[j];
        }
}

TEST(EpsilonTable, EmptySetActsWithSignOne) {
    auto g = build_entry("S1S42");
    EpsilonModel m(g);
    for (unsigned s = 0; s < 8; ++s) EXPECT_EQ(m.epsilon(0, s), F3(1)) << subset_name(s);
}

TEST(EpsilonTable, FlippedSignIsDetected) {
    auto g = build_entry("S1S42");
    EpsilonModel m(g);
    // flip one bracket between V({1}) and V({2}) so the constant is no longer uniform
    auto x = m.embed(0b001, "v"), y = m.embed(0b010, "v");
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < g.dim; ++k) {
        if (!x[k].zero()) i = k;
        if (!y[k].zero()) j = k;
    }
    auto bad = corrupt_sign(g, std::min(i, j), std::max(i, j));
    EpsilonModel mb(bad);
    EXPECT_FALSE(mb.epsilon(0b001, 0b010).has_value());
}
