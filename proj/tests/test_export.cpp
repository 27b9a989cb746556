#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mss/export.hpp"

using namespace mss;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

class ExportEntry : public ::testing::TestWithParam<std::string> {};

TEST_P(ExportEntry, ScTextRoundTripIsByteExact) {
    auto g = build_entry(GetParam());
    auto text = export_string(g);
    auto parsed = parse_sc_text(text);
    EXPECT_EQ(parsed.g.dim, g.dim);
    EXPECT_EQ(parsed.g.parity, g.parity);
    EXPECT_EQ(parsed.g.deg, g.deg);
    EXPECT_EQ(bracket_differences(parsed.g, g), 0u);
    EXPECT_EQ(export_string(parsed.g), text);
}

TEST_P(ExportEntry, OutputIsDeterministic) {
    auto a = export_string(build_entry(GetParam()));
    auto b = export_string(build_entry(GetParam()));
    EXPECT_EQ(a, b);
    auto ja = export_string(build_entry(GetParam()), ExportFormat::json);
    auto jb = export_string(build_entry(GetParam()), ExportFormat::json);
    EXPECT_EQ(ja, jb);
}

TEST_P(ExportEntry, JsonCarriesTheSameBrackets) {
    auto g = build_entry(GetParam());
    auto j = nlohmann::json::parse(export_string(g, ExportFormat::json));
    EXPECT_EQ(j.at("dim").get<std::size_t>(), g.dim);
    EXPECT_EQ(j.at("basis").size(), g.dim);
    std::size_t lines = 0;
    auto text = export_string(g);
    for (std::size_t p = 0; (p = text.find("\nC ", p)) != std::string::npos; ++p) ++lines;
    EXPECT_EQ(j.at("brackets").size(), lines);
    for (auto& b : j.at("brackets")) {
        std::size_t i = b[0], jj = b[1], k = b[2];
        int c = b[3];
        EXPECT_LE(i, jj);
        EXPECT_EQ(basis_bracket(g, i, jj)[k], F3(c));
    }
}

INSTANTIATE_TEST_SUITE_P(All, ExportEntry, ::testing::ValuesIn(all_entries()));

TEST(Export, FrozenScTextForS1S12) {
    auto want = read_file(std::string(MSS_TEST_DATA) + "/S1S12.mss");
    ASSERT_FALSE(want.empty());
    EXPECT_EQ(export_string(build_entry("S1S12")), want);
}

TEST(Export, HeaderLine) {
    auto text = export_string(build_entry("S1S12"));
    EXPECT_EQ(text.substr(0, text.find('\n')), "MSS v1 S1 S12 p=3 dim=14 even=6 odd=8 rank=3");
    auto d = export_string(build_entry("d21"));
    EXPECT_EQ(d.substr(0, d.find('\n')), "MSS v1 d21 - p=3 dim=17 even=9 odd=8 rank=3");
}

TEST(Export, FormatNames) {
    EXPECT_EQ(parse_format("sc-text"), ExportFormat::sc_text);
    EXPECT_EQ(parse_format("json"), ExportFormat::json);
    EXPECT_FALSE(parse_format("yaml").has_value());
}

TEST(Export, MalformedInputIsRejected) {
    auto good = export_string(build_entry("S1S1"));
    EXPECT_THROW(parse_sc_text(""), std::runtime_error);
    EXPECT_THROW(parse_sc_text("XYZ v1 S1 S1 p=3 dim=3 even=3 odd=0 rank=2\n"), std::runtime_error);
    EXPECT_THROW(parse_sc_text("MSS v1 S1 S1 p=5 dim=3 even=3 odd=0 rank=2\n"), std::runtime_error);
    // truncated basis
    EXPECT_THROW(parse_sc_text(good.substr(0, good.find("B 2"))), std::runtime_error);
    // lower-triangular bracket line
    EXPECT_THROW(parse_sc_text(good + "C 2 1 0 1\n"), std::runtime_error);
    // coefficient out of range
    EXPECT_THROW(parse_sc_text(good + "C 0 1 0 3\n"), std::runtime_error);
    EXPECT_THROW(parse_sc_text(good + "Q 1\n"), std::runtime_error);
    EXPECT_THROW(parse_sc_text(good + "C 0 1 9 1\n"), std::runtime_error);
}

TEST(Export, ParityCountsMustMatchTheHeader) {
    auto text = export_string(build_entry("S1S12"));
    auto pos = text.find("even=6");
    text.replace(pos, 6, "even=7");
    EXPECT_THROW(parse_sc_text(text), std::runtime_error);
}
