#include <random>
#include <string>
#include <variant>

#include <gtest/gtest.h>

#include "bpsdt/io.hpp"
#include "test_support.hpp"

using namespace bpsdt;
using bpsdt::testing::rationals;

TEST(ParseSeries, LocalGw) {
    const auto data = io::parse_series(R"({"kind": "local_gw", "w": 3, "coeffs": ["3", "-45/8"]})");
    ASSERT_TRUE(std::holds_alternative<GwVector>(data));
    const auto& v = std::get<GwVector>(data);
    EXPECT_EQ(v.kind, Kind::local);
    EXPECT_EQ(v.geometry.w, 3u);
    EXPECT_TRUE(v.geometry.primitive_class);
    EXPECT_EQ(v.entries, rationals({"3", "-45/8"}));
}

TEST(ParseSeries, Euler) {
    const auto data = io::parse_series(R"({"kind": "euler", "m": 1, "coeffs": ["1", "1", "1"]})");
    ASSERT_TRUE(std::holds_alternative<EulerSeries>(data));
    EXPECT_EQ(std::get<EulerSeries>(data), (EulerSeries{1, {1, 1, 1}}));
}

TEST(ParseSeries, KindsAndFlags) {
    auto data = io::parse_series(R"({"kind": "relative_bps", "w": 2, "primitive": false, "coeffs": ["1"]})");
    EXPECT_EQ(io::series_kind(data), io::SeriesKind::relative_bps);
    EXPECT_FALSE(std::get<BpsVector>(data).geometry.primitive_class);
    data = io::parse_series(R"({"kind": "relative_gw", "w": 2, "source": "synthetic", "coeffs": ["1"]})");
    EXPECT_EQ(io::series_kind(data), io::SeriesKind::relative_gw);
    data = io::parse_series(R"({"kind": "local_bps", "w": 2, "coeffs": ["1"]})");
    EXPECT_EQ(io::series_kind(data), io::SeriesKind::local_bps);
}

namespace {

std::string error_of(const std::string& text) {
    try {
        io::parse_series(text, "f.json");
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(ParseSeries, ErrorsCarryFieldContext) {
    EXPECT_NE(error_of(R"({"kind": "local_gw", "w": 3, "coeffs": ["1/0"]})").find("coeffs[0]"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "local_gw", "w": 3, "coeffs": ["1", "x"]})").find("coeffs[1]"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "local_gw", "w": 3, "coeffs": [1.5]})").find("quoted"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "global_gw", "w": 3, "coeffs": ["1"]})").find("kind"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "local_gw", "coeffs": ["1"]})").find("'w'"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "euler", "coeffs": ["1"]})").find("'m'"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "euler", "m": 1, "coeffs": ["2"]})").find("chi_0"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "euler", "m": 1, "coeffs": ["1", "1/2"]})").find("coeffs[1]"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "local_gw", "w": 0, "coeffs": ["1"]})").find("positive"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "local_gw", "w": -2, "coeffs": ["1"]})").find("'w'"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "local_gw", "w": 3, "m": 1, "coeffs": ["1"]})").find("'m'"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "local_gw", "w": 3, "coefs": ["1"]})").find("unknown field"), std::string::npos);
    EXPECT_NE(error_of("{\"kind\": \"local_gw\",\n \"w\": 3,\n \"coeffs\": [\"1\"").find("line"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "local_gw", "w": 3, "coeffs": []})").find("empty"), std::string::npos);
}

TEST(ParseSeries, SampleFile) {
    const auto data = io::read_series_file(BPSDT_DATA_DIR "/local_p2.json");
    EXPECT_EQ(std::get<GwVector>(data).entries, rationals({"3", "-45/8", "244/9"}));
    EXPECT_THROW(io::read_series_file(BPSDT_DATA_DIR "/does_not_exist.json"), InvalidInput);
}

TEST(Emit, VectorCsv) {
    EXPECT_EQ(io::emit_table(io::to_table(rationals({"9", "135/4"})), io::Format::csv), "1,2\n9,135/4\n");
}

TEST(Emit, DtTableCsv) {
    const std::string csv = io::emit(dt_table(2, 5), io::Format::csv);
    EXPECT_EQ(csv, "m,1,2,3,4,5\n0,1,0,0,0,0\n1,1,0,0,0,0\n2,1,1,1,2,5\n");
    EXPECT_EQ(io::emit(DtTable{}, io::Format::csv), "m\n");
}

TEST(Emit, EmptyTableIsHeaderOnly) {
    EXPECT_EQ(io::emit_table(io::Table{{"a", "b"}, {}}, io::Format::csv), "a,b\n");
}

TEST(Emit, CsvQuoting) {
    EXPECT_EQ(io::emit_table(io::Table{{"x"}, {{"a,b"}}}, io::Format::csv), "x\n\"a,b\"\n");
}

TEST(Emit, StructuredMirrorsInput) {
    const BpsVector v{Kind::relative, {3, true}, rationals({"9", "27"})};
    EXPECT_EQ(io::emit(v, io::Format::structured),
              "{\n  \"kind\": \"relative_bps\",\n  \"w\": 3,\n  \"primitive\": true,\n  \"coeffs\": [\n    \"9\",\n"
              "    \"27\"\n  ]\n}\n");
}

TEST(Emit, ParseEmitParseIsIdentity) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const auto coeffs = bpsdt::testing::random_rationals(rng, 1 + trial % 10, 100000);
        const io::SeriesData original =
            trial % 2 ? io::SeriesData{GwVector{Kind::relative, {static_cast<std::uint32_t>(1 + trial % 4), trial % 3 != 0}, coeffs}}
                      : io::SeriesData{BpsVector{Kind::local, {2, true}, coeffs}};
        const auto text = io::emit(original, io::Format::structured);
        const auto reparsed = io::parse_series(text);
        ASSERT_EQ(reparsed, original);
        ASSERT_EQ(io::emit(reparsed, io::Format::structured), text);
    }
    const io::SeriesData euler = EulerSeries{2, {1, 1, 2, 5}};
    EXPECT_EQ(io::parse_series(io::emit(euler, io::Format::structured)), euler);
}

TEST(Emit, PipelineCsv) {
    const GwVector sample{Kind::local, {3, true}, rationals({"3", "-45/8", "244/9"})};
    EXPECT_EQ(io::emit(run_pipeline(sample), io::Format::csv),
              "stage,integral,1,2,3\n"
              "local_gw,,3,-45/8,244/9\n"
              "local_bps,pass,3,-6,27\n"
              "relative_bps,pass,9,27,234\n"
              "relative_gw,,9,135/4,244\n");
}

TEST(Emit, IntegralityCsv) {
    EXPECT_EQ(io::emit(integrality_report(rationals({"1/2", "1", "3/2"})), io::Format::csv),
              "pass,non_integral\nfalse,1 3\n");
}
