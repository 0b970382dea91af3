#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "tilinglab/error.hpp"
#include "tilinglab/report.hpp"

using namespace tilinglab;
using nlohmann::json;

namespace {

std::string config_error_of(const json& config) {
    try {
        run_experiment(config);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ConfigError);
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Report, TemperleyRun) {
    auto r = run_experiment({{"experiment", "temperley"}, {"parameters", {{"grids", {"2x2", "3x3", "3x4"}}}}});
    ASSERT_EQ(r.rows.size(), 3u);
    EXPECT_TRUE(r.all_pass());
    for (const auto& row : r.rows) EXPECT_TRUE(row["equal"].get<bool>());
    EXPECT_EQ(r.rows[1]["trees"], "192");
}

TEST(Report, RectExpansionTable) {
    auto r = run_experiment({{"experiment", "rect-expansion"}, {"parameters", {{"sizes", {32, 48, 64}}}}});
    EXPECT_EQ(r.rows.size(), 9u);
    EXPECT_TRUE(r.all_pass());
    for (const auto& row : r.rows) {
        EXPECT_TRUE(row.contains("method"));
        EXPECT_TRUE(row.contains("error_bound"));
    }
}

TEST(Report, JsonRoundTrip) {
    auto r = run_experiment({{"experiment", "temperley"}, {"parameters", {{"grids", {"2x2", "2x3"}}}}});
    std::string a = report_render(r, ReportFormat::Json);
    std::string b = report_render(report_from_json(a), ReportFormat::Json);
    EXPECT_EQ(a, b);
}

TEST(Report, CsvAndMarkdown) {
    auto r = run_experiment({{"experiment", "rect-expansion"}, {"parameters", {{"sizes", {16, 24}}}}});
    std::string csv = report_render(r, ReportFormat::Csv);
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), r.rows.size() + 1);
    std::string md = report_render(r, ReportFormat::Markdown);
    EXPECT_NE(md.find("**1/1 criteria passed**"), std::string::npos);
    EXPECT_NE(md.find("| m | n |"), std::string::npos);
}

TEST(Report, ConfigErrorsNameTheField) {
    EXPECT_NE(config_error_of({{"experiment", "rect-expansion"}, {"parameters", {{"sizes", {16, "x"}}}}})
                  .find("parameters.sizes[1]"),
              std::string::npos);
    EXPECT_NE(config_error_of({{"experiment", "nope"}}).find("experiment"), std::string::npos);
    EXPECT_NE(config_error_of({{"experiment", "lerw-exponent"}, {"parameters", {{"sizes", {8, 16, 32, 64}}}}})
                  .find("parameters.seed"),
              std::string::npos);
    EXPECT_NE(config_error_of({{"experiment", "temperley"}, {"parameters", {{"grids", json::array()}}}})
                  .find("parameters.grids"),
              std::string::npos);
    EXPECT_NE(config_error_of({{"experiment", "count"}, {"parameters", {{"regions", {"/nonexistent/region.txt"}}}}})
                  .find("parameters.regions"),
              std::string::npos);
    EXPECT_NE(config_error_of({{"experiment", "temperley"}, {"extra", 1}}).find("extra"), std::string::npos);
    EXPECT_THROW(parse_report_format("xml"), Error);
}

TEST(Report, StochasticRunsReproduce) {
    json c{{"experiment", "lerw-exponent"},
           {"parameters", {{"sizes", {8, 16, 32, 64}}, {"samples", 50}, {"bootstrap", 50}, {"seed", 3}}}};
    auto a = run_experiment(c), b = run_experiment(c);
    EXPECT_EQ(a.rows, b.rows);
}

TEST(Report, FractionParameters) {
    auto r = run_experiment(
        {{"experiment", "ratio"}, {"parameters", {{"alphas", {0.5, 1.0}}, {"betas", {0.0}}, {"eps", {"1/8", "1/16"}}}}});
    EXPECT_EQ(r.rows.size(), 5u);
    EXPECT_DOUBLE_EQ(r.rows[0]["eps"].get<double>(), 0.125);
}

TEST(Report, CountWithEnumeration) {
    auto r = run_experiment(
        {{"experiment", "count"}, {"parameters", {{"region_text", "###\n###\n"}, {"enumerate", true}}}});
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_EQ(r.rows[0]["count"], "3");
    EXPECT_TRUE(r.all_pass());
}
