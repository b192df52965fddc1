#include <gtest/gtest.h>

#include <json.hpp>

#include "coauthnet/error.hpp"
#include "coauthnet/report.hpp"
#include "oracles.hpp"

using namespace coauthnet;

namespace {

Corpus fixture() {
    return load_corpus(COAUTHNET_FIXTURES "/tiny_members.csv", COAUTHNET_FIXTURES "/tiny_papers.csv");
}

} // namespace

TEST(CumulativeRanges, Examples) {
    EXPECT_EQ(cumulative_ranges(2011, 2013), (std::vector<YearRange>{{2011, 2011}, {2011, 2012}, {2011, 2013}}));
    EXPECT_EQ(cumulative_ranges(2011, 2011), (std::vector<YearRange>{{2011, 2011}}));
    EXPECT_THROW(cumulative_ranges(2012, 2011), InputError);
}

// Expected rows were computed with exhaustive partition search and BFS on
// the fixture (exact fractions 24/49 and 47/128 for modularity, 9/5 for the
// bridged mean distance).
TEST(StatsRow, FixtureMatchesFrozenOracleValues) {
    const auto corpus = fixture();
    const auto r2011 = stats_row(corpus, {2011, 2011});
    EXPECT_EQ(r2011.nodes, 3u);
    EXPECT_EQ(r2011.components, 1u);
    EXPECT_EQ(r2011.clusters, 1u);
    EXPECT_DOUBLE_EQ(*r2011.mean_distance, 1.0);
    EXPECT_NEAR(*r2011.modularity, 0.0, 1e-12);

    const auto r2012 = stats_row(corpus, {2011, 2012});
    EXPECT_EQ(r2012.nodes, 6u);
    EXPECT_EQ(r2012.components, 2u);
    EXPECT_EQ(r2012.clusters, 2u);
    EXPECT_DOUBLE_EQ(*r2012.mean_distance, 1.0);
    EXPECT_NEAR(*r2012.modularity, 24.0 / 49.0, 1e-12);

    const auto r2013 = stats_row(corpus, {2011, 2013});
    EXPECT_EQ(r2013.nodes, 6u);
    EXPECT_EQ(r2013.components, 1u);
    EXPECT_EQ(r2013.clusters, 2u);
    EXPECT_DOUBLE_EQ(*r2013.mean_distance, 9.0 / 5.0);
    EXPECT_NEAR(*r2013.modularity, 47.0 / 128.0, 1e-12);
}

TEST(StatsRow, EmptyCorpusHasAbsentStatistics) {
    const Corpus empty;
    const auto row = stats_row(empty, {2011, 2012});
    EXPECT_EQ(row.nodes, 0u);
    EXPECT_EQ(row.components, 0u);
    EXPECT_FALSE(row.clusters);
    EXPECT_FALSE(row.mean_distance);
    EXPECT_FALSE(row.modularity);
}

TEST(BuildReport, RowsAndRendering) {
    const auto corpus = fixture();
    const auto report = build_report(corpus, 2011, 2013);
    ASSERT_EQ(report.rows.size(), 3u);
    EXPECT_EQ(report.rows[2].range, (YearRange{2011, 2013}));
    EXPECT_EQ(report.text, build_report(corpus, 2011, 2013).text);

    EXPECT_NE(report.text.find("Years included"), std::string::npos);
    EXPECT_NE(report.text.find("Mean distance between nodes"), std::string::npos);
    EXPECT_NE(report.text.find("2011-2013"), std::string::npos);
    EXPECT_NE(report.text.find("0.367"), std::string::npos);
    EXPECT_NE(report.text.find("1.80"), std::string::npos);

    const auto json = nlohmann::json::parse(report.json);
    ASSERT_EQ(json.size(), 3u);
    EXPECT_EQ(json[1]["components"], 2);
    EXPECT_EQ(json[1]["range"]["to"], 2012);
    EXPECT_EQ(json[2]["modularity"].get<double>(), report.rows[2].modularity.value());
}

TEST(BuildReport, SingleYearCorpus) {
    auto corpus = fixture();
    EXPECT_EQ(build_report(corpus, 2012, 2012).rows.size(), 1u);
}

TEST(RenderTable, AbsentValuesUseDash) {
    StatsRow row;
    row.range = {2020, 2020};
    const auto text = render_table({row});
    EXPECT_NE(text.find("—"), std::string::npos);
    const auto json = nlohmann::json::parse(render_json({row}));
    EXPECT_TRUE(json[0]["mean_distance"].is_null());
    EXPECT_TRUE(json[0]["modularity"].is_null());
    EXPECT_TRUE(json[0]["clusters"].is_null());
}

TEST(RenderTable, ColumnsAlign) {
    StatsRow a;
    a.range = {2011, 2011};
    a.nodes = 66;
    a.components = 22;
    a.clusters = 22;
    a.mean_distance = 1.49;
    a.modularity = 0.905;
    StatsRow b = a;
    b.range = {2011, 2016};
    b.nodes = 231;
    b.mean_distance = 5.97;
    const auto text = render_table({a, b});
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (auto nl = text.find('\n'); nl != std::string::npos; start = nl + 1, nl = text.find('\n', start))
        lines.push_back(text.substr(start, nl - start));
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_NE(lines[2].find("0.905"), std::string::npos);
    EXPECT_NE(lines[2].find("1.49"), std::string::npos);
    // right-aligned modularity column ends at the same place in every row
    EXPECT_EQ(lines[2].size(), lines[3].size());
}

// Node sets only grow across cumulative rows.
TEST(BuildReport, NodesAccumulate) {
    const auto corpus = fixture();
    const auto ranges = cumulative_ranges(2011, 2013);
    std::vector<std::string> previous;
    for (const auto& r : ranges) {
        const auto analysis = analyze_range(corpus, r);
        for (const auto& id : previous) EXPECT_TRUE(analysis.graph.index_of(id).has_value());
        previous = analysis.graph.node_ids();
        if (analysis.communities)
            EXPECT_NEAR(*analysis.row.modularity, modularity(analysis.graph, analysis.communities->partition), 1e-12);
    }
}
