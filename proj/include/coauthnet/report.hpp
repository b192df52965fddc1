#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coauthnet/community.hpp"
#include "coauthnet/corpus.hpp"
#include "coauthnet/graph.hpp"

namespace coauthnet {

/// One line of the collaboration statistics table.
struct StatsRow {
    YearRange range;
    std::size_t nodes = 0;
    std::size_t components = 0;
    std::optional<std::size_t> clusters;
    std::optional<double> mean_distance;
    std::optional<double> modularity;

    friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

/// [first..first], [first..first+1], ..., [first..last].
std::vector<YearRange> cumulative_ranges(int first, int last);

/// Everything computed for one year range.
struct RangeAnalysis {
    std::vector<EdgeRecord> edges;
    Graph graph;
    std::optional<LouvainResult> communities; // absent for an empty graph
    StatsRow row;
};

RangeAnalysis analyze_range(const Corpus& corpus, YearRange range, const LouvainOptions& options = {});
StatsRow stats_row(const Corpus& corpus, YearRange range);

struct Report {
    std::vector<StatsRow> rows;
    std::string text; // aligned plain-text table
    std::string json; // array of rows
};

Report build_report(const Corpus& corpus, int first, int last);

std::string render_table(const std::vector<StatsRow>& rows);
std::string render_json(const std::vector<StatsRow>& rows);

} // namespace coauthnet
