#include "coauthnet/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "coauthnet/error.hpp"
#include "stats_json.hpp"

namespace coauthnet {

std::vector<YearRange> cumulative_ranges(int first, int last) {
    if (first > last)
        throw InputError("first year " + std::to_string(first) + " is after last year " + std::to_string(last));
    std::vector<YearRange> ranges;
    for (int y = first; y <= last; ++y) ranges.push_back({first, y});
    return ranges;
}

RangeAnalysis analyze_range(const Corpus& corpus, YearRange range, const LouvainOptions& options) {
    RangeAnalysis out;
    out.edges = derive_edges(corpus.publications, range);
    out.graph = build_graph(out.edges);
    out.row.range = range;
    out.row.nodes = out.graph.node_count();
    out.row.components = connected_components(out.graph).size();
    if (out.graph.empty()) return out;

    out.communities = louvain(out.graph, options);
    out.row.clusters = out.communities->partition.community_count();
    out.row.modularity = out.communities->modularity;
    try {
        out.row.mean_distance = mean_distance(out.graph);
    } catch (const UndefinedStatistic&) {
    }
    return out;
}

StatsRow stats_row(const Corpus& corpus, YearRange range) {
    return analyze_range(corpus, range).row;
}

namespace {

constexpr std::array<const char*, 6> kHeaders = {
    "Years included", "Co-authors (nodes)", "Connected components", "Clusters", "Mean distance between nodes",
    "Modularity"};

constexpr const char* kAbsent = "—";

std::size_t display_width(const std::string& s) {
    // Count UTF-8 code points: every byte that is not a continuation byte.
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s(buf);
    if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

} // namespace

std::string render_table(const std::vector<StatsRow>& rows) {
    std::vector<std::array<std::string, 6>> cells;
    for (const auto& r : rows) {
        cells.push_back({std::to_string(r.range.from) + "-" + std::to_string(r.range.to), std::to_string(r.nodes),
                         std::to_string(r.components), r.clusters ? std::to_string(*r.clusters) : kAbsent,
                         r.mean_distance ? fixed(*r.mean_distance, 2) : kAbsent,
                         r.modularity ? fixed(*r.modularity, 3) : kAbsent});
    }

    std::array<std::size_t, 6> width{};
    for (std::size_t c = 0; c < 6; ++c) {
        width[c] = display_width(kHeaders[c]);
        for (const auto& row : cells) width[c] = std::max(width[c], display_width(row[c]));
    }

    std::ostringstream out;
    const auto emit = [&](const auto& line) {
        std::string text;
        for (std::size_t c = 0; c < 6; ++c) {
            const std::string cell = line[c];
            const std::string pad(width[c] - display_width(cell), ' ');
            if (c > 0) text += "  ";
            text += c == 0 ? cell + pad : pad + cell; // years left, numbers right
        }
        while (text.ends_with(' ')) text.pop_back();
        out << text << '\n';
    };
    emit(kHeaders);
    std::size_t total = 2 * 5;
    for (const auto w : width) total += w;
    out << std::string(total, '-') << '\n';
    for (const auto& row : cells) emit(row);
    return out.str();
}

namespace detail {

void write_stats_row(JsonWriter& w, const StatsRow& r) {
    w.begin_object();
    w.key("range").begin_object().key("from").value(r.range.from).key("to").value(r.range.to).end_object();
    w.key("nodes").value(static_cast<std::uint64_t>(r.nodes));
    w.key("components").value(static_cast<std::uint64_t>(r.components));
    w.key("clusters");
    r.clusters ? w.value(static_cast<std::uint64_t>(*r.clusters)) : w.null();
    w.key("mean_distance");
    r.mean_distance ? w.value(*r.mean_distance) : w.null();
    w.key("modularity");
    r.modularity ? w.value(*r.modularity) : w.null();
    w.end_object();
}

} // namespace detail

std::string render_json(const std::vector<StatsRow>& rows) {
    detail::JsonWriter w;
    w.begin_array();
    for (const auto& r : rows) detail::write_stats_row(w, r);
    w.end_array();
    return w.str();
}

Report build_report(const Corpus& corpus, int first, int last) {
    Report report;
    for (const auto range : cumulative_ranges(first, last)) report.rows.push_back(stats_row(corpus, range));
    report.text = render_table(report.rows);
    report.json = render_json(report.rows);
    return report;
}

} // namespace coauthnet
