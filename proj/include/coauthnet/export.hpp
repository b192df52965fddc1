#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "coauthnet/community.hpp"
#include "coauthnet/corpus.hpp"
#include "coauthnet/graph.hpp"
#include "coauthnet/layout.hpp"
#include "coauthnet/report.hpp"

namespace coauthnet {

inline constexpr int kDatasetVersion = 1;

struct ExportNode {
    std::string id;
    std::string label;
    double x = 0;
    double y = 0;
    CommunityId cluster = 0;
    std::size_t degree = 0;
    double weighted_degree = 0;

    friend bool operator==(const ExportNode&, const ExportNode&) = default;
};

struct ExportEdge {
    std::string source;
    std::string target;
    unsigned weight = 0;
    std::vector<std::string> paper_ids;

    friend bool operator==(const ExportEdge&, const ExportEdge&) = default;
};

struct ExportCluster {
    CommunityId id = 0;
    std::size_t size = 0;
    std::string color;

    friend bool operator==(const ExportCluster&, const ExportCluster&) = default;
};

struct ExportPaper {
    std::string paper_id;
    int year = 0;
    std::string title;
    std::vector<std::string> author_ids;

    friend bool operator==(const ExportPaper&, const ExportPaper&) = default;
};

/// The per-range dataset read by the web explorer.
struct ExportDocument {
    int version = kDatasetVersion;
    YearRange year_range;
    std::vector<ExportNode> nodes;       // sorted by id
    std::vector<ExportEdge> edges;       // sorted by (source, target), source < target
    std::vector<ExportCluster> clusters; // by id
    std::vector<ExportPaper> papers;     // papers referenced by edges, by (year, paper_id)
    StatsRow stats;

    friend bool operator==(const ExportDocument&, const ExportDocument&) = default;
};

/// Evenly spaced hues i * 360 / C at 65% saturation and 50% lightness.
std::vector<std::string> assign_colors(std::size_t count);

/// Coordinates are rounded to 6 decimals. Throws InputError when the
/// partition, layout or corpus edges disagree with the graph's nodes.
ExportDocument to_document(const Graph& g, const Partition& partition, const LayoutState& layout,
                           const Corpus& corpus, YearRange range, const StatsRow& stats);

/// Stable key order, 6-decimal coordinates, LF line endings.
std::string serialize(const ExportDocument& doc);
ExportDocument parse_document(std::string_view json);

struct ManifestEntry {
    YearRange range;
    std::string file;
};

struct Manifest {
    int version = kDatasetVersion;
    std::vector<ManifestEntry> ranges; // chronological
};

std::string dataset_file_name(YearRange range);
std::string serialize(const Manifest& manifest);

/// Writes graph-<from>-<to>.json per document plus manifest.json.
Manifest write_outputs(const std::vector<ExportDocument>& documents, const std::filesystem::path& dir);

} // namespace coauthnet
