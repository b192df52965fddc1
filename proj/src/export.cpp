#include "coauthnet/export.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "coauthnet/error.hpp"
#include "stats_json.hpp"

namespace coauthnet {

namespace {

std::string hex_color(double r, double g, double b) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = "#";
    for (const double channel : {r, g, b}) {
        const auto v = static_cast<int>(std::lround(std::clamp(channel, 0.0, 1.0) * 255.0));
        out += digits[v >> 4];
        out += digits[v & 0xF];
    }
    return out;
}

std::string hsl_to_hex(double hue, double saturation, double lightness) {
    const double chroma = (1.0 - std::abs(2.0 * lightness - 1.0)) * saturation;
    const double sector = std::fmod(hue, 360.0) / 60.0;
    const double x = chroma * (1.0 - std::abs(std::fmod(sector, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(sector)) {
    case 0: r = chroma; g = x; break;
    case 1: r = x; g = chroma; break;
    case 2: g = chroma; b = x; break;
    case 3: g = x; b = chroma; break;
    case 4: r = x; b = chroma; break;
    default: r = chroma; b = x; break;
    }
    const double m = lightness - chroma / 2.0;
    return hex_color(r + m, g + m, b + m);
}

double round6(double v) {
    return std::round(v * 1e6) / 1e6;
}

[[noreturn]] void mismatch(const std::string& what) {
    throw InputError("export inputs describe different node sets: " + what);
}

} // namespace

std::vector<std::string> assign_colors(std::size_t count) {
    std::vector<std::string> colors;
    colors.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        colors.push_back(hsl_to_hex(static_cast<double>(i) * 360.0 / static_cast<double>(count), 0.65, 0.5));
    return colors;
}

ExportDocument to_document(const Graph& g, const Partition& partition, const LayoutState& layout,
                           const Corpus& corpus, YearRange range, const StatsRow& stats) {
    const auto n = g.node_count();
    if (partition.node_count() != n) mismatch("partition size differs from graph");
    if (layout.positions.size() != n) mismatch("layout size differs from graph");

    const auto edges = derive_edges(corpus.publications, range);
    std::set<std::string> endpoints;
    for (const auto& e : edges) {
        const auto a = g.index_of(e.a);
        const auto b = g.index_of(e.b);
        if (!a || !b) mismatch("edge '" + e.a + "'-'" + e.b + "' is not in the graph");
        if (g.weight(*a, *b) != static_cast<double>(e.weight)) mismatch("weight of '" + e.a + "'-'" + e.b + "'");
        endpoints.insert(e.a);
        endpoints.insert(e.b);
    }
    if (endpoints.size() != n) mismatch("graph nodes without corpus edges");

    ExportDocument doc;
    doc.year_range = range;
    doc.stats = stats;

    for (NodeIndex i = 0; i < n; ++i) {
        const auto* member = corpus.members.find(g.node_id(i));
        if (member == nullptr) mismatch("node '" + g.node_id(i) + "' is not a registered member");
        const auto pos = layout.positions[i];
        doc.nodes.push_back({g.node_id(i), member->name, round6(pos.x), round6(pos.y), partition[i], g.degree(i),
                             g.weighted_degree(i)});
    }
    std::sort(doc.nodes.begin(), doc.nodes.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

    const auto colors = assign_colors(partition.community_count());
    const auto sizes = partition.sizes();
    for (CommunityId c = 0; c < partition.community_count(); ++c) doc.clusters.push_back({c, sizes[c], colors[c]});

    std::set<std::string> cited;
    for (const auto& e : edges) {
        doc.edges.push_back({e.a, e.b, e.weight, e.paper_ids});
        cited.insert(e.paper_ids.begin(), e.paper_ids.end());
    }
    for (const auto& pub : corpus.publications.publications)
        if (cited.contains(pub.paper_id)) doc.papers.push_back({pub.paper_id, pub.year, pub.title, pub.author_ids});
    std::sort(doc.papers.begin(), doc.papers.end(), [](const auto& a, const auto& b) {
        return std::tie(a.year, a.paper_id) < std::tie(b.year, b.paper_id);
    });
    return doc;
}

std::string serialize(const ExportDocument& doc) {
    detail::JsonWriter w;
    w.begin_object();
    w.key("version").value(doc.version);
    w.key("year_range").begin_object().key("from").value(doc.year_range.from).key("to").value(doc.year_range.to);
    w.end_object();

    w.key("nodes").begin_array();
    for (const auto& node : doc.nodes) {
        w.begin_object();
        w.key("id").value(node.id);
        w.key("label").value(node.label);
        w.key("x").fixed(node.x, 6);
        w.key("y").fixed(node.y, 6);
        w.key("cluster").value(static_cast<std::uint64_t>(node.cluster));
        w.key("degree").value(static_cast<std::uint64_t>(node.degree));
        w.key("weighted_degree").value(node.weighted_degree);
        w.end_object();
    }
    w.end_array();

    w.key("edges").begin_array();
    for (const auto& edge : doc.edges) {
        w.begin_object();
        w.key("source").value(edge.source);
        w.key("target").value(edge.target);
        w.key("weight").value(edge.weight);
        w.key("paper_ids").begin_array();
        for (const auto& id : edge.paper_ids) w.value(id);
        w.end_array();
        w.end_object();
    }
    w.end_array();

    w.key("clusters").begin_array();
    for (const auto& cluster : doc.clusters) {
        w.begin_object();
        w.key("id").value(static_cast<std::uint64_t>(cluster.id));
        w.key("size").value(static_cast<std::uint64_t>(cluster.size));
        w.key("color").value(cluster.color);
        w.end_object();
    }
    w.end_array();

    w.key("papers").begin_array();
    for (const auto& paper : doc.papers) {
        w.begin_object();
        w.key("paper_id").value(paper.paper_id);
        w.key("year").value(paper.year);
        w.key("title").value(paper.title);
        w.key("author_ids").begin_array();
        for (const auto& id : paper.author_ids) w.value(id);
        w.end_array();
        w.end_object();
    }
    w.end_array();

    w.key("stats");
    detail::write_stats_row(w, doc.stats);
    w.end_object();
    return w.str();
}

ExportDocument parse_document(std::string_view text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed dataset: ") + e.what());
    }
    try {
        ExportDocument doc;
        doc.version = j.at("version").get<int>();
        if (doc.version != kDatasetVersion)
            throw InputError("unsupported dataset version " + std::to_string(doc.version));
        doc.year_range = {j.at("year_range").at("from").get<int>(), j.at("year_range").at("to").get<int>()};
        for (const auto& n : j.at("nodes"))
            doc.nodes.push_back({n.at("id").get<std::string>(), n.at("label").get<std::string>(),
                                 n.at("x").get<double>(), n.at("y").get<double>(), n.at("cluster").get<CommunityId>(),
                                 n.at("degree").get<std::size_t>(), n.at("weighted_degree").get<double>()});
        for (const auto& e : j.at("edges"))
            doc.edges.push_back({e.at("source").get<std::string>(), e.at("target").get<std::string>(),
                                 e.at("weight").get<unsigned>(), e.at("paper_ids").get<std::vector<std::string>>()});
        for (const auto& c : j.at("clusters"))
            doc.clusters.push_back(
                {c.at("id").get<CommunityId>(), c.at("size").get<std::size_t>(), c.at("color").get<std::string>()});
        for (const auto& p : j.at("papers"))
            doc.papers.push_back({p.at("paper_id").get<std::string>(), p.at("year").get<int>(),
                                  p.at("title").get<std::string>(),
                                  p.at("author_ids").get<std::vector<std::string>>()});

        const auto& s = j.at("stats");
        doc.stats.range = {s.at("range").at("from").get<int>(), s.at("range").at("to").get<int>()};
        doc.stats.nodes = s.at("nodes").get<std::size_t>();
        doc.stats.components = s.at("components").get<std::size_t>();
        if (!s.at("clusters").is_null()) doc.stats.clusters = s.at("clusters").get<std::size_t>();
        if (!s.at("mean_distance").is_null()) doc.stats.mean_distance = s.at("mean_distance").get<double>();
        if (!s.at("modularity").is_null()) doc.stats.modularity = s.at("modularity").get<double>();
        return doc;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed dataset: ") + e.what());
    }
}

std::string dataset_file_name(YearRange range) {
    return "graph-" + std::to_string(range.from) + "-" + std::to_string(range.to) + ".json";
}

std::string serialize(const Manifest& manifest) {
    detail::JsonWriter w;
    w.begin_object();
    w.key("version").value(manifest.version);
    w.key("ranges").begin_array();
    for (const auto& entry : manifest.ranges) {
        w.begin_object();
        w.key("from").value(entry.range.from);
        w.key("to").value(entry.range.to);
        w.key("file").value(entry.file);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out.flush()) throw Error("failed writing " + path.string());
}

} // namespace

Manifest write_outputs(const std::vector<ExportDocument>& documents, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory " + dir.string() + ": " + ec.message());

    std::map<YearRange, const ExportDocument*> by_range;
    for (const auto& doc : documents) {
        if (!by_range.emplace(doc.year_range, &doc).second)
            throw InputError("two datasets for range " + dataset_file_name(doc.year_range));
    }

    Manifest manifest;
    for (const auto& [range, doc] : by_range) {
        const auto file = dataset_file_name(range);
        write_text(dir / file, serialize(*doc));
        manifest.ranges.push_back({range, file});
    }
    write_text(dir / "manifest.json", serialize(manifest));
    return manifest;
}

} // namespace coauthnet
