#include "coauthnet/coauthnet.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "coauthnet/community.hpp"
#include "coauthnet/corpus.hpp"
#include "coauthnet/error.hpp"
#include "coauthnet/graph.hpp"
#include "coauthnet/layout.hpp"
#include "coauthnet/pipeline.hpp"

struct coauthnet_corpus {
    coauthnet::Corpus corpus;
    std::vector<std::string> warnings;
};

struct coauthnet_graph {
    coauthnet::Graph graph;
};

struct coauthnet_partition {
    coauthnet::Partition partition;
};

struct coauthnet_layout {
    coauthnet::LayoutResult result;
};

namespace {

thread_local std::string last_error;

coauthnet_status fail(coauthnet_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <class Fn>
coauthnet_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return COAUTHNET_OK;
    } catch (const coauthnet::InputError& e) {
        return fail(COAUTHNET_ERR_INPUT, e.what());
    } catch (const coauthnet::LayoutError& e) {
        return fail(COAUTHNET_ERR_INPUT, e.what());
    } catch (const coauthnet::UndefinedStatistic& e) {
        return fail(COAUTHNET_ERR_UNDEFINED, e.what());
    } catch (const std::exception& e) {
        return fail(COAUTHNET_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(COAUTHNET_ERR_INTERNAL, "unknown error");
    }
}

coauthnet::LayoutParams to_params(const coauthnet_layout_params& p) {
    coauthnet::LayoutParams out;
    out.attraction = p.attraction;
    out.repulsion = p.repulsion;
    out.iterations = p.iterations;
    out.step = p.step;
    out.max_displacement = p.max_displacement;
    out.weight_exponent = p.weight_exponent;
    out.seed = p.seed;
    out.threads = p.threads;
    return out;
}

char* duplicate(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

#define COAUTHNET_REQUIRE(ptr)                                                                                  \
    do {                                                                                                        \
        if ((ptr) == nullptr) return fail(COAUTHNET_ERR_INPUT, "argument '" #ptr "' is null");                   \
    } while (0)

} // namespace

extern "C" {

const char* coauthnet_version(void) {
    return "1.0.0";
}

const char* coauthnet_last_error(void) {
    return last_error.c_str();
}

void coauthnet_string_free(char* s) {
    std::free(s);
}

coauthnet_status coauthnet_corpus_load(const char* members_path, const char* papers_path, coauthnet_corpus** out) {
    COAUTHNET_REQUIRE(members_path);
    COAUTHNET_REQUIRE(papers_path);
    COAUTHNET_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<coauthnet_corpus>();
        handle->corpus = coauthnet::load_corpus(members_path, papers_path);
        for (const auto& w : handle->corpus.publications.warnings)
            handle->warnings.push_back(w.file + ":" + std::to_string(w.line) + ": " + w.message);
        *out = handle.release();
    });
}

void coauthnet_corpus_free(coauthnet_corpus* corpus) {
    delete corpus;
}

size_t coauthnet_corpus_member_count(const coauthnet_corpus* corpus) {
    return corpus ? corpus->corpus.members.size() : 0;
}

size_t coauthnet_corpus_paper_count(const coauthnet_corpus* corpus) {
    return corpus ? corpus->corpus.publications.publications.size() : 0;
}

size_t coauthnet_corpus_edgeless_paper_count(const coauthnet_corpus* corpus) {
    if (!corpus) return 0;
    size_t count = 0;
    for (const auto& pub : corpus->corpus.publications.publications)
        if (pub.author_ids.size() < 2) ++count;
    return count;
}

size_t coauthnet_corpus_warning_count(const coauthnet_corpus* corpus) {
    return corpus ? corpus->warnings.size() : 0;
}

const char* coauthnet_corpus_warning(const coauthnet_corpus* corpus, size_t index) {
    if (!corpus || index >= corpus->warnings.size()) return nullptr;
    return corpus->warnings[index].c_str();
}

coauthnet_status coauthnet_corpus_year_bounds(const coauthnet_corpus* corpus, int* first, int* last) {
    COAUTHNET_REQUIRE(corpus);
    COAUTHNET_REQUIRE(first);
    COAUTHNET_REQUIRE(last);
    return guarded([&] {
        const auto bounds = corpus->corpus.year_bounds();
        *first = bounds.from;
        *last = bounds.to;
    });
}

coauthnet_status coauthnet_graph_build(const coauthnet_corpus* corpus, int from, int to, coauthnet_graph** out) {
    COAUTHNET_REQUIRE(corpus);
    COAUTHNET_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        const auto edges = coauthnet::derive_edges(corpus->corpus.publications, {from, to});
        *out = new coauthnet_graph{coauthnet::build_graph(edges)};
    });
}

void coauthnet_graph_free(coauthnet_graph* graph) {
    delete graph;
}

size_t coauthnet_graph_node_count(const coauthnet_graph* graph) {
    return graph ? graph->graph.node_count() : 0;
}

size_t coauthnet_graph_edge_count(const coauthnet_graph* graph) {
    return graph ? graph->graph.edge_count() : 0;
}

double coauthnet_graph_total_weight(const coauthnet_graph* graph) {
    return graph ? graph->graph.total_weight() : 0.0;
}

const char* coauthnet_graph_node_id(const coauthnet_graph* graph, size_t index) {
    if (!graph || index >= graph->graph.node_count()) return nullptr;
    return graph->graph.node_id(static_cast<coauthnet::NodeIndex>(index)).c_str();
}

coauthnet_status coauthnet_graph_node_metrics(const coauthnet_graph* graph, size_t index, size_t* degree,
                                              double* weighted_degree) {
    COAUTHNET_REQUIRE(graph);
    return guarded([&] {
        if (index >= graph->graph.node_count())
            throw coauthnet::InputError("node index " + std::to_string(index) + " out of range");
        const auto m = coauthnet::node_metrics(graph->graph, static_cast<coauthnet::NodeIndex>(index));
        if (degree) *degree = m.degree;
        if (weighted_degree) *weighted_degree = m.weighted_degree;
    });
}

size_t coauthnet_graph_component_count(const coauthnet_graph* graph) {
    return graph ? coauthnet::connected_components(graph->graph).size() : 0;
}

coauthnet_status coauthnet_graph_mean_distance(const coauthnet_graph* graph, double* out) {
    COAUTHNET_REQUIRE(graph);
    COAUTHNET_REQUIRE(out);
    return guarded([&] { *out = coauthnet::mean_distance(graph->graph); });
}

coauthnet_status coauthnet_louvain(const coauthnet_graph* graph, coauthnet_partition** out) {
    COAUTHNET_REQUIRE(graph);
    COAUTHNET_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new coauthnet_partition{coauthnet::louvain(graph->graph).partition}; });
}

void coauthnet_partition_free(coauthnet_partition* partition) {
    delete partition;
}

size_t coauthnet_partition_community_count(const coauthnet_partition* partition) {
    return partition ? partition->partition.community_count() : 0;
}

coauthnet_status coauthnet_partition_community_of(const coauthnet_partition* partition, size_t node,
                                                  uint32_t* community) {
    COAUTHNET_REQUIRE(partition);
    COAUTHNET_REQUIRE(community);
    if (node >= partition->partition.node_count())
        return fail(COAUTHNET_ERR_INPUT, "node index " + std::to_string(node) + " out of range");
    *community = partition->partition[static_cast<coauthnet::NodeIndex>(node)];
    return COAUTHNET_OK;
}

coauthnet_status coauthnet_modularity(const coauthnet_graph* graph, const coauthnet_partition* partition,
                                      double* out) {
    COAUTHNET_REQUIRE(graph);
    COAUTHNET_REQUIRE(partition);
    COAUTHNET_REQUIRE(out);
    return guarded([&] { *out = coauthnet::modularity(graph->graph, partition->partition); });
}

void coauthnet_layout_params_default(coauthnet_layout_params* params) {
    if (!params) return;
    const coauthnet::LayoutParams d;
    *params = {d.attraction, d.repulsion, d.iterations, d.step, d.max_displacement, d.weight_exponent, d.seed,
               d.threads};
}

coauthnet_status coauthnet_layout_run(const coauthnet_graph* graph, const coauthnet_layout_params* params,
                                      coauthnet_layout** out) {
    COAUTHNET_REQUIRE(graph);
    COAUTHNET_REQUIRE(params);
    COAUTHNET_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new coauthnet_layout{coauthnet::run_layout(graph->graph, to_params(*params))}; });
}

void coauthnet_layout_free(coauthnet_layout* layout) {
    delete layout;
}

coauthnet_status coauthnet_layout_position(const coauthnet_layout* layout, size_t node, double* x, double* y) {
    COAUTHNET_REQUIRE(layout);
    COAUTHNET_REQUIRE(x);
    COAUTHNET_REQUIRE(y);
    const auto& positions = layout->result.state.positions;
    if (node >= positions.size())
        return fail(COAUTHNET_ERR_INPUT, "node index " + std::to_string(node) + " out of range");
    *x = positions[node].x;
    *y = positions[node].y;
    return COAUTHNET_OK;
}

double coauthnet_layout_final_mean_force(const coauthnet_layout* layout) {
    return layout ? layout->result.final_mean_force : 0.0;
}

void coauthnet_analyze_config_default(coauthnet_analyze_config* config) {
    if (!config) return;
    *config = {};
    coauthnet_layout_params_default(&config->layout);
}

coauthnet_status coauthnet_analyze(const coauthnet_analyze_config* config, char** report_text) {
    COAUTHNET_REQUIRE(config);
    COAUTHNET_REQUIRE(config->members_path);
    COAUTHNET_REQUIRE(config->papers_path);
    COAUTHNET_REQUIRE(config->out_dir);
    if (report_text) *report_text = nullptr;
    return guarded([&] {
        coauthnet::AnalyzeConfig cfg;
        cfg.members = config->members_path;
        cfg.papers = config->papers_path;
        cfg.out_dir = config->out_dir;
        if (config->has_from) cfg.from = config->from;
        if (config->has_to) cfg.to = config->to;
        cfg.layout = to_params(config->layout);
        const auto result = coauthnet::analyze(cfg);
        if (report_text) *report_text = duplicate(result.report.text);
    });
}

} // extern "C"
