/*
 * coauthnet C API.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions that can fail return a
 * coauthnet_status; on failure a description is available from
 * coauthnet_last_error() on the same thread until the next failing call.
 * Node indices follow the graph's canonical order (lexicographic member id).
 */
#ifndef COAUTHNET_H
#define COAUTHNET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COAUTHNET_BUILDING_LIBRARY)
#    define COAUTHNET_API __declspec(dllexport)
#  else
#    define COAUTHNET_API __declspec(dllimport)
#  endif
#else
#  define COAUTHNET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 0-2 double as process exit codes for the command-line tool. */
typedef enum coauthnet_status {
    COAUTHNET_OK = 0,
    COAUTHNET_ERR_INPUT = 1,     /* bad file, id, argument or range */
    COAUTHNET_ERR_INTERNAL = 2,  /* unexpected failure, including I/O */
    COAUTHNET_ERR_UNDEFINED = 3  /* statistic has no value on this graph */
} coauthnet_status;

typedef struct coauthnet_corpus coauthnet_corpus;
typedef struct coauthnet_graph coauthnet_graph;
typedef struct coauthnet_partition coauthnet_partition;
typedef struct coauthnet_layout coauthnet_layout;

typedef struct coauthnet_layout_params {
    double attraction;
    double repulsion;
    uint32_t iterations;
    double step;
    double max_displacement;
    double weight_exponent;
    uint64_t seed;
    uint32_t threads;
} coauthnet_layout_params;

typedef struct coauthnet_analyze_config {
    const char* members_path;
    const char* papers_path;
    const char* out_dir;
    int has_from;
    int from;
    int has_to;
    int to;
    coauthnet_layout_params layout;
} coauthnet_analyze_config;

COAUTHNET_API const char* coauthnet_version(void);
COAUTHNET_API const char* coauthnet_last_error(void);
/* Releases strings returned through char** out-parameters. */
COAUTHNET_API void coauthnet_string_free(char* s);

/* corpus */
COAUTHNET_API coauthnet_status coauthnet_corpus_load(const char* members_path, const char* papers_path,
                                                     coauthnet_corpus** out);
COAUTHNET_API void coauthnet_corpus_free(coauthnet_corpus* corpus);
COAUTHNET_API size_t coauthnet_corpus_member_count(const coauthnet_corpus* corpus);
COAUTHNET_API size_t coauthnet_corpus_paper_count(const coauthnet_corpus* corpus);
/* Papers with fewer than two distinct authors; they add no edges. */
COAUTHNET_API size_t coauthnet_corpus_edgeless_paper_count(const coauthnet_corpus* corpus);
COAUTHNET_API size_t coauthnet_corpus_warning_count(const coauthnet_corpus* corpus);
/* "file:line: message"; NULL when out of range. Owned by the corpus. */
COAUTHNET_API const char* coauthnet_corpus_warning(const coauthnet_corpus* corpus, size_t index);
COAUTHNET_API coauthnet_status coauthnet_corpus_year_bounds(const coauthnet_corpus* corpus, int* first,
                                                            int* last);

/* graph */
COAUTHNET_API coauthnet_status coauthnet_graph_build(const coauthnet_corpus* corpus, int from, int to,
                                                     coauthnet_graph** out);
COAUTHNET_API void coauthnet_graph_free(coauthnet_graph* graph);
COAUTHNET_API size_t coauthnet_graph_node_count(const coauthnet_graph* graph);
COAUTHNET_API size_t coauthnet_graph_edge_count(const coauthnet_graph* graph);
COAUTHNET_API double coauthnet_graph_total_weight(const coauthnet_graph* graph);
/* NULL when out of range. Owned by the graph. */
COAUTHNET_API const char* coauthnet_graph_node_id(const coauthnet_graph* graph, size_t index);
COAUTHNET_API coauthnet_status coauthnet_graph_node_metrics(const coauthnet_graph* graph, size_t index,
                                                            size_t* degree, double* weighted_degree);
COAUTHNET_API size_t coauthnet_graph_component_count(const coauthnet_graph* graph);
COAUTHNET_API coauthnet_status coauthnet_graph_mean_distance(const coauthnet_graph* graph, double* out);

/* communities */
COAUTHNET_API coauthnet_status coauthnet_louvain(const coauthnet_graph* graph, coauthnet_partition** out);
COAUTHNET_API void coauthnet_partition_free(coauthnet_partition* partition);
COAUTHNET_API size_t coauthnet_partition_community_count(const coauthnet_partition* partition);
COAUTHNET_API coauthnet_status coauthnet_partition_community_of(const coauthnet_partition* partition,
                                                                size_t node, uint32_t* community);
COAUTHNET_API coauthnet_status coauthnet_modularity(const coauthnet_graph* graph,
                                                    const coauthnet_partition* partition, double* out);

/* layout */
COAUTHNET_API void coauthnet_layout_params_default(coauthnet_layout_params* params);
COAUTHNET_API coauthnet_status coauthnet_layout_run(const coauthnet_graph* graph,
                                                    const coauthnet_layout_params* params,
                                                    coauthnet_layout** out);
COAUTHNET_API void coauthnet_layout_free(coauthnet_layout* layout);
COAUTHNET_API coauthnet_status coauthnet_layout_position(const coauthnet_layout* layout, size_t node, double* x,
                                                         double* y);
COAUTHNET_API double coauthnet_layout_final_mean_force(const coauthnet_layout* layout);

/* pipeline */
COAUTHNET_API void coauthnet_analyze_config_default(coauthnet_analyze_config* config);
/* Runs every cumulative range, writes datasets, manifest and reports into
 * config->out_dir. On success *report_text (if non-NULL) receives the
 * rendered table; release it with coauthnet_string_free. */
COAUTHNET_API coauthnet_status coauthnet_analyze(const coauthnet_analyze_config* config, char** report_text);

#ifdef __cplusplus
}
#endif

#endif /* COAUTHNET_H */
