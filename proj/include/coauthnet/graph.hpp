#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coauthnet/corpus.hpp"

namespace coauthnet {

using NodeIndex = std::uint32_t;

/// Adjacency entry: neighbour index and A(i, j) for i != j.
struct Neighbor {
    NodeIndex node;
    double weight;
};

/// Input entry for Graph construction. For `u == v` the weight is the
/// diagonal entry A(u, u) itself, not an edge to be mirrored.
struct WeightedPair {
    NodeIndex u;
    NodeIndex v;
    double weight;
};

struct NodeMetrics {
    std::size_t degree = 0;     // incident edges, a self-loop counts once
    double weighted_degree = 0; // k = sum_j A(i, j)
};

/// Immutable undirected weighted graph over an ordered node list.
///
/// A(i, j) == A(j, i). Diagonal entries are only produced by aggregation.
/// Total weight m = 1/2 * sum_{i,j} A(i, j), so an off-diagonal pair
/// contributes its weight once and a diagonal entry contributes half of it.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on out-of-range indices, duplicate pairs,
    /// negative or non-finite weights, or duplicate ids.
    Graph(std::vector<std::string> node_ids, std::span<const WeightedPair> pairs);

    std::size_t node_count() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }

    const std::vector<std::string>& node_ids() const noexcept { return ids_; }
    const std::string& node_id(NodeIndex i) const { return ids_.at(i); }
    std::optional<NodeIndex> index_of(std::string_view id) const;

    /// Off-diagonal neighbours of i, sorted by index.
    std::span<const Neighbor> neighbors(NodeIndex i) const { return adjacency_.at(i); }
    double self_loop(NodeIndex i) const { return self_loops_.at(i); }
    double weight(NodeIndex i, NodeIndex j) const;

    double total_weight() const noexcept { return total_weight_; }
    double weighted_degree(NodeIndex i) const { return weighted_degree_.at(i); }
    std::size_t degree(NodeIndex i) const;

    /// Number of distinct unordered pairs (including self-loops) with A > 0.
    std::size_t edge_count() const noexcept { return edge_count_; }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<double> self_loops_;
    std::vector<double> weighted_degree_;
    double total_weight_ = 0;
    std::size_t edge_count_ = 0;
};

/// Co-authorship graph over the endpoints of `edges`, nodes in lexicographic
/// id order. Throws InputError on self-edges, duplicate pairs or zero weight.
Graph build_graph(std::span<const EdgeRecord> edges);

/// Throws InputError for an unknown id.
NodeMetrics node_metrics(const Graph& g, std::string_view id);
NodeMetrics node_metrics(const Graph& g, NodeIndex i);

/// Maximal sets of nodes joined by positive-weight edges. Each component is
/// sorted by index; components are ordered by their smallest index.
std::vector<std::vector<NodeIndex>> connected_components(const Graph& g);

/// Hop counts from `source`; unreachable nodes hold no value.
std::vector<std::optional<std::uint32_t>> shortest_path_lengths(const Graph& g, NodeIndex source);

/// Average hop count over unordered pairs of distinct nodes that share a
/// component. Throws UndefinedStatistic when no such pair exists.
double mean_distance(const Graph& g);

} // namespace coauthnet
