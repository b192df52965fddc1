#include "coauthnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>

#include "coauthnet/error.hpp"

namespace coauthnet {

Graph::Graph(std::vector<std::string> node_ids, std::span<const WeightedPair> pairs)
    : ids_(std::move(node_ids)),
      adjacency_(ids_.size()),
      self_loops_(ids_.size(), 0.0),
      weighted_degree_(ids_.size(), 0.0) {
    for (NodeIndex i = 0; i < ids_.size(); ++i) {
        if (!index_.emplace(ids_[i], i).second) throw InputError("duplicate node id '" + ids_[i] + "'");
    }

    const auto n = ids_.size();
    std::set<std::pair<NodeIndex, NodeIndex>> seen;
    for (const auto& [u, v, w] : pairs) {
        if (u >= n || v >= n) throw InputError("edge endpoint out of range");
        if (!std::isfinite(w) || w < 0) throw InputError("edge weight must be finite and non-negative");
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw InputError("duplicate edge between '" + ids_[u] + "' and '" + ids_[v] + "'");
        if (w == 0) continue;
        ++edge_count_;
        if (u == v) {
            self_loops_[u] = w;
            weighted_degree_[u] += w;
            total_weight_ += w / 2;
        } else {
            adjacency_[u].push_back({v, w});
            adjacency_[v].push_back({u, w});
            weighted_degree_[u] += w;
            weighted_degree_[v] += w;
            total_weight_ += w;
        }
    }
    for (auto& row : adjacency_)
        std::sort(row.begin(), row.end(), [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
}

std::optional<NodeIndex> Graph::index_of(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

double Graph::weight(NodeIndex i, NodeIndex j) const {
    if (i == j) return self_loops_.at(i);
    const auto row = neighbors(i);
    const auto it = std::lower_bound(row.begin(), row.end(), j,
                                     [](const Neighbor& nb, NodeIndex target) { return nb.node < target; });
    return it != row.end() && it->node == j ? it->weight : 0.0;
}

std::size_t Graph::degree(NodeIndex i) const {
    return adjacency_.at(i).size() + (self_loops_.at(i) > 0 ? 1 : 0);
}

Graph build_graph(std::span<const EdgeRecord> edges) {
    std::set<std::string> ids;
    for (const auto& e : edges) {
        if (e.a == e.b) throw InputError("self-edge on '" + e.a + "'");
        if (e.weight == 0) throw InputError("edge '" + e.a + "'-'" + e.b + "' has zero weight");
        ids.insert(e.a);
        ids.insert(e.b);
    }
    std::vector<std::string> nodes(ids.begin(), ids.end());

    const auto position = [&](const std::string& id) {
        return static_cast<NodeIndex>(std::lower_bound(nodes.begin(), nodes.end(), id) - nodes.begin());
    };
    std::vector<WeightedPair> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges) pairs.push_back({position(e.a), position(e.b), static_cast<double>(e.weight)});
    return Graph(std::move(nodes), pairs);
}

NodeMetrics node_metrics(const Graph& g, NodeIndex i) {
    if (i >= g.node_count()) throw InputError("node index " + std::to_string(i) + " out of range");
    return {g.degree(i), g.weighted_degree(i)};
}

NodeMetrics node_metrics(const Graph& g, std::string_view id) {
    const auto i = g.index_of(id);
    if (!i) throw InputError("unknown node '" + std::string(id) + "'");
    return node_metrics(g, *i);
}

std::vector<std::vector<NodeIndex>> connected_components(const Graph& g) {
    const auto n = g.node_count();
    std::vector<bool> visited(n, false);
    std::vector<std::vector<NodeIndex>> components;
    std::vector<NodeIndex> stack;
    for (NodeIndex start = 0; start < n; ++start) {
        if (visited[start]) continue;
        std::vector<NodeIndex> component;
        visited[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            component.push_back(u);
            for (const auto& nb : g.neighbors(u)) {
                if (nb.weight > 0 && !visited[nb.node]) {
                    visited[nb.node] = true;
                    stack.push_back(nb.node);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

namespace {

// Writes hop counts into `dist` (UINT32_MAX = unreached), returns the sum
// and count of reached nodes other than the source.
std::pair<std::uint64_t, std::uint64_t> bfs(const Graph& g, NodeIndex source, std::vector<std::uint32_t>& dist,
                                           std::deque<NodeIndex>& queue) {
    constexpr auto unreached = std::numeric_limits<std::uint32_t>::max();
    std::fill(dist.begin(), dist.end(), unreached);
    dist[source] = 0;
    queue.assign(1, source);
    std::uint64_t sum = 0;
    std::uint64_t reached = 0;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (const auto& nb : g.neighbors(u)) {
            if (nb.weight > 0 && dist[nb.node] == unreached) {
                dist[nb.node] = dist[u] + 1;
                sum += dist[nb.node];
                ++reached;
                queue.push_back(nb.node);
            }
        }
    }
    return {sum, reached};
}

} // namespace

std::vector<std::optional<std::uint32_t>> shortest_path_lengths(const Graph& g, NodeIndex source) {
    if (source >= g.node_count()) throw InputError("node index " + std::to_string(source) + " out of range");
    std::vector<std::uint32_t> dist(g.node_count());
    std::deque<NodeIndex> queue;
    bfs(g, source, dist, queue);

    std::vector<std::optional<std::uint32_t>> out(g.node_count());
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist[i] != std::numeric_limits<std::uint32_t>::max()) out[i] = dist[i];
    return out;
}

double mean_distance(const Graph& g) {
    std::vector<std::uint32_t> dist(g.node_count());
    std::deque<NodeIndex> queue;
    std::uint64_t total = 0;
    std::uint64_t pairs = 0;
    // Every unordered pair is seen twice, once from each end.
    for (NodeIndex s = 0; s < g.node_count(); ++s) {
        const auto [sum, reached] = bfs(g, s, dist, queue);
        total += sum;
        pairs += reached;
    }
    if (pairs == 0) throw UndefinedStatistic("mean distance is undefined: no connected pair of nodes");
    return static_cast<double>(total) / static_cast<double>(pairs);
}

} // namespace coauthnet
