#include "coauthnet/community.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "coauthnet/error.hpp"

namespace coauthnet {

Partition::Partition(std::vector<CommunityId> assignment) : assignment_(std::move(assignment)) {
    if (assignment_.empty()) return;
    const auto max_id = *std::max_element(assignment_.begin(), assignment_.end());
    count_ = static_cast<std::size_t>(max_id) + 1;
    if (count_ > assignment_.size()) throw InputError("partition has more community ids than nodes");
    std::vector<bool> used(count_, false);
    for (const auto c : assignment_) used[c] = true;
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw InputError("partition community ids are not contiguous");
}

Partition Partition::canonical(std::span<const CommunityId> labels) {
    std::unordered_map<CommunityId, CommunityId> renumber;
    std::vector<CommunityId> out;
    out.reserve(labels.size());
    for (const auto label : labels) {
        const auto [it, inserted] = renumber.try_emplace(label, static_cast<CommunityId>(renumber.size()));
        out.push_back(it->second);
    }
    return Partition(std::move(out));
}

Partition Partition::singletons(std::size_t n) {
    std::vector<CommunityId> ids(n);
    std::iota(ids.begin(), ids.end(), CommunityId{0});
    return Partition(std::move(ids));
}

Partition Partition::whole(std::size_t n) {
    return Partition(std::vector<CommunityId>(n, 0));
}

std::vector<std::size_t> Partition::sizes() const {
    std::vector<std::size_t> out(count_, 0);
    for (const auto c : assignment_) ++out[c];
    return out;
}

namespace {

void require_edges(const Graph& g) {
    if (!(g.total_weight() > 0)) throw UndefinedStatistic("modularity is undefined on a graph with no edge weight");
}

void require_cover(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        throw InputError("partition covers " + std::to_string(p.node_count()) + " nodes but the graph has " +
                         std::to_string(g.node_count()));
}

// Change in Q when node i (weighted degree k) leaves community `own` for
// `target`. `to_target` and `to_own_rest` are the weights from i into the
// target and into the rest of its own community; totals are community
// weighted-degree sums, `own_total` including i and `target_total` not.
double move_gain(double k, double to_target, double to_own_rest, double target_total, double own_total,
                 double two_m) {
    return (2.0 * (to_target - to_own_rest) - 2.0 * k * (target_total - own_total + k) / two_m) / two_m;
}

std::vector<double> community_totals(const Graph& g, std::span<const CommunityId> labels, std::size_t count) {
    std::vector<double> totals(count, 0.0);
    for (NodeIndex i = 0; i < labels.size(); ++i) totals[labels[i]] += g.weighted_degree(i);
    return totals;
}

} // namespace

double modularity(const Graph& g, const Partition& p) {
    require_edges(g);
    require_cover(g, p);
    const auto count = p.community_count();
    std::vector<double> inside(count, 0.0);
    for (NodeIndex i = 0; i < g.node_count(); ++i) {
        const auto c = p[i];
        inside[c] += g.self_loop(i);
        for (const auto& nb : g.neighbors(i))
            if (p[nb.node] == c) inside[c] += nb.weight;
    }
    const auto totals = community_totals(g, p.assignment(), count);
    const double two_m = 2.0 * g.total_weight();
    double q = 0;
    for (std::size_t c = 0; c < count; ++c) {
        const double share = totals[c] / two_m;
        q += inside[c] / two_m - share * share;
    }
    return q;
}

double modularity_gain(const Graph& g, const Partition& p, NodeIndex node, CommunityId target) {
    require_edges(g);
    require_cover(g, p);
    if (node >= g.node_count()) throw InputError("node index " + std::to_string(node) + " out of range");
    if (target >= p.community_count()) throw InputError("unknown community " + std::to_string(target));
    const auto own = p[node];
    if (own == target) return 0.0;

    double to_target = 0;
    double to_own_rest = 0;
    for (const auto& nb : g.neighbors(node)) {
        if (p[nb.node] == target) to_target += nb.weight;
        else if (p[nb.node] == own) to_own_rest += nb.weight;
    }
    const auto totals = community_totals(g, p.assignment(), p.community_count());
    return move_gain(g.weighted_degree(node), to_target, to_own_rest, totals[target], totals[own],
                     2.0 * g.total_weight());
}

namespace {

Partition local_moving_at_level(const Graph& g, const Partition& p, const LouvainOptions& options,
                                std::size_t level) {
    require_edges(g);
    require_cover(g, p);
    const auto n = g.node_count();
    const double two_m = 2.0 * g.total_weight();

    std::vector<CommunityId> labels = p.assignment();
    auto totals = community_totals(g, labels, p.community_count());

    std::vector<NodeIndex> order(n);
    std::iota(order.begin(), order.end(), NodeIndex{0});
    if (options.shuffle) {
        std::mt19937_64 rng(options.seed + level);
        std::shuffle(order.begin(), order.end(), rng);
    }

    // Scratch space: weight from the current node into each community.
    std::vector<double> link(totals.size(), 0.0);
    std::vector<CommunityId> touched;

    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto i : order) {
            const auto own = labels[i];
            const double k = g.weighted_degree(i);
            for (const auto& nb : g.neighbors(i)) {
                if (nb.weight <= 0) continue;
                const auto c = labels[nb.node];
                if (link[c] == 0.0 && std::find(touched.begin(), touched.end(), c) == touched.end())
                    touched.push_back(c);
                link[c] += nb.weight;
            }
            std::sort(touched.begin(), touched.end());

            CommunityId best = own;
            double best_gain = kModularityEpsilon;
            for (const auto c : touched) {
                if (c == own) continue;
                const double gain = move_gain(k, link[c], link[own], totals[c], totals[own], two_m);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            for (const auto c : touched) link[c] = 0.0;
            touched.clear();

            if (best == own) continue;
            totals[own] -= k;
            totals[best] += k;
            labels[i] = best;
            moved = true;
            if (options.observer)
                options.observer({LouvainEvent::Kind::Move, level, &g, labels, best_gain});
        }
    }
    return Partition::canonical(labels);
}

} // namespace

Partition local_moving(const Graph& g, const Partition& p, const LouvainOptions& options) {
    return local_moving_at_level(g, p, options, 0);
}

Graph aggregate(const Graph& g, const Partition& p) {
    require_cover(g, p);
    const auto count = p.community_count();
    std::map<std::pair<CommunityId, CommunityId>, double> weights;
    for (NodeIndex i = 0; i < g.node_count(); ++i) {
        const auto c = p[i];
        if (g.self_loop(i) > 0) weights[{c, c}] += g.self_loop(i);
        for (const auto& nb : g.neighbors(i)) {
            const auto d = p[nb.node];
            if (c == d) {
                weights[{c, c}] += nb.weight; // visited from both ends: ordered-pair sum
            } else if (i < nb.node) {
                weights[{std::min(c, d), std::max(c, d)}] += nb.weight;
            }
        }
    }

    std::vector<std::string> ids;
    ids.reserve(count);
    for (std::size_t c = 0; c < count; ++c) ids.push_back("c" + std::to_string(c));
    std::vector<WeightedPair> pairs;
    pairs.reserve(weights.size());
    for (const auto& [key, w] : weights) pairs.push_back({key.first, key.second, w});
    return Graph(std::move(ids), pairs);
}

LouvainResult louvain(const Graph& g, const LouvainOptions& options) {
    require_edges(g);
    const auto n = g.node_count();

    std::vector<CommunityId> membership(n);
    std::iota(membership.begin(), membership.end(), CommunityId{0});
    Graph level_graph = g;
    double q = modularity(g, Partition::singletons(n));

    LouvainResult result;
    while (result.passes < options.max_passes) {
        const auto level = result.passes;
        const auto moved =
            local_moving_at_level(level_graph, Partition::singletons(level_graph.node_count()), options, level);
        ++result.passes;
        if (moved.community_count() == level_graph.node_count()) break;

        const double next_q = modularity(level_graph, moved);
        const double gain = next_q - q;
        if (gain <= kModularityEpsilon) break;

        for (auto& c : membership) c = moved[c];
        if (options.observer)
            options.observer({LouvainEvent::Kind::Pass, level, &level_graph, moved.assignment(), gain});
        level_graph = aggregate(level_graph, moved);
        q = next_q;
    }

    result.partition = Partition::canonical(membership);
    result.modularity = modularity(g, result.partition);
    return result;
}

} // namespace coauthnet
