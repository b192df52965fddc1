#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "coauthnet/graph.hpp"

namespace coauthnet {

using CommunityId = std::uint32_t;

/// Assignment of every node to a community. Ids are contiguous from 0 and
/// no community is empty.
class Partition {
public:
    Partition() = default;

    /// Throws InputError unless `assignment` uses exactly the ids 0..C-1.
    explicit Partition(std::vector<CommunityId> assignment);

    /// Relabels arbitrary labels to 0..C-1 in order of first appearance,
    /// i.e. by the smallest node index in each community.
    static Partition canonical(std::span<const CommunityId> labels);
    static Partition singletons(std::size_t n);
    static Partition whole(std::size_t n);

    std::size_t node_count() const noexcept { return assignment_.size(); }
    std::size_t community_count() const noexcept { return count_; }
    CommunityId operator[](NodeIndex i) const { return assignment_.at(i); }
    const std::vector<CommunityId>& assignment() const noexcept { return assignment_; }
    std::vector<std::size_t> sizes() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<CommunityId> assignment_;
    std::size_t count_ = 0;
};

/// Q = 1/(2m) * sum_{i,j} [A(i,j) - k_i k_j / (2m)] * [c_i == c_j].
/// Throws UndefinedStatistic when m == 0 and InputError when the partition
/// does not cover the graph's nodes.
double modularity(const Graph& g, const Partition& p);

/// Q after moving `node` into `target` minus Q before.
double modularity_gain(const Graph& g, const Partition& p, NodeIndex node, CommunityId target);

/// Observation hook for the optimiser. `labels` are the working labels on
/// `graph` (the current aggregation level) right after the event, so the
/// level's modularity can be recomputed independently.
struct LouvainEvent {
    enum class Kind { Move, Pass };
    Kind kind;
    std::size_t level;
    const Graph* graph;
    std::span<const CommunityId> labels;
    double gain; // modularity gained by the move or by the whole pass
};

struct LouvainOptions {
    /// Visit nodes in a seeded random order instead of index order.
    bool shuffle = false;
    std::uint64_t seed = 42;
    /// Hard stop against runaway loops; never reached in practice.
    std::size_t max_passes = 1000;
    std::function<void(const LouvainEvent&)> observer;
};

/// Improvement threshold below which a move or pass does not count.
inline constexpr double kModularityEpsilon = 1e-12;

/// First phase: greedy node moves until a full sweep changes nothing.
/// The result is canonically renumbered.
Partition local_moving(const Graph& g, const Partition& p, const LouvainOptions& options = {});

/// Second phase: one node per community. Off-diagonal weights are summed
/// between communities; the diagonal sums every ordered pair inside a
/// community, so total weight and modularity are preserved.
Graph aggregate(const Graph& g, const Partition& p);

struct LouvainResult {
    Partition partition;
    double modularity = 0;
    std::size_t passes = 0;
};

/// Alternates local_moving and aggregate from singletons until a pass no
/// longer improves modularity. Throws UndefinedStatistic on an empty graph.
LouvainResult louvain(const Graph& g, const LouvainOptions& options = {});

} // namespace coauthnet
