#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "coauthnet/error.hpp"
#include "coauthnet/graph.hpp"
#include "oracles.hpp"

using namespace coauthnet;

namespace {

EdgeRecord edge(std::string a, std::string b, unsigned w = 1) {
    std::vector<std::string> papers;
    for (unsigned i = 0; i < w; ++i) papers.push_back(a + b + std::to_string(i));
    return {std::move(a), std::move(b), w, std::move(papers)};
}

Graph graph_of(std::vector<EdgeRecord> edges) {
    return build_graph(edges);
}

} // namespace

TEST(BuildGraph, SingleWeightedEdge) {
    const auto g = graph_of({edge("m1", "m2", 2)});
    EXPECT_EQ(g.node_count(), 2u);
    EXPECT_DOUBLE_EQ(g.total_weight(), 2.0);
}

TEST(BuildGraph, EmptyEdgeList) {
    const auto g = graph_of({});
    EXPECT_TRUE(g.empty());
    EXPECT_EQ(g.total_weight(), 0.0);
}

TEST(BuildGraph, NodesInLexicographicOrder) {
    const auto g = graph_of({edge("b", "c"), edge("a", "b")});
    EXPECT_EQ(g.node_ids(), (std::vector<std::string>{"a", "b", "c"}));
    const auto m = node_metrics(g, "b");
    EXPECT_EQ(m.degree, 2u);
    EXPECT_DOUBLE_EQ(m.weighted_degree, 2.0);
}

TEST(BuildGraph, RejectsSelfAndDuplicateEdges) {
    EXPECT_THROW(graph_of({edge("a", "a")}), InputError);
    EXPECT_THROW(graph_of({edge("a", "b"), edge("a", "b")}), InputError);
}

TEST(NodeMetrics, Triangle) {
    const auto g = graph_of({edge("a", "b"), edge("a", "c"), edge("b", "c")});
    for (const auto* id : {"a", "b", "c"}) {
        EXPECT_EQ(node_metrics(g, id).degree, 2u);
        EXPECT_DOUBLE_EQ(node_metrics(g, id).weighted_degree, 2.0);
    }
    EXPECT_THROW(node_metrics(g, "z"), InputError);
}

TEST(NodeMetrics, SelfLoopCountsOnce) {
    const std::vector<WeightedPair> pairs{{0, 0, 4.0}, {0, 1, 1.0}};
    const Graph g({"c0", "c1"}, pairs);
    const auto m = node_metrics(g, NodeIndex{0});
    EXPECT_DOUBLE_EQ(m.weighted_degree, 5.0);
    EXPECT_EQ(m.degree, 2u);
    EXPECT_DOUBLE_EQ(g.total_weight(), 3.0); // 1/2 * (4 + 1 + 1)
}

TEST(NodeMetrics, IsolatedPair) {
    const auto g = graph_of({edge("a", "b", 3)});
    EXPECT_EQ(node_metrics(g, "a").degree, 1u);
    EXPECT_DOUBLE_EQ(node_metrics(g, "a").weighted_degree, 3.0);
}

TEST(ConnectedComponents, Examples) {
    EXPECT_EQ(connected_components(graph_of({edge("a", "b"), edge("c", "d")})).size(), 2u);
    EXPECT_EQ(connected_components(graph_of({edge("a", "b"), edge("a", "c"), edge("b", "c")})).size(), 1u);
    EXPECT_TRUE(connected_components(graph_of({})).empty());
}

TEST(ConnectedComponents, IsAPartitionWithNoCrossingEdge) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto d = oracle::random_dense(rng, 30, 0.05, 3);
        const auto g = oracle::to_graph(d);
        const auto comps = connected_components(g);
        std::vector<int> owner(g.node_count(), -1);
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (c > 0) EXPECT_LT(comps[c - 1].front(), comps[c].front());
            for (const auto v : comps[c]) {
                EXPECT_EQ(owner[v], -1);
                owner[v] = static_cast<int>(c);
            }
            // internally connected: everything reachable from the first node
            const auto reach = shortest_path_lengths(g, comps[c].front());
            for (const auto v : comps[c]) EXPECT_TRUE(reach[v].has_value());
        }
        EXPECT_EQ(std::count(owner.begin(), owner.end(), -1), 0);
        for (std::size_t i = 0; i < d.n; ++i)
            for (std::size_t j = 0; j < d.n; ++j)
                if (d.at(i, j) > 0) EXPECT_EQ(owner[i], owner[j]);
    }
}

TEST(ShortestPaths, PathFromEnd) {
    const auto g = graph_of({edge("a", "b"), edge("b", "c")});
    const auto dist = shortest_path_lengths(g, 0);
    EXPECT_EQ(dist[0], 0u);
    EXPECT_EQ(dist[1], 1u);
    EXPECT_EQ(dist[2], 2u);
}

TEST(ShortestPaths, OtherComponentAbsent) {
    const auto g = graph_of({edge("a", "b"), edge("c", "d")});
    const auto dist = shortest_path_lengths(g, 0);
    EXPECT_TRUE(dist[1].has_value());
    EXPECT_FALSE(dist[2].has_value());
    EXPECT_FALSE(dist[3].has_value());
    EXPECT_THROW(shortest_path_lengths(g, 9), InputError);
}

TEST(ShortestPaths, CompleteGraph) {
    const auto g = graph_of({edge("a", "b"), edge("a", "c"), edge("a", "d"), edge("b", "c"), edge("b", "d"),
                             edge("c", "d")});
    const auto dist = shortest_path_lengths(g, 2);
    for (NodeIndex v = 0; v < 4; ++v) EXPECT_EQ(*dist[v], v == 2 ? 0u : 1u);
}

TEST(MeanDistance, Examples) {
    EXPECT_DOUBLE_EQ(mean_distance(graph_of({edge("a", "b"), edge("a", "c"), edge("b", "c")})), 1.0);
    EXPECT_DOUBLE_EQ(mean_distance(graph_of({edge("a", "b"), edge("b", "c")})), 4.0 / 3.0);
    EXPECT_DOUBLE_EQ(mean_distance(graph_of({edge("a", "b"), edge("c", "d")})), 1.0);
    EXPECT_THROW(mean_distance(graph_of({})), UndefinedStatistic);
}

TEST(MeanDistance, MatchesFloydWarshallExactly) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 80;
        const auto d = oracle::random_dense(rng, n, 2.5 / static_cast<double>(n), 2);
        const auto ref = oracle::all_pairs_hops(d);
        const auto g = oracle::to_graph(d);
        if (ref.pairs == 0) {
            EXPECT_THROW(mean_distance(g), UndefinedStatistic);
            continue;
        }
        EXPECT_EQ(mean_distance(g), ref.mean());
    }
}

// Relabelling the nodes changes nothing observable except order.
TEST(GraphInvariants, HandshakeAndRelabelling) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + rng() % 25;
        const auto d = oracle::random_dense(rng, n, 0.2, 3);
        const auto g = oracle::to_graph(d);
        if (g.total_weight() == 0) continue;

        double k_sum = 0;
        for (NodeIndex i = 0; i < n; ++i) k_sum += g.weighted_degree(i);
        EXPECT_DOUBLE_EQ(k_sum, 2 * g.total_weight());

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        oracle::Dense relabelled(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) relabelled.at(perm[i], perm[j]) = d.at(i, j);
        const auto h = oracle::to_graph(relabelled);

        EXPECT_DOUBLE_EQ(h.total_weight(), g.total_weight());
        std::vector<std::size_t> dg, dh;
        for (NodeIndex i = 0; i < n; ++i) {
            dg.push_back(g.degree(i));
            dh.push_back(h.degree(i));
        }
        std::sort(dg.begin(), dg.end());
        std::sort(dh.begin(), dh.end());
        EXPECT_EQ(dg, dh);
        EXPECT_EQ(connected_components(g).size(), connected_components(h).size());
        if (oracle::all_pairs_hops(d).pairs > 0) EXPECT_EQ(mean_distance(g), mean_distance(h));
    }
}
