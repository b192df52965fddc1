#pragma once

// Test-only reference implementations. They work on a dense symmetric
// matrix built by the test itself and share no code with the library's
// adjacency lists, incremental gains or BFS.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "coauthnet/community.hpp"
#include "coauthnet/graph.hpp"

namespace oracle {

/// Dense symmetric weight matrix; the diagonal holds A(i, i).
struct Dense {
    std::size_t n = 0;
    std::vector<double> a;

    explicit Dense(std::size_t size = 0) : n(size), a(size * size, 0.0) {}
    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    void set(std::size_t i, std::size_t j, double w) { at(i, j) = w; at(j, i) = w; }
};

/// Zero-padded ids so lexicographic order equals index order.
inline std::string node_name(std::size_t i) {
    std::string s = std::to_string(i);
    return "n" + std::string(4 - std::min<std::size_t>(4, s.size()), '0') + s;
}

inline coauthnet::Graph to_graph(const Dense& d) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < d.n; ++i) ids.push_back(node_name(i));
    std::vector<coauthnet::WeightedPair> pairs;
    for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = i; j < d.n; ++j)
            if (d.at(i, j) != 0.0)
                pairs.push_back({static_cast<coauthnet::NodeIndex>(i), static_cast<coauthnet::NodeIndex>(j), d.at(i, j)});
    return coauthnet::Graph(std::move(ids), pairs);
}

/// Erdos-Renyi style graph with integer weights in [1, max_weight]. When
/// `connected` is set a random spanning path is added first.
inline Dense random_dense(std::mt19937_64& rng, std::size_t n, double p, int max_weight, bool connected = false) {
    Dense d(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> weight(1, max_weight);
    if (connected) {
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 1; i < n; ++i) d.set(perm[i - 1], perm[i], weight(rng));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (d.at(i, j) == 0.0 && coin(rng) < p) d.set(i, j, weight(rng));
    return d;
}

/// Q straight from its definition: the double sum over ordered pairs.
inline double modularity(const Dense& d, const std::vector<std::uint32_t>& c) {
    std::vector<double> k(d.n, 0.0);
    double two_m = 0;
    for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = 0; j < d.n; ++j) {
            k[i] += d.at(i, j);
            two_m += d.at(i, j);
        }
    double sum = 0;
    for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = 0; j < d.n; ++j)
            if (c[i] == c[j]) sum += d.at(i, j) - k[i] * k[j] / two_m;
    return sum / two_m;
}

/// Calls `visit` with every set partition of {0..n-1} as a restricted
/// growth string (labels in order of first appearance).
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    if (n == 0) {
        visit({});
        return;
    }
    std::vector<std::uint32_t> labels(n, 0);
    std::vector<std::uint32_t> prefix_max(n, 0);
    while (true) {
        visit(labels);
        std::size_t i = n - 1;
        while (i > 0 && labels[i] > prefix_max[i - 1]) --i;
        if (i == 0) return;
        ++labels[i];
        prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            labels[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

struct BestPartition {
    double q = -std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> labels;
};

inline BestPartition best_partition(const Dense& d) {
    BestPartition best;
    for_each_partition(d.n, [&](const std::vector<std::uint32_t>& labels) {
        const double q = modularity(d, labels);
        if (q > best.q) best = {q, labels};
    });
    return best;
}

/// Floyd-Warshall hop counts; returns sum and count over connected i < j.
struct DistanceTotals {
    std::uint64_t sum = 0;
    std::uint64_t pairs = 0;
    double mean() const { return static_cast<double>(sum) / static_cast<double>(pairs); }
};

inline DistanceTotals all_pairs_hops(const Dense& d) {
    constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 4;
    const auto n = d.n;
    std::vector<std::uint32_t> dist(n * n, inf);
    for (std::size_t i = 0; i < n; ++i) {
        dist[i * n + i] = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && d.at(i, j) > 0) dist[i * n + j] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const auto dik = dist[i * n + k];
            if (dik == inf) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const auto via = dik + dist[k * n + j];
                if (via < dist[i * n + j]) dist[i * n + j] = via;
            }
        }
    DistanceTotals t;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dist[i * n + j] != inf) {
                t.sum += dist[i * n + j];
                ++t.pairs;
            }
    return t;
}

/// Adds the dense matrix of sum_{i in c, j in d} A(i, j) per community pair.
inline Dense coarse(const Dense& d, const std::vector<std::uint32_t>& c, std::size_t count) {
    Dense out(count);
    for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = 0; j < d.n; ++j) out.at(c[i], c[j]) += d.at(i, j);
    return out;
}

inline Dense two_triangles(bool bridge) {
    Dense d(6);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}) d.set(u, v, 1);
    if (bridge) d.set(2, 3, 1);
    return d;
}

} // namespace oracle
