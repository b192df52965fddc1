#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coauthnet/graph.hpp"

namespace coauthnet {

struct Vec2 {
    double x = 0;
    double y = 0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

double norm(Vec2 v);

struct LayoutParams {
    double attraction = 1.0;       // k_a
    double repulsion = 1.0;        // k_r
    std::uint32_t iterations = 1000;
    double step = 0.01;            // displacement per unit force
    double max_displacement = 1.0; // per node, per iteration
    double weight_exponent = 0.0;  // attraction scaled by weight^exponent
    std::uint64_t seed = 42;
    /// Worker threads for force accumulation; 0 picks the hardware count.
    std::uint32_t threads = 1;

    /// Throws InputError on non-positive coefficients or zero iterations.
    void validate() const;
};

/// Node positions indexed by NodeIndex.
struct LayoutState {
    std::vector<Vec2> positions;
};

/// Uniform placement in the unit disk from a seeded generator; no two nodes
/// share a point.
LayoutState init_positions(const Graph& g, std::uint64_t seed);

/// Force on n1 from the spring to n2: k_a * (p2 - p1), magnitude k_a * d.
Vec2 attraction_force(const LayoutState& state, NodeIndex n1, NodeIndex n2, const LayoutParams& params);

/// Force on n1 pushing away from n2 with magnitude
/// k_r * (deg(n1)+1)(deg(n2)+1) / d. Coincident nodes are separated by a
/// seeded 1e-6 jitter first; the result stays antisymmetric in (n1, n2).
Vec2 repulsion_force(const LayoutState& state, const Graph& g, NodeIndex n1, NodeIndex n2,
                     const LayoutParams& params);

/// Net force on every node from the current positions.
std::vector<Vec2> net_forces(const LayoutState& state, const Graph& g, const LayoutParams& params);

struct StepReport {
    double mean_force = 0;  // mean net-force magnitude before the move
    Vec2 total_displacement; // sum of unclamped displacements
};

/// One synchronous update: every node moves by step * force, clamped to
/// max_displacement. Throws LayoutError on a non-finite force.
StepReport step(LayoutState& state, const Graph& g, const LayoutParams& params);

struct LayoutResult {
    LayoutState state;
    double final_mean_force = 0;
};

LayoutResult run_layout(const Graph& g, const LayoutParams& params);

} // namespace coauthnet
