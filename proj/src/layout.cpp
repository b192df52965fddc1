#include "coauthnet/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "coauthnet/error.hpp"

namespace coauthnet {

double norm(Vec2 v) {
    return std::hypot(v.x, v.y);
}

void LayoutParams::validate() const {
    const auto positive = [](double v) { return std::isfinite(v) && v > 0; };
    if (!positive(attraction)) throw InputError("attraction coefficient must be positive");
    if (!positive(repulsion)) throw InputError("repulsion coefficient must be positive");
    if (!positive(step)) throw InputError("step must be positive");
    if (!positive(max_displacement)) throw InputError("max displacement must be positive");
    if (!std::isfinite(weight_exponent)) throw InputError("weight exponent must be finite");
    if (iterations == 0) throw InputError("iterations must be at least 1");
}

namespace {

constexpr double kJitter = 1e-6;

// Uniform in [0, 1) from the top 53 bits; std::uniform_real_distribution is
// not specified bit-for-bit across standard libraries.
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

LayoutState init_positions(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    LayoutState state;
    state.positions.reserve(g.node_count());
    std::set<std::pair<double, double>> taken;
    while (state.positions.size() < g.node_count()) {
        const double x = 2.0 * unit_double(rng) - 1.0;
        const double y = 2.0 * unit_double(rng) - 1.0;
        if (x * x + y * y >= 1.0) continue;
        if (!taken.emplace(x, y).second) continue;
        state.positions.push_back({x, y});
    }
    return state;
}

Vec2 attraction_force(const LayoutState& state, NodeIndex n1, NodeIndex n2, const LayoutParams& params) {
    // k_a * d in the direction of n2, i.e. k_a * (p2 - p1); zero when coincident.
    return params.attraction * (state.positions.at(n2) - state.positions.at(n1));
}

Vec2 repulsion_force(const LayoutState& state, const Graph& g, NodeIndex n1, NodeIndex n2,
                     const LayoutParams& params) {
    if (n1 == n2) return {};
    Vec2 delta = state.positions.at(n1) - state.positions.at(n2);
    double d2 = delta.x * delta.x + delta.y * delta.y;
    if (d2 == 0.0) {
        const auto lo = std::min(n1, n2);
        const auto hi = std::max(n1, n2);
        const auto h = splitmix64(params.seed ^ splitmix64((std::uint64_t{lo} << 32) | hi));
        const double angle = static_cast<double>(h >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
        const double sign = n1 < n2 ? 1.0 : -1.0;
        delta = {sign * kJitter * std::cos(angle), sign * kJitter * std::sin(angle)};
        d2 = delta.x * delta.x + delta.y * delta.y;
    }
    const double degrees = static_cast<double>(g.degree(n1) + 1) * static_cast<double>(g.degree(n2) + 1);
    // Magnitude k_r * degrees / d along delta / d.
    return (params.repulsion * degrees / d2) * delta;
}

std::vector<Vec2> net_forces(const LayoutState& state, const Graph& g, const LayoutParams& params) {
    const auto n = static_cast<NodeIndex>(g.node_count());
    std::vector<Vec2> forces(n);

    const auto accumulate = [&](NodeIndex begin, NodeIndex end) {
        for (NodeIndex i = begin; i < end; ++i) {
            Vec2 f;
            for (NodeIndex j = 0; j < n; ++j)
                if (j != i) f += repulsion_force(state, g, i, j, params);
            for (const auto& nb : g.neighbors(i)) {
                const double scale = params.weight_exponent == 0.0 ? 1.0 : std::pow(nb.weight, params.weight_exponent);
                f += scale * attraction_force(state, i, nb.node, params);
            }
            forces[i] = f;
        }
    };

    std::uint32_t threads = params.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : params.threads;
    threads = std::min<std::uint32_t>(threads, std::max<NodeIndex>(n, 1));
    if (threads <= 1) {
        accumulate(0, n);
        return forces;
    }
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        const NodeIndex chunk = (n + threads - 1) / threads;
        for (std::uint32_t t = 0; t < threads; ++t) {
            const NodeIndex begin = std::min<NodeIndex>(n, t * chunk);
            const NodeIndex end = std::min<NodeIndex>(n, begin + chunk);
            if (begin < end) workers.emplace_back(accumulate, begin, end);
        }
    } // joined here
    return forces;
}

StepReport step(LayoutState& state, const Graph& g, const LayoutParams& params) {
    const auto forces = net_forces(state, g, params);
    StepReport report;
    for (NodeIndex i = 0; i < forces.size(); ++i) {
        const auto f = forces[i];
        if (!std::isfinite(f.x) || !std::isfinite(f.y))
            throw LayoutError("non-finite force on node '" + g.node_id(i) + "'; check the layout coefficients");
        report.mean_force += norm(f);
        report.total_displacement += params.step * f;
    }
    if (!forces.empty()) report.mean_force /= static_cast<double>(forces.size());

    for (NodeIndex i = 0; i < forces.size(); ++i) {
        Vec2 move = params.step * forces[i];
        const double length = norm(move);
        if (length > params.max_displacement) move = (params.max_displacement / length) * move;
        state.positions[i] += move;
    }
    return report;
}

LayoutResult run_layout(const Graph& g, const LayoutParams& params) {
    params.validate();
    LayoutResult result{init_positions(g, params.seed), 0.0};
    for (std::uint32_t it = 0; it < params.iterations; ++it) step(result.state, g, params);

    const auto forces = net_forces(result.state, g, params);
    for (const auto& f : forces) result.final_mean_force += norm(f);
    if (!forces.empty()) result.final_mean_force /= static_cast<double>(forces.size());
    return result;
}

} // namespace coauthnet
