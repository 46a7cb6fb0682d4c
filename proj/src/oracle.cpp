#include "bcp/oracle.hpp"

#include "bcp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace bcp::oracle {

LatticeSpec LatticeSpec::for_query(const Config& x, const Config& y, double margin) {
    LatticeSpec spec;
    spec.bounds.min = {std::min(x.position.x, y.position.x) - margin,
                       std::min(x.position.y, y.position.y) - margin};
    spec.bounds.max = {std::max(x.position.x, y.position.x) + margin,
                       std::max(x.position.y, y.position.y) + margin};
    return spec;
}

namespace {

struct Node {
    float x;
    float y;
    std::int32_t turn;  // net signed turn count; heading = theta0 + turn * h
};

}  // namespace

LatticeResult lattice_shortest(const Config& start, const Config& goal,
                               const LatticeSpec& spec) {
    if (!(spec.control_step > 0.0) || spec.control_step > spec.position_step)
        throw Error(Errc::bad_input, "lattice: need 0 < control_step <= position_step");
    if (spec.heading_bins < 16)
        throw Error(Errc::bad_input, "lattice: need at least 16 heading bins");
    for (const Config* c : {&start, &goal}) {
        if (c->position.x < spec.bounds.min.x || c->position.x > spec.bounds.max.x ||
            c->position.y < spec.bounds.min.y || c->position.y > spec.bounds.max.y)
            throw Error(Errc::bad_input, "lattice: query pose outside bounds");
    }

    const double h = spec.control_step;
    const double cell = spec.position_step;
    const double bin_w = kTwoPi / spec.heading_bins;
    const double theta0 = start.heading;

    const auto nx = static_cast<std::size_t>(
        std::floor((spec.bounds.max.x - spec.bounds.min.x) / cell)) + 2;
    const auto ny = static_cast<std::size_t>(
        std::floor((spec.bounds.max.y - spec.bounds.min.y) / cell)) + 2;
    const auto nb = static_cast<std::size_t>(spec.heading_bins);

    auto cell_of = [&](double x, double y, double theta) -> std::size_t {
        const auto ix = static_cast<std::size_t>((x - spec.bounds.min.x) / cell);
        const auto iy = static_cast<std::size_t>((y - spec.bounds.min.y) / cell);
        auto ib = static_cast<std::int64_t>(std::llround(theta / bin_w)) %
                  static_cast<std::int64_t>(nb);
        if (ib < 0) ib += static_cast<std::int64_t>(nb);
        return (iy * nx + ix) * nb + static_cast<std::size_t>(ib);
    };

    // Heading never needs more net turns than a couple of loops on top of
    // the longest sensible path through the box.
    const double span = (spec.bounds.max - spec.bounds.min).norm();
    const auto max_level =
        static_cast<std::int32_t>(std::ceil((4.0 * span + 8.0 * kTwoPi) / h));
    const std::int32_t max_turn = max_level;

    // sin/cos of theta0 + k*h, k in [-max_turn, max_turn].
    std::vector<double> sin_t(2 * static_cast<std::size_t>(max_turn) + 1);
    std::vector<double> cos_t(sin_t.size());
    for (std::size_t i = 0; i < sin_t.size(); ++i) {
        const double th = theta0 + (static_cast<double>(i) - max_turn) * h;
        sin_t[i] = std::sin(th);
        cos_t[i] = std::cos(th);
    }
    auto sin_at = [&](std::int32_t k) { return sin_t[static_cast<std::size_t>(k + max_turn)]; };
    auto cos_at = [&](std::int32_t k) { return cos_t[static_cast<std::size_t>(k + max_turn)]; };

    std::vector<std::uint8_t> closed(nx * ny * nb, 0);
    const std::size_t goal_cell = cell_of(goal.position.x, goal.position.y, goal.heading);

    std::vector<Node> frontier{{static_cast<float>(start.position.x),
                                static_cast<float>(start.position.y), 0}};
    closed[cell_of(start.position.x, start.position.y, theta0)] = 1;

    const double half_diag = 0.5 * cell * std::numbers::sqrt2;
    LatticeResult result;
    result.resolution = half_diag + 0.5 * bin_w;

    if (cell_of(start.position.x, start.position.y, theta0) == goal_cell) {
        result.length = 0.0;
        return result;
    }

    std::vector<Node> next;
    for (std::int32_t level = 1; level <= max_level && !frontier.empty(); ++level) {
        next.clear();
        for (const Node& node : frontier) {
            const double px = node.x;
            const double py = node.y;
            const std::int32_t k = node.turn;
            // successors: straight, left turn, right turn
            for (int move = 0; move < 3; ++move) {
                double sx, sy;
                std::int32_t sk = k;
                if (move == 0) {
                    sx = px + h * cos_at(k);
                    sy = py + h * sin_at(k);
                } else if (move == 1) {
                    sk = k + 1;
                    if (sk > max_turn) continue;
                    sx = px + (sin_at(sk) - sin_at(k));
                    sy = py - (cos_at(sk) - cos_at(k));
                } else {
                    sk = k - 1;
                    if (sk < -max_turn) continue;
                    sx = px - (sin_at(sk) - sin_at(k));
                    sy = py + (cos_at(sk) - cos_at(k));
                }
                if (sx < spec.bounds.min.x || sx > spec.bounds.max.x ||
                    sy < spec.bounds.min.y || sy > spec.bounds.max.y)
                    continue;
                const std::size_t id = cell_of(sx, sy, theta0 + sk * h);
                if (closed[id]) continue;
                closed[id] = 1;
                if (id == goal_cell) {
                    result.length = static_cast<double>(level) * h;
                    return result;
                }
                next.push_back({static_cast<float>(sx), static_cast<float>(sy), sk});
            }
        }
        frontier.swap(next);
    }
    throw Error(Errc::unreachable, "lattice: goal cell not reached within bounds");
}

PolarBound check_polar_bound(const SampledPath& p, const NumericPolicy& policy) {
    const double r_min = kernels::min_distance(p.x, p.y, 0.0, 0.0);
    if (r_min < 1.0 - policy.geom_tol)
        throw Error(Errc::radius_violation,
                    "polar bound: sample at radius " + std::to_string(r_min) + " < 1");

    double swept = 0.0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        const Vec2 a{p.x[i - 1], p.y[i - 1]};
        const Vec2 b{p.x[i], p.y[i]};
        swept += std::atan2(a.cross(b), a.dot(b));
    }
    return {p.measured_length(), swept};
}

ProjectionBound check_projection_bound(const SampledPath& p, Vec2 direction) {
    const Vec2 d = p.back().position - p.front().position;
    return {p.measured_length(), d.dot(direction)};
}

}  // namespace bcp::oracle
