#pragma once
// Shared test-only generators and independent oracles. Everything here is
// deterministic for a fixed RNG seed and stays independent of the library
// code paths it is used to check.

#include "bcp/cs_path.hpp"
#include "bcp/geometry.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace testsup {

using bcp::kPi;
using bcp::kTwoPi;
using bcp::Vec2;
using bcp::geom::Config;
using bcp::path::CsComponent;
using bcp::path::CsPath;
using bcp::path::CsSense;
using bcp::path::SampledPath;

using Rng = std::mt19937_64;

inline Config random_config(Rng& rng, double box = 5.0) {
    std::uniform_real_distribution<double> coord(-box, box);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    return Config(coord(rng), coord(rng), angle(rng));
}

/// Random canonical cs path with the requested complexity; arcs in
/// [0.1, 2*pi - 0.2], segments in [0.1, 3].
inline CsPath random_cs_path(Rng& rng, int complexity, double box = 3.0) {
    std::uniform_real_distribution<double> arc_len(0.1, kTwoPi - 0.2);
    std::uniform_real_distribution<double> seg_len(0.1, 3.0);
    std::uniform_int_distribution<int> coin(0, 1);

    CsPath p;
    p.start = random_config(rng, box);
    CsSense prev = CsSense::S;
    bool have_prev = false;
    for (int i = 0; i < complexity; ++i) {
        CsSense s;
        do {
            const int k = std::uniform_int_distribution<int>(0, 2)(rng);
            s = k == 0 ? CsSense::L : (k == 1 ? CsSense::S : CsSense::R);
        } while (have_prev && s == prev);
        have_prev = true;
        prev = s;
        p.components.emplace_back(s, s == CsSense::S ? seg_len(rng) : arc_len(rng));
    }
    (void)coin;
    return p;
}

/**
 * Smooth bounded-curvature path: curvature kappa(s) = a*sin(w*s + phi) + b
 * with |a| + |b| <= cap < 1, so the heading integrates in closed form and
 * the bound holds exactly. Positions come from Simpson quadrature of the
 * unit tangent on a fine subgrid.
 */
struct SmoothCurve {
    Config start;
    double a, w, phi, b;

    double kappa(double s) const { return a * std::sin(w * s + phi) + b; }
    double heading(double s) const {
        return start.heading - (a / w) * (std::cos(w * s + phi) - std::cos(phi)) + b * s;
    }
};

inline SmoothCurve random_smooth_curve(Rng& rng, double curvature_cap = 0.95,
                                       double box = 3.0) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SmoothCurve c;
    c.start = random_config(rng, box);
    const double a_mag = 0.25 + 0.5 * unit(rng);
    const double b_mag = (curvature_cap - a_mag) * unit(rng);
    c.a = a_mag;
    c.b = (unit(rng) < 0.5 ? -1.0 : 1.0) * b_mag;
    c.w = 2.0 + 8.0 * unit(rng);
    c.phi = kTwoPi * unit(rng);
    return c;
}

inline SampledPath sample_smooth_curve(const SmoothCurve& c, double total_len, double step,
                                       const bcp::NumericPolicy& policy = {}) {
    std::vector<double> ss, xs, ys, ths;
    double x = c.start.position.x;
    double y = c.start.position.y;
    const auto n = static_cast<std::size_t>(std::ceil(total_len / step - 1e-9));
    ss.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double s0 = std::min(static_cast<double>(i) * step, total_len);
        ss.push_back(s0);
        xs.push_back(x);
        ys.push_back(y);
        ths.push_back(c.heading(s0));
        if (i == n) break;
        const double s1 = std::min(s0 + step, total_len);
        // Simpson quadrature of the unit tangent over [s0, s1], in quarters.
        const std::size_t quarters = 4;
        const double h = (s1 - s0) / quarters;
        for (std::size_t q = 0; q < quarters; ++q) {
            const double t0 = s0 + q * h;
            const double tm = t0 + 0.5 * h;
            const double t1 = t0 + h;
            x += h / 6.0 *
                 (std::cos(c.heading(t0)) + 4.0 * std::cos(c.heading(tm)) +
                  std::cos(c.heading(t1)));
            y += h / 6.0 *
                 (std::sin(c.heading(t0)) + 4.0 * std::sin(c.heading(tm)) +
                  std::sin(c.heading(t1)));
        }
    }
    return SampledPath::from_columns(std::move(ss), std::move(xs), std::move(ys),
                                     std::move(ths), policy);
}

/// Random valid fragment: smooth bounded-curvature sampled path of the
/// requested length (< 1).
inline SampledPath random_fragment(Rng& rng, double step = 1e-3) {
    std::uniform_real_distribution<double> len(0.2, 0.95);
    const SmoothCurve c = random_smooth_curve(rng);
    return sample_smooth_curve(c, len(rng), step);
}

/**
 * Polar test curve r(u) = 1 + A*(1 - cos(m*u)), theta(u) = u on
 * u in [0, span], sampled by arclength (fine quadrature). Radius never dips
 * below 1; gentle parameters keep the discrete curvature bound satisfied.
 */
inline SampledPath sample_polar_curve(double amplitude, int m, double span, double step) {
    auto gamma = [&](double u) -> Vec2 {
        const double r = 1.0 + amplitude * (1.0 - std::cos(m * u));
        return {r * std::cos(u), r * std::sin(u)};
    };
    auto gamma_dot = [&](double u) -> Vec2 {
        const double r = 1.0 + amplitude * (1.0 - std::cos(m * u));
        const double rd = amplitude * m * std::sin(m * u);
        return {rd * std::cos(u) - r * std::sin(u), rd * std::sin(u) + r * std::cos(u)};
    };

    std::vector<double> ss, xs, ys, ths;
    const double du = 1e-4;
    double s = 0.0;
    double next_emit = 0.0;
    for (double u = 0.0; u <= span + 1e-12; u += du) {
        const double speed = gamma_dot(u).norm();
        if (s >= next_emit - 1e-12) {
            const Vec2 p = gamma(u);
            const Vec2 d = gamma_dot(u);
            ss.push_back(s);
            xs.push_back(p.x);
            ys.push_back(p.y);
            ths.push_back(std::atan2(d.y, d.x));
            next_emit += step;
        }
        s += speed * du;
    }
    bcp::NumericPolicy relaxed;
    relaxed.curvature_slack = 0.25;  // polar curves are not curvature-tight
    return SampledPath::from_columns(std::move(ss), std::move(xs), std::move(ys),
                                     std::move(ths), relaxed);
}

/// Independent forward-kinematics oracle: integrate the heading field of a
/// cs path with small Euler steps (no shared code with path::evaluate).
inline Config integrate_cs_path(const CsPath& p, double upto, double h = 1e-5) {
    double x = p.start.position.x;
    double y = p.start.position.y;
    double th = p.start.heading;
    double s = 0.0;
    for (const auto& comp : p.components) {
        const double kappa = comp.sense == CsSense::S ? 0.0
                             : comp.sense == CsSense::L ? 1.0
                                                        : -1.0;
        double remaining = std::min(comp.length, upto - s);
        while (remaining > 1e-15) {
            const double dt = std::min(h, remaining);
            // midpoint rule on the heading
            const double mid = th + 0.5 * kappa * dt;
            x += dt * std::cos(mid);
            y += dt * std::sin(mid);
            th += kappa * dt;
            remaining -= dt;
            s += dt;
        }
        if (s >= upto - 1e-15) break;
    }
    return Config(x, y, th);
}

}  // namespace testsup
