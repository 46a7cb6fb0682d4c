#pragma once
/**
 * @file oracle.hpp
 * @brief Independent ground truth: a lattice shortest-path search with
 *        bang-bang controls, plus numeric validators for the polar-angle and
 *        projection length bounds. Used by tests and the verify command.
 */

#include "bcp/cs_path.hpp"
#include "bcp/geometry.hpp"

namespace bcp::oracle {

using geom::Config;
using path::SampledPath;

struct Box {
    Vec2 min{};
    Vec2 max{};
};

struct LatticeSpec {
    double position_step = 0.05;
    int heading_bins = 72;
    double control_step = 0.02;  // arclength per move, <= position_step
    Box bounds{};

    /// Bounds = bounding box of the two poses inflated by @p margin.
    static LatticeSpec for_query(const Config& x, const Config& y, double margin = 4.0);
};

struct LatticeResult {
    double length{0.0};
    /// Goal-cell quantisation envelope: half the cell diagonal plus half a
    /// heading bin (informational; the acceptance tolerance is fixed
    /// separately).
    double resolution{0.0};
};

/**
 * @brief Length of the shortest move sequence over {L, S, R} (each of
 *        arclength control_step, turns at curvature exactly 1) from x's cell
 *        to y's cell. Uniform-cost search over pose cells; throws
 *        Errc::unreachable when the goal cell cannot be reached in bounds.
 */
LatticeResult lattice_shortest(const Config& x, const Config& y, const LatticeSpec& spec);

struct PolarBound {
    double measured_length;
    double swept_angle;
};

/**
 * @brief Measured length and net swept polar angle about the origin for a
 *        curve starting at (1, 0) with all samples at radius >= 1. Throws
 *        Errc::radius_violation when a sample dips below radius 1.
 */
PolarBound check_polar_bound(const SampledPath& p, const NumericPolicy& policy = {});

struct ProjectionBound {
    double measured_length;
    double projected_displacement;
};

/// Measured length and displacement of the endpoints projected on @p direction.
ProjectionBound check_projection_bound(const SampledPath& p, Vec2 direction);

}  // namespace bcp::oracle
