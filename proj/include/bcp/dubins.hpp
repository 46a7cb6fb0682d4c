#pragma once
/**
 * @file dubins.hpp
 * @brief Analytic shortest bounded-curvature path solver.
 *
 * Evaluates the six candidate types (four CSC via common tangents, two CCC
 * via the mutually tangent middle circle), applies the middle-arc rule for
 * CCC candidates, and returns the minimum with a fixed tie-break order.
 */

#include "bcp/cs_path.hpp"
#include "bcp/geometry.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace bcp::dubins {

using geom::Config;
using path::CsPath;

enum class PathType { LSL, RSR, LSR, RSL, RLR, LRL };

/// Fixed tie-break order: LSL < RSR < LSR < RSL < RLR < LRL.
inline constexpr std::array<PathType, 6> kAllTypes{PathType::LSL, PathType::RSR,
                                                   PathType::LSR, PathType::RSL,
                                                   PathType::RLR, PathType::LRL};

std::string_view name(PathType t);
bool is_ccc(PathType t);

struct DubinsSolution {
    PathType path_type{PathType::LSL};
    std::array<double, 3> lengths{0.0, 0.0, 0.0};  // first arc, middle, last arc
    double total{0.0};
    CsPath path{};
    /// Set on CCC solutions whose middle arc equals pi (tangency-limit
    /// geometry); such a candidate is admissible but not a strict minimiser.
    bool boundary{false};
};

/// One CSC candidate; empty when the inner tangent does not exist.
std::optional<DubinsSolution> solve_csc(const Config& x, const Config& y, PathType t,
                                        const NumericPolicy& policy = {});

/// The CCC candidate with middle arc >= pi; empty when the adjacent-circle
/// centers are farther than 4 apart (no middle circle).
std::optional<DubinsSolution> solve_ccc(const Config& x, const Config& y, PathType t,
                                        const NumericPolicy& policy = {});

/// All six candidates in tie-break order (empty entries for unreachable types).
std::array<std::optional<DubinsSolution>, 6> all_candidates(const Config& x, const Config& y,
                                                            const NumericPolicy& policy = {});

/// The length minimiser among the candidates (CCC entries admitted only with
/// middle arc >= pi per the middle-arc rule).
DubinsSolution solve_dubins(const Config& x, const Config& y, const NumericPolicy& policy = {});

}  // namespace bcp::dubins
