#pragma once
/**
 * @file geometry.hpp
 * @brief Configurations, adjacent unit circles and common-tangent
 *        constructions. All circles have radius 1 (unit curvature bound).
 */

#include "bcp/numeric.hpp"

#include <optional>

namespace bcp::geom {

/// Traversal sense of a circle: left = counterclockwise, right = clockwise.
enum class Sense { left, right };

inline Sense opposite(Sense s) { return s == Sense::left ? Sense::right : Sense::left; }

/**
 * @brief An element of the tangent bundle: planar point plus unit heading.
 *
 * The heading is stored normalised to [0, 2*pi); constructors take care of
 * the wrap so downstream code can rely on it.
 */
struct Config {
    Vec2 position{};
    double heading{0.0};

    Config() = default;
    Config(Vec2 p, double h) : position(p), heading(wrap_two_pi(h)) {}
    Config(double x, double y, double h) : position(x, y), heading(wrap_two_pi(h)) {}

    Vec2 tangent() const { return unit_from_angle(heading); }
    /// The same point with the direction of travel flipped.
    Config reversed() const { return Config(position, heading + kPi); }
};

/// Unit circle with a traversal sense. No radius field: radius is always 1.
struct Circle {
    Vec2 center{};
    Sense sense{Sense::left};
};

/// Segment tangent to two circles at its endpoints.
struct TangentSegment {
    Vec2 from_point{};
    Vec2 to_point{};
    Circle from_circle{};
    Circle to_circle{};

    double length() const { return (to_point - from_point).norm(); }
};

/// The unit circles tangent to a configuration on its left and right.
struct AdjacentCircles {
    Circle left;
    Circle right;
};

AdjacentCircles adjacent_circles(const Config& c);

/// Adjacent circle on one side; left sense for Sense::left, right otherwise.
Circle adjacent_circle(const Config& c, Sense side);

enum class TangentKind { outer, inner };

enum class TangentStatus {
    ok,
    not_found,   // inner tangent requested with center distance < 2
    degenerate,  // outer tangent with coincident centers: direction undefined
};

struct TangentResult {
    TangentStatus status{TangentStatus::ok};
    TangentSegment segment{};

    explicit operator bool() const { return status == TangentStatus::ok; }
};

/**
 * @brief Common tangent segment compatible with both traversal senses.
 *
 * Outer tangents join equal senses, inner tangents mixed senses; the
 * returned segment is the unique one such that leaving the first circle
 * along it and entering the second circle both continue the traversal
 * direction.
 */
TangentResult common_tangent(const Circle& a, const Circle& b, TangentKind kind);

/**
 * @brief Arclength swept travelling on @p circ from @p from_point to
 *        @p to_point in the circle's sense. Result in [0, 2*pi); equals the
 *        swept angle since the radius is 1.
 *
 * Throws Error(Errc::off_circle) when either point is not on the circle
 * within policy.geom_tol.
 */
double arc_between(const Circle& circ, Vec2 from_point, Vec2 to_point,
                   const NumericPolicy& policy = {});

/// Heading of a path traversing @p circ at a point on it.
double heading_on_circle(const Circle& circ, Vec2 point);

}  // namespace bcp::geom
