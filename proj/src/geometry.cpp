#include "bcp/geometry.hpp"

#include <cmath>

namespace bcp::geom {

AdjacentCircles adjacent_circles(const Config& c) {
    const Vec2 n = perp_left(c.tangent());
    return {Circle{c.position + n, Sense::left}, Circle{c.position - n, Sense::right}};
}

Circle adjacent_circle(const Config& c, Sense side) {
    const AdjacentCircles both = adjacent_circles(c);
    return side == Sense::left ? both.left : both.right;
}

namespace {

// Radial direction (center -> tangency point) for a circle whose traversal
// at the tangency point must continue along `dir`.
Vec2 radial_for_direction(Sense sense, Vec2 dir) {
    return sense == Sense::left ? perp_right(dir) : perp_left(dir);
}

}  // namespace

TangentResult common_tangent(const Circle& a, const Circle& b, TangentKind kind) {
    const Vec2 delta = b.center - a.center;
    const double d = delta.norm();

    if (kind == TangentKind::outer) {
        if (d < 1e-12) return {TangentStatus::degenerate, {}};
        const Vec2 u = delta * (1.0 / d);
        // Both tangency radii point the same way; the segment is parallel to
        // the center line and traversed along u.
        const Vec2 r = radial_for_direction(a.sense, u);
        TangentSegment seg;
        seg.from_point = a.center + r;
        seg.to_point = b.center + r;
        seg.from_circle = a;
        seg.to_circle = b;
        return {TangentStatus::ok, seg};
    }

    // Inner tangent: radii at the two tangency points are opposite, so the
    // unit radial n satisfies n . u = 2/d; it exists only for d >= 2.
    if (d < 2.0) return {TangentStatus::not_found, {}};
    const Vec2 u = delta * (1.0 / d);
    const double cos_b = 2.0 / d;
    const double sin_b = std::sqrt(std::max(0.0, 1.0 - cos_b * cos_b));
    // Sign chosen so the segment runs forward (positive component along u)
    // for the first circle's sense; the second circle's sense is the
    // opposite one by construction.
    const double sign = a.sense == Sense::left ? -1.0 : 1.0;
    const Vec2 n{u.x * cos_b - sign * sin_b * u.y, u.y * cos_b + sign * sin_b * u.x};
    TangentSegment seg;
    seg.from_point = a.center + n;
    seg.to_point = b.center - n;
    seg.from_circle = a;
    seg.to_circle = b;
    return {TangentStatus::ok, seg};
}

double arc_between(const Circle& circ, Vec2 from_point, Vec2 to_point,
                   const NumericPolicy& policy) {
    const Vec2 rf = from_point - circ.center;
    const Vec2 rt = to_point - circ.center;
    if (std::fabs(rf.norm() - 1.0) > policy.geom_tol)
        throw Error(Errc::off_circle, "arc_between: from_point is not on the circle");
    if (std::fabs(rt.norm() - 1.0) > policy.geom_tol)
        throw Error(Errc::off_circle, "arc_between: to_point is not on the circle");

    const double af = angle_of(rf);
    const double at = angle_of(rt);
    return circ.sense == Sense::left ? wrap_two_pi(at - af) : wrap_two_pi(af - at);
}

double heading_on_circle(const Circle& circ, Vec2 point) {
    const Vec2 r = point - circ.center;
    const Vec2 t = circ.sense == Sense::left ? perp_left(r) : perp_right(r);
    return wrap_two_pi(angle_of(t));
}

}  // namespace bcp::geom
