#pragma once
/**
 * @file numeric.hpp
 * @brief Planar vector type, angle arithmetic and the shared numeric policy.
 *
 * Everything downstream works in the unit-turn-radius normalisation: the
 * curvature bound is 1, so every arc lives on a unit circle and arc length
 * equals swept angle. Callers rescale at the boundary if they need another
 * bound.
 */

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bcp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Minimal 2D vector (double precision, value semantics).
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double xx, double yy) : x(xx), y(yy) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }

    constexpr double dot(Vec2 r) const { return x * r.x + y * r.y; }
    /// z-component of the 3D cross product; positive when r is ccw of *this.
    constexpr double cross(Vec2 r) const { return x * r.y - y * r.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
    constexpr double norm2() const { return x * x + y * y; }
};

/// Rotate by +90 degrees (counterclockwise quarter turn).
constexpr Vec2 perp_left(Vec2 v) { return {-v.y, v.x}; }
/// Rotate by -90 degrees (clockwise quarter turn).
constexpr Vec2 perp_right(Vec2 v) { return {v.y, -v.x}; }

inline Vec2 unit_from_angle(double a) { return {std::cos(a), std::sin(a)}; }
inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

inline Vec2 rotate(Vec2 v, double a) {
    const double c = std::cos(a), s = std::sin(a);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Wrap an angle to [0, 2*pi).
inline double wrap_two_pi(double a) {
    double m = std::fmod(a, kTwoPi);
    if (m < 0.0) m += kTwoPi;
    if (m >= kTwoPi) m = 0.0;  // fmod can land exactly on 2*pi after the add
    return m;
}

/// Wrap an angle to (-pi, pi].
inline double wrap_pi(double a) { return std::remainder(a, kTwoPi); }

/**
 * @brief Tolerances shared across the library.
 *
 * Passed explicitly wherever a tolerance matters; there is no hidden global
 * configuration. The defaults are the contract the test suites pin down.
 */
struct NumericPolicy {
    /// Absolute tolerance for geometric residuals (tangency, on-circle tests).
    double geom_tol = 1e-9;
    /// Position/heading residual allowed between a constructed path's
    /// endpoint and the requested terminal configuration.
    double endpoint_tol = 1e-9;
    /// Allowed overshoot of the discrete curvature estimate of sampled
    /// paths over the bound 1 (second differences of sampled headings
    /// overshoot by O(step)).
    double curvature_slack = 0.05;
    /// Components with length at or below this are dropped when the
    /// reduction loop re-canonicalises between steps.
    double length_eps = 1e-10;
};

/// Error categories surfaced by library operations.
enum class Errc {
    bad_input,         // malformed argument (negative length, bad step, ...)
    out_of_range,      // arclength query outside [0, length]
    off_circle,        // point handed to an arc sweep is not on the circle
    bad_step,          // non-positive sampling step
    bad_max_len,       // fragmentation bound outside (0, 1)
    radius_violation,  // polar-bound check with a sample at radius < 1
    unreachable,       // lattice goal not reached within bounds
    degenerate_window, // reduction window that canonicalisation should have removed
    iteration_cap,     // reduction loop exceeded its step budget
    internal,          // invariant believed unreachable was hit
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace bcp
