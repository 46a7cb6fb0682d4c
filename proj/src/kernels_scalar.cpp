// Scalar reference kernels. These define the semantics the SIMD variants
// must reproduce: distances reduce over squared norms with a single sqrt
// where that is monotone-safe, and angle wrapping uses round-to-nearest so
// both backends quantise identically.

#include "bcp/kernels.hpp"
#include "bcp/numeric.hpp"

#include <cmath>

namespace bcp::kernels::detail {

double polyline_length_scalar(const double* xs, const double* ys, std::size_t n) {
    double total = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double dx = xs[i] - xs[i - 1];
        const double dy = ys[i] - ys[i - 1];
        total += std::sqrt(dx * dx + dy * dy);
    }
    return total;
}

double max_abs_turn_rate_scalar(const double* thetas, const double* ss, std::size_t n) {
    double worst = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        double d = thetas[i] - thetas[i - 1];
        d -= kTwoPi * std::nearbyint(d / kTwoPi);
        const double rate = std::fabs(d) / (ss[i] - ss[i - 1]);
        if (rate > worst) worst = rate;
    }
    return worst;
}

double min_distance_scalar(const double* xs, const double* ys, std::size_t n,
                           double cx, double cy) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - cx;
        const double dy = ys[i] - cy;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best) best = d2;
    }
    return std::sqrt(best);
}

double min_dot_scalar(const double* xs, const double* ys, std::size_t n,
                      double ux, double uy) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = xs[i] * ux + ys[i] * uy;
        if (d < best) best = d;
    }
    return best;
}

void to_frame_scalar(const double* xs, const double* ys, std::size_t n,
                     double ox, double oy, double rot, double* out_xs, double* out_ys) {
    const double c = std::cos(rot);
    const double s = std::sin(rot);
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - ox;
        const double dy = ys[i] - oy;
        out_xs[i] = c * dx + s * dy;
        out_ys[i] = -s * dx + c * dy;
    }
}

std::size_t count_region_violations_scalar(const double* xs, const double* ys,
                                           std::size_t n, double tol) {
    const double outer2 = (1.0 + tol) * (1.0 + tol);
    const double inner2 = (1.0 - tol) * (1.0 - tol);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = xs[i];
        const double y = ys[i];
        const double r2 = x * x + y * y;
        const double dl = x * x + (y - 1.0) * (y - 1.0);
        const double dr = x * x + (y + 1.0) * (y + 1.0);
        const bool ok = r2 <= outer2 && dl >= inner2 && dr >= inner2;
        if (!ok) ++count;
    }
    return count;
}

}  // namespace bcp::kernels::detail
