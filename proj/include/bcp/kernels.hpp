#pragma once
/**
 * @file kernels.hpp
 * @brief Data-parallel inner loops over sampled-path columns.
 *
 * Every kernel ships as a scalar reference implementation plus an AVX2
 * variant; the front-end functions dispatch through pointers resolved once
 * at startup from CPU capabilities. The two backends compute the same
 * arithmetic (same squaring/rounding steps), so they agree to reassociation
 * error only; the equivalence suite pins that down.
 */

#include <cstddef>
#include <span>

namespace bcp::kernels {

/// Sum of chord lengths between consecutive samples. xs/ys parallel, size n.
double polyline_length(std::span<const double> xs, std::span<const double> ys);

/// max_i |wrap(theta[i+1]-theta[i])| / (s[i+1]-s[i]); 0 for fewer than 2 samples.
double max_abs_turn_rate(std::span<const double> thetas, std::span<const double> ss);

/// Minimum distance from the samples to the point (cx, cy).
double min_distance(std::span<const double> xs, std::span<const double> ys,
                    double cx, double cy);

/// min_i xs[i]*ux + ys[i]*uy.
double min_dot(std::span<const double> xs, std::span<const double> ys,
               double ux, double uy);

/// Rigid transform into an anchor frame: out = R(-rot) * (p - origin).
void to_frame(std::span<const double> xs, std::span<const double> ys,
              double origin_x, double origin_y, double rot,
              std::span<double> out_xs, std::span<double> out_ys);

/// Count samples (given in the anchor frame) outside the region
/// { |q| <= 1+tol, |q-(0,1)| >= 1-tol, |q-(0,-1)| >= 1-tol }.
std::size_t count_region_violations(std::span<const double> xs,
                                    std::span<const double> ys, double tol);

/// Name of the backend the front-ends currently dispatch to.
const char* active_backend();

/// Force a backend by name ("scalar", "avx2", "auto"); throws bcp::Error
/// with Errc::bad_input when the name is unknown or unsupported here.
void set_backend(const char* name);

// Reference and vector entry points, exposed for the equivalence tests.
namespace detail {
double polyline_length_scalar(const double* xs, const double* ys, std::size_t n);
double max_abs_turn_rate_scalar(const double* thetas, const double* ss, std::size_t n);
double min_distance_scalar(const double* xs, const double* ys, std::size_t n,
                           double cx, double cy);
double min_dot_scalar(const double* xs, const double* ys, std::size_t n,
                      double ux, double uy);
void to_frame_scalar(const double* xs, const double* ys, std::size_t n,
                     double ox, double oy, double rot, double* out_xs, double* out_ys);
std::size_t count_region_violations_scalar(const double* xs, const double* ys,
                                           std::size_t n, double tol);

bool avx2_supported();
double polyline_length_avx2(const double* xs, const double* ys, std::size_t n);
double max_abs_turn_rate_avx2(const double* thetas, const double* ss, std::size_t n);
double min_distance_avx2(const double* xs, const double* ys, std::size_t n,
                         double cx, double cy);
double min_dot_avx2(const double* xs, const double* ys, std::size_t n,
                    double ux, double uy);
void to_frame_avx2(const double* xs, const double* ys, std::size_t n,
                   double ox, double oy, double rot, double* out_xs, double* out_ys);
std::size_t count_region_violations_avx2(const double* xs, const double* ys,
                                         std::size_t n, double tol);
}  // namespace detail

}  // namespace bcp::kernels
