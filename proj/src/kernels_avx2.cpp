// AVX2 kernel variants. Compiled with per-function target attributes so the
// translation unit builds on any x86-64 toolchain; dispatch guards execution
// behind a runtime CPUID check. Non-x86 builds compile the stubs at the
// bottom and never select this backend.

#include "bcp/kernels.hpp"
#include "bcp/numeric.hpp"

#include <cmath>
#include <limits>

#if defined(__x86_64__) || defined(_M_X64)
#define BCP_HAVE_AVX2_BACKEND 1
#include <immintrin.h>
#else
#define BCP_HAVE_AVX2_BACKEND 0
#endif

namespace bcp::kernels::detail {

#if BCP_HAVE_AVX2_BACKEND

bool avx2_supported() { return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"); }

namespace {

__attribute__((target("avx2,fma"))) inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

__attribute__((target("avx2,fma"))) inline double hmin(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_min_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_min_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

__attribute__((target("avx2,fma"))) inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

__attribute__((target("avx2,fma")))
double polyline_length_avx2(const double* xs, const double* ys, std::size_t n) {
    if (n < 2) return 0.0;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 1;
    for (; i + 3 < n; i += 4) {
        const __m256d x1 = _mm256_loadu_pd(xs + i);
        const __m256d x0 = _mm256_loadu_pd(xs + i - 1);
        const __m256d y1 = _mm256_loadu_pd(ys + i);
        const __m256d y0 = _mm256_loadu_pd(ys + i - 1);
        const __m256d dx = _mm256_sub_pd(x1, x0);
        const __m256d dy = _mm256_sub_pd(y1, y0);
        const __m256d d2 = _mm256_fmadd_pd(dx, dx, _mm256_mul_pd(dy, dy));
        acc = _mm256_add_pd(acc, _mm256_sqrt_pd(d2));
    }
    double total = hsum(acc);
    for (; i < n; ++i) {
        const double dx = xs[i] - xs[i - 1];
        const double dy = ys[i] - ys[i - 1];
        total += std::sqrt(dx * dx + dy * dy);
    }
    return total;
}

__attribute__((target("avx2,fma")))
double max_abs_turn_rate_avx2(const double* thetas, const double* ss, std::size_t n) {
    if (n < 2) return 0.0;
    const __m256d two_pi = _mm256_set1_pd(kTwoPi);
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d worst = _mm256_setzero_pd();
    std::size_t i = 1;
    for (; i + 3 < n; i += 4) {
        const __m256d t1 = _mm256_loadu_pd(thetas + i);
        const __m256d t0 = _mm256_loadu_pd(thetas + i - 1);
        const __m256d s1 = _mm256_loadu_pd(ss + i);
        const __m256d s0 = _mm256_loadu_pd(ss + i - 1);
        __m256d d = _mm256_sub_pd(t1, t0);
        const __m256d k = _mm256_round_pd(_mm256_div_pd(d, two_pi),
                                          _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        d = _mm256_fnmadd_pd(two_pi, k, d);
        const __m256d rate =
            _mm256_div_pd(_mm256_and_pd(d, abs_mask), _mm256_sub_pd(s1, s0));
        worst = _mm256_max_pd(worst, rate);
    }
    double best = hmax(worst);
    for (; i < n; ++i) {
        double d = thetas[i] - thetas[i - 1];
        d -= kTwoPi * std::nearbyint(d / kTwoPi);
        const double rate = std::fabs(d) / (ss[i] - ss[i - 1]);
        if (rate > best) best = rate;
    }
    return best;
}

__attribute__((target("avx2,fma")))
double min_distance_avx2(const double* xs, const double* ys, std::size_t n,
                         double cx, double cy) {
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vcy = _mm256_set1_pd(cy);
    __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 3 < n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vcx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vcy);
        best = _mm256_min_pd(best, _mm256_fmadd_pd(dx, dx, _mm256_mul_pd(dy, dy)));
    }
    double b = hmin(best);
    for (; i < n; ++i) {
        const double dx = xs[i] - cx;
        const double dy = ys[i] - cy;
        const double d2 = dx * dx + dy * dy;
        if (d2 < b) b = d2;
    }
    return std::sqrt(b);
}

__attribute__((target("avx2,fma")))
double min_dot_avx2(const double* xs, const double* ys, std::size_t n,
                    double ux, double uy) {
    const __m256d vux = _mm256_set1_pd(ux);
    const __m256d vuy = _mm256_set1_pd(uy);
    __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 3 < n; i += 4) {
        const __m256d d = _mm256_fmadd_pd(_mm256_loadu_pd(xs + i), vux,
                                          _mm256_mul_pd(_mm256_loadu_pd(ys + i), vuy));
        best = _mm256_min_pd(best, d);
    }
    double b = hmin(best);
    for (; i < n; ++i) {
        const double d = xs[i] * ux + ys[i] * uy;
        if (d < b) b = d;
    }
    return b;
}

__attribute__((target("avx2,fma")))
void to_frame_avx2(const double* xs, const double* ys, std::size_t n,
                   double ox, double oy, double rot, double* out_xs, double* out_ys) {
    const double c = std::cos(rot);
    const double s = std::sin(rot);
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    const __m256d vox = _mm256_set1_pd(ox);
    const __m256d voy = _mm256_set1_pd(oy);
    std::size_t i = 0;
    for (; i + 3 < n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vox);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), voy);
        _mm256_storeu_pd(out_xs + i, _mm256_fmadd_pd(vc, dx, _mm256_mul_pd(vs, dy)));
        _mm256_storeu_pd(out_ys + i, _mm256_fnmadd_pd(vs, dx, _mm256_mul_pd(vc, dy)));
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - ox;
        const double dy = ys[i] - oy;
        out_xs[i] = c * dx + s * dy;
        out_ys[i] = -s * dx + c * dy;
    }
}

__attribute__((target("avx2,fma")))
std::size_t count_region_violations_avx2(const double* xs, const double* ys,
                                         std::size_t n, double tol) {
    const __m256d outer2 = _mm256_set1_pd((1.0 + tol) * (1.0 + tol));
    const __m256d inner2 = _mm256_set1_pd((1.0 - tol) * (1.0 - tol));
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 3 < n; i += 4) {
        const __m256d x = _mm256_loadu_pd(xs + i);
        const __m256d y = _mm256_loadu_pd(ys + i);
        const __m256d x2 = _mm256_mul_pd(x, x);
        const __m256d r2 = _mm256_fmadd_pd(y, y, x2);
        const __m256d yl = _mm256_sub_pd(y, one);
        const __m256d yr = _mm256_add_pd(y, one);
        const __m256d dl = _mm256_fmadd_pd(yl, yl, x2);
        const __m256d dr = _mm256_fmadd_pd(yr, yr, x2);
        __m256d ok = _mm256_cmp_pd(r2, outer2, _CMP_LE_OQ);
        ok = _mm256_and_pd(ok, _mm256_cmp_pd(dl, inner2, _CMP_GE_OQ));
        ok = _mm256_and_pd(ok, _mm256_cmp_pd(dr, inner2, _CMP_GE_OQ));
        count += 4 - static_cast<std::size_t>(__builtin_popcount(
                         static_cast<unsigned>(_mm256_movemask_pd(ok))));
    }
    count += count_region_violations_scalar(xs + i, ys + i, n - i, tol);
    return count;
}

#else  // !BCP_HAVE_AVX2_BACKEND

bool avx2_supported() { return false; }

double polyline_length_avx2(const double* xs, const double* ys, std::size_t n) {
    return polyline_length_scalar(xs, ys, n);
}
double max_abs_turn_rate_avx2(const double* thetas, const double* ss, std::size_t n) {
    return max_abs_turn_rate_scalar(thetas, ss, n);
}
double min_distance_avx2(const double* xs, const double* ys, std::size_t n,
                         double cx, double cy) {
    return min_distance_scalar(xs, ys, n, cx, cy);
}
double min_dot_avx2(const double* xs, const double* ys, std::size_t n,
                    double ux, double uy) {
    return min_dot_scalar(xs, ys, n, ux, uy);
}
void to_frame_avx2(const double* xs, const double* ys, std::size_t n,
                   double ox, double oy, double rot, double* out_xs, double* out_ys) {
    to_frame_scalar(xs, ys, n, ox, oy, rot, out_xs, out_ys);
}
std::size_t count_region_violations_avx2(const double* xs, const double* ys,
                                         std::size_t n, double tol) {
    return count_region_violations_scalar(xs, ys, n, tol);
}

#endif

}  // namespace bcp::kernels::detail
