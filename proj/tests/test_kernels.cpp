#include "bcp/kernels.hpp"

#include "bcp/numeric.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace bcp;
namespace kd = bcp::kernels::detail;

namespace {

struct Columns {
    std::vector<double> a, b;
};

Columns random_columns(testsup::Rng& rng, std::size_t n, double lo = -10.0, double hi = 10.0) {
    std::uniform_real_distribution<double> val(lo, hi);
    Columns c;
    c.a.reserve(n);
    c.b.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.a.push_back(val(rng));
        c.b.push_back(val(rng));
    }
    return c;
}

bool close(double x, double y, double rel = 1e-11) {
    return std::fabs(x - y) <= rel * (1.0 + std::fabs(x) + std::fabs(y));
}

}  // namespace

TEST_CASE("scalar polyline length matches a hypot reference") {
    testsup::Rng rng(7);
    const auto c = random_columns(rng, 113);
    double want = 0.0;
    for (std::size_t i = 1; i < c.a.size(); ++i)
        want += std::hypot(c.a[i] - c.a[i - 1], c.b[i] - c.b[i - 1]);
    CHECK(close(kd::polyline_length_scalar(c.a.data(), c.b.data(), c.a.size()), want, 1e-9));
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!kd::avx2_supported()) {
        MESSAGE("avx2 not supported on this host; skipping equivalence checks");
        return;
    }
    testsup::Rng rng(8);
    for (const std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 16u, 33u, 64u, 1001u}) {
        const auto c = random_columns(rng, n);
        CHECK(close(kd::polyline_length_scalar(c.a.data(), c.b.data(), n),
                    kd::polyline_length_avx2(c.a.data(), c.b.data(), n)));
        CHECK(close(kd::min_distance_scalar(c.a.data(), c.b.data(), n, 0.3, -0.7),
                    kd::min_distance_avx2(c.a.data(), c.b.data(), n, 0.3, -0.7)));
        CHECK(close(kd::min_dot_scalar(c.a.data(), c.b.data(), n, 0.8, -0.6),
                    kd::min_dot_avx2(c.a.data(), c.b.data(), n, 0.8, -0.6)));

        // strictly increasing arclengths for the turn-rate kernel
        std::vector<double> ss(n), th(n);
        std::uniform_real_distribution<double> gap(1e-3, 0.2);
        std::uniform_real_distribution<double> ang(-8.0, 8.0);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s += gap(rng);
            ss[i] = s;
            th[i] = ang(rng);
        }
        CHECK(close(kd::max_abs_turn_rate_scalar(th.data(), ss.data(), n),
                    kd::max_abs_turn_rate_avx2(th.data(), ss.data(), n)));

        std::vector<double> ox_s(n), oy_s(n), ox_v(n), oy_v(n);
        kd::to_frame_scalar(c.a.data(), c.b.data(), n, 1.5, -2.5, 0.7, ox_s.data(), oy_s.data());
        kd::to_frame_avx2(c.a.data(), c.b.data(), n, 1.5, -2.5, 0.7, ox_v.data(), oy_v.data());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(close(ox_s[i], ox_v[i]));
            CHECK(close(oy_s[i], oy_v[i]));
        }

        const auto near = random_columns(rng, n, -1.4, 1.4);
        CHECK(kd::count_region_violations_scalar(near.a.data(), near.b.data(), n, 1e-9) ==
              kd::count_region_violations_avx2(near.a.data(), near.b.data(), n, 1e-9));
    }
}

TEST_CASE("region violation counting on hand-placed points") {
    // inside region; outside anchor disk; inside left disk; inside right disk
    const std::vector<double> xs{0.5, 1.6, 0.0, 0.0};
    const std::vector<double> ys{0.0, 0.0, 0.9, -0.9};
    CHECK(kd::count_region_violations_scalar(xs.data(), ys.data(), xs.size(), 1e-9) == 3);
    // boundary points count as members
    const std::vector<double> bx{1.0, 0.0};
    const std::vector<double> by{0.0, 0.0};
    CHECK(kd::count_region_violations_scalar(bx.data(), by.data(), bx.size(), 1e-9) == 0);
}

TEST_CASE("turn-rate kernel wraps across the angle seam") {
    const std::vector<double> th{6.28, 0.01};  // ~0.013 rad apart across the seam
    const std::vector<double> ss{0.0, 0.1};
    const double rate = kd::max_abs_turn_rate_scalar(th.data(), ss.data(), 2);
    CHECK(rate == doctest::Approx((0.01 + kTwoPi - 6.28) / 0.1));
}

TEST_CASE("backend selection") {
    const std::string before = kernels::active_backend();
    kernels::set_backend("scalar");
    CHECK(std::string(kernels::active_backend()) == "scalar");
    std::vector<double> xs{0.0, 3.0};
    std::vector<double> ys{0.0, 4.0};
    CHECK(kernels::polyline_length(xs, ys) == doctest::Approx(5.0));
    CHECK_THROWS_AS(kernels::set_backend("mmx"), Error);
    kernels::set_backend("auto");
    if (kd::avx2_supported()) CHECK(std::string(kernels::active_backend()) == "avx2");
    CHECK(std::string(kernels::active_backend()) == before);
}
