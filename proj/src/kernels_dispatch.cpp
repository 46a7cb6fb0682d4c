#include "bcp/kernels.hpp"
#include "bcp/numeric.hpp"

#include <atomic>
#include <cstring>

namespace bcp::kernels {

namespace {

using detail::avx2_supported;

struct Backend {
    const char* name;
    double (*polyline_length)(const double*, const double*, std::size_t);
    double (*max_abs_turn_rate)(const double*, const double*, std::size_t);
    double (*min_distance)(const double*, const double*, std::size_t, double, double);
    double (*min_dot)(const double*, const double*, std::size_t, double, double);
    void (*to_frame)(const double*, const double*, std::size_t, double, double, double,
                     double*, double*);
    std::size_t (*count_region_violations)(const double*, const double*, std::size_t, double);
};

constexpr Backend kScalar{
    "scalar",
    detail::polyline_length_scalar,
    detail::max_abs_turn_rate_scalar,
    detail::min_distance_scalar,
    detail::min_dot_scalar,
    detail::to_frame_scalar,
    detail::count_region_violations_scalar,
};

constexpr Backend kAvx2{
    "avx2",
    detail::polyline_length_avx2,
    detail::max_abs_turn_rate_avx2,
    detail::min_distance_avx2,
    detail::min_dot_avx2,
    detail::to_frame_avx2,
    detail::count_region_violations_avx2,
};

const Backend* pick_auto() { return avx2_supported() ? &kAvx2 : &kScalar; }

std::atomic<const Backend*>& current() {
    static std::atomic<const Backend*> b{pick_auto()};
    return b;
}

}  // namespace

const char* active_backend() { return current().load()->name; }

void set_backend(const char* name) {
    if (std::strcmp(name, "auto") == 0) {
        current().store(pick_auto());
    } else if (std::strcmp(name, "scalar") == 0) {
        current().store(&kScalar);
    } else if (std::strcmp(name, "avx2") == 0) {
        if (!avx2_supported())
            throw Error(Errc::bad_input, "avx2 backend not supported on this host");
        current().store(&kAvx2);
    } else {
        throw Error(Errc::bad_input, std::string("unknown kernel backend: ") + name);
    }
}

double polyline_length(std::span<const double> xs, std::span<const double> ys) {
    return current().load()->polyline_length(xs.data(), ys.data(), xs.size());
}

double max_abs_turn_rate(std::span<const double> thetas, std::span<const double> ss) {
    return current().load()->max_abs_turn_rate(thetas.data(), ss.data(), thetas.size());
}

double min_distance(std::span<const double> xs, std::span<const double> ys, double cx,
                    double cy) {
    return current().load()->min_distance(xs.data(), ys.data(), xs.size(), cx, cy);
}

double min_dot(std::span<const double> xs, std::span<const double> ys, double ux, double uy) {
    return current().load()->min_dot(xs.data(), ys.data(), xs.size(), ux, uy);
}

void to_frame(std::span<const double> xs, std::span<const double> ys, double origin_x,
              double origin_y, double rot, std::span<double> out_xs, std::span<double> out_ys) {
    current().load()->to_frame(xs.data(), ys.data(), xs.size(), origin_x, origin_y, rot,
                               out_xs.data(), out_ys.data());
}

std::size_t count_region_violations(std::span<const double> xs, std::span<const double> ys,
                                    double tol) {
    return current().load()->count_region_violations(xs.data(), ys.data(), xs.size(), tol);
}

}  // namespace bcp::kernels
