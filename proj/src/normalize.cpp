#include "bcp/normalize.hpp"

#include "bcp/dubins.hpp"
#include "bcp/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace bcp::norm {

using dubins::DubinsSolution;
using dubins::PathType;

Fragmentation fragmentize(double total_length, double max_len) {
    if (!(max_len > 0.0) || !(max_len < 1.0))
        throw Error(Errc::bad_max_len, "fragmentize: max_len must lie in (0, 1)");
    Fragmentation f;
    if (total_length <= 0.0) {
        f.cut_points = {0.0};
        return f;
    }
    const auto m = static_cast<std::size_t>(std::ceil(total_length / max_len - 1e-12));
    const double gap = total_length / static_cast<double>(m);
    f.cut_points.reserve(m + 1);
    for (std::size_t i = 0; i < m; ++i)
        f.cut_points.push_back(gap * static_cast<double>(i));
    f.cut_points.push_back(total_length);
    return f;
}

RegionReport check_region(const SampledPath& fragment, const NumericPolicy& policy) {
    const Config z = fragment.front();
    const std::size_t n = fragment.size();
    std::vector<double> fx(n), fy(n);
    kernels::to_frame(fragment.x, fragment.y, z.position.x, z.position.y, z.heading, fx, fy);

    RegionReport report;
    // Fast path: count first, collect details only when something failed.
    if (kernels::count_region_violations(fx, fy, policy.geom_tol) == 0) return report;

    // Same squared comparisons as the counting kernel.
    const double outer2 = (1.0 + policy.geom_tol) * (1.0 + policy.geom_tol);
    const double inner2 = (1.0 - policy.geom_tol) * (1.0 - policy.geom_tol);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 q{fx[i], fy[i]};
        if (q.norm2() > outer2)
            report.violations.push_back({i, "outside unit disk about anchor"});
        else if ((q - Vec2{0.0, 1.0}).norm2() < inner2)
            report.violations.push_back({i, "inside left adjacent disk"});
        else if ((q - Vec2{0.0, -1.0}).norm2() < inner2)
            report.violations.push_back({i, "inside right adjacent disk"});
    }
    return report;
}

bool check_direction(const SampledPath& fragment) {
    const Vec2 x0 = fragment.front().tangent();
    return kernels::min_dot(fragment.tan_x, fragment.tan_y, x0.x, x0.y) > 0.0;
}

namespace {

// Shortest CSC between two configurations restricted to candidates whose
// arcs are both strictly below the cap. Candidates are tried in the solver's
// tie-break order, so equal lengths resolve deterministically.
std::optional<DubinsSolution> best_csc_capped(const Config& a, const Config& b,
                                              double arc_cap, const NumericPolicy& policy) {
    std::optional<DubinsSolution> best;
    for (const PathType t :
         {PathType::LSL, PathType::RSR, PathType::LSR, PathType::RSL}) {
        const auto cand = dubins::solve_csc(a, b, t, policy);
        if (!cand) continue;
        if (cand->lengths[0] >= arc_cap || cand->lengths[2] >= arc_cap) continue;
        if (!best || cand->total < best->total) best = cand;
    }
    return best;
}

}  // namespace

CsPath replace_fragment(const SampledPath& fragment, const NumericPolicy& policy) {
    if (!(fragment.total_length() < 1.0))
        throw Error(Errc::bad_input, "replace_fragment: fragment must be shorter than 1");
    if (!check_direction(fragment))
        throw Error(Errc::bad_input, "replace_fragment: fragment has a negative direction");

    const Config a = fragment.front();
    const Config b = fragment.back();
    const auto best = best_csc_capped(a, b, kPi, policy);
    if (!best)
        throw Error(Errc::internal,
                    "replace_fragment: no CSC with arcs < pi (cannot happen for a fragment)");
    return best->path;
}

NormalizeResult normalize(const SampledPath& p, double max_len, const NumericPolicy& policy) {
    const Fragmentation ideal = fragmentize(p.total_length(), max_len);

    // Snap each ideal cut to the nearest sample; endpoints of fragments are
    // then actual samples of the input.
    std::vector<std::size_t> cut_idx;
    cut_idx.push_back(0);
    for (std::size_t k = 1; k + 1 < ideal.cut_points.size(); ++k) {
        const double target = ideal.cut_points[k];
        const auto it = std::lower_bound(p.s.begin(), p.s.end(), target);
        std::size_t i = static_cast<std::size_t>(it - p.s.begin());
        if (i > 0 && (i == p.s.size() || target - p.s[i - 1] <= p.s[i] - target)) --i;
        if (i > cut_idx.back() && i + 1 < p.s.size()) cut_idx.push_back(i);
    }
    if (p.size() > 1) cut_idx.push_back(p.size() - 1);

    for (std::size_t k = 1; k < cut_idx.size(); ++k) {
        const double gap = p.s[cut_idx[k]] - p.s[cut_idx[k - 1]];
        if (!(gap < 1.0))
            throw Error(Errc::bad_input,
                        "normalize: sampling too coarse, snapped fragment " +
                            std::to_string(k - 1) + " has length " + std::to_string(gap));
    }

    NormalizeResult result;
    result.path.start = p.front();
    result.fragment_count = cut_idx.size() < 2 ? 0 : cut_idx.size() - 1;
    for (std::size_t k = 1; k < cut_idx.size(); ++k) {
        SampledPath frag = p.slice(cut_idx[k - 1], cut_idx[k]);
        CsPath rep;
        try {
            rep = replace_fragment(frag, policy);
        } catch (const Error& e) {
            throw Error(e.code(), "normalize: fragment " + std::to_string(k - 1) + ": " +
                                      e.what());
        }
        for (const auto& c : rep.components) result.path.components.push_back(c);
    }
    result.path = path::canonicalize(result.path);
    return result;
}

}  // namespace bcp::norm
