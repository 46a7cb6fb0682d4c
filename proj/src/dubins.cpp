#include "bcp/dubins.hpp"

#include <cmath>

namespace bcp::dubins {

using geom::adjacent_circle;
using geom::arc_between;
using geom::Circle;
using geom::common_tangent;
using geom::Sense;
using geom::TangentKind;
using geom::TangentStatus;
using path::CsComponent;
using path::CsSense;

std::string_view name(PathType t) {
    switch (t) {
        case PathType::LSL: return "LSL";
        case PathType::RSR: return "RSR";
        case PathType::LSR: return "LSR";
        case PathType::RSL: return "RSL";
        case PathType::RLR: return "RLR";
        case PathType::LRL: return "LRL";
    }
    return "?";
}

bool is_ccc(PathType t) { return t == PathType::RLR || t == PathType::LRL; }

namespace {

Sense first_sense(PathType t) {
    switch (t) {
        case PathType::LSL:
        case PathType::LSR:
        case PathType::LRL: return Sense::left;
        default: return Sense::right;
    }
}

Sense last_sense(PathType t) {
    switch (t) {
        case PathType::LSL:
        case PathType::RSL:
        case PathType::LRL: return Sense::left;
        default: return Sense::right;
    }
}

CsSense to_cs(Sense s) { return s == Sense::left ? CsSense::L : CsSense::R; }

void check_endpoint(const DubinsSolution& sol, const Config& y, const NumericPolicy& policy) {
    const Config end = path::endpoint(sol.path);
    const double pos_err = (end.position - y.position).norm();
    const double ang_err = std::fabs(wrap_pi(end.heading - y.heading));
    if (pos_err > policy.endpoint_tol || ang_err > policy.endpoint_tol)
        throw Error(Errc::internal, "dubins: constructed path misses the terminal config");
}

}  // namespace

std::optional<DubinsSolution> solve_csc(const Config& x, const Config& y, PathType t,
                                        const NumericPolicy& policy) {
    if (is_ccc(t)) throw Error(Errc::bad_input, "solve_csc: CCC type requested");
    const Sense sf = first_sense(t);
    const Sense sl = last_sense(t);
    const Circle cx = adjacent_circle(x, sf);
    const Circle cy = adjacent_circle(y, sl);
    const TangentKind kind = sf == sl ? TangentKind::outer : TangentKind::inner;

    const auto tan = common_tangent(cx, cy, kind);
    if (tan.status == TangentStatus::not_found) return std::nullopt;

    DubinsSolution sol;
    sol.path_type = t;
    sol.path.start = x;

    if (tan.status == TangentStatus::degenerate) {
        // Coincident same-sense adjacent circles: the whole path is a single
        // arc on the shared circle.
        const double arc = arc_between(cx, x.position, y.position, policy);
        sol.lengths = {arc, 0.0, 0.0};
        sol.path.components = {CsComponent(to_cs(sf), arc)};
    } else {
        const double t1 = arc_between(cx, x.position, tan.segment.from_point, policy);
        const double seg = tan.segment.length();
        const double t2 = arc_between(cy, tan.segment.to_point, y.position, policy);
        sol.lengths = {t1, seg, t2};
        sol.path.components = {CsComponent(to_cs(sf), t1), CsComponent(CsSense::S, seg),
                               CsComponent(to_cs(sl), t2)};
    }
    sol.total = sol.lengths[0] + sol.lengths[1] + sol.lengths[2];
    check_endpoint(sol, y, policy);
    return sol;
}

std::optional<DubinsSolution> solve_ccc(const Config& x, const Config& y, PathType t,
                                        const NumericPolicy& policy) {
    if (!is_ccc(t)) throw Error(Errc::bad_input, "solve_ccc: CSC type requested");
    const Sense outer = first_sense(t);
    const Circle cx = adjacent_circle(x, outer);
    const Circle cy = adjacent_circle(y, outer);

    const Vec2 delta = cy.center - cx.center;
    const double d = delta.norm();
    if (d > 4.0) return std::nullopt;

    // Middle circle centers: distance 2 from both outer centers. The two
    // branches are reflections across the center line; their middle sweeps
    // sum to 2*pi, so exactly one is >= pi.
    const Vec2 mid = (cx.center + cy.center) * 0.5;
    const double h = std::sqrt(std::max(0.0, 4.0 - 0.25 * d * d));
    Vec2 n{0.0, 0.0};
    if (d > 1e-12) n = perp_left(delta * (1.0 / d));
    else n = Vec2{1.0, 0.0};  // coincident outer circles: any diameter direction

    const Sense mid_sense = outer == Sense::left ? Sense::right : Sense::left;

    std::optional<DubinsSolution> best;
    for (const double side : {+1.0, -1.0}) {
        const Vec2 m = mid + n * (side * h);
        const Circle cm{m, mid_sense};
        const Vec2 p = (cx.center + m) * 0.5;
        const Vec2 q = (m + cy.center) * 0.5;
        const double middle = arc_between(cm, p, q, policy);
        if (middle < kPi - policy.geom_tol) continue;

        DubinsSolution sol;
        sol.path_type = t;
        sol.boundary = middle <= kPi + policy.geom_tol;
        const double t1 = arc_between(cx, x.position, p, policy);
        const double t3 = arc_between(cy, q, y.position, policy);
        sol.lengths = {t1, middle, t3};
        sol.total = t1 + middle + t3;
        sol.path.start = x;
        sol.path.components = {CsComponent(to_cs(outer), t1),
                               CsComponent(to_cs(mid_sense), middle),
                               CsComponent(to_cs(outer), t3)};
        check_endpoint(sol, y, policy);
        if (!best || sol.total < best->total) best = sol;
        if (h < 1e-12) break;  // branches coincide at d == 4
    }
    return best;
}

std::array<std::optional<DubinsSolution>, 6> all_candidates(const Config& x, const Config& y,
                                                            const NumericPolicy& policy) {
    std::array<std::optional<DubinsSolution>, 6> out;
    for (std::size_t i = 0; i < kAllTypes.size(); ++i) {
        const PathType t = kAllTypes[i];
        out[i] = is_ccc(t) ? solve_ccc(x, y, t, policy) : solve_csc(x, y, t, policy);
    }
    return out;
}

DubinsSolution solve_dubins(const Config& x, const Config& y, const NumericPolicy& policy) {
    const auto candidates = all_candidates(x, y, policy);
    const DubinsSolution* best = nullptr;
    for (const auto& c : candidates) {
        if (!c) continue;
        if (!best || c->total < best->total) best = &*c;
    }
    if (!best)
        throw Error(Errc::internal, "dubins: no candidate constructible (cannot happen)");
    return *best;
}

}  // namespace bcp::dubins
