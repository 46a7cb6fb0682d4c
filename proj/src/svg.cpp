#include "bcp/svg.hpp"

#include "bcp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace bcp::svg {

using geom::Config;
using path::CsPath;
using path::CsSense;

namespace {

struct Bounds {
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
    void add(Vec2 p, double pad = 0.0) {
        min_x = std::min(min_x, p.x - pad);
        min_y = std::min(min_y, p.y - pad);
        max_x = std::max(max_x, p.x + pad);
        max_y = std::max(max_y, p.y + pad);
    }
};

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.8g", v);
    return buf;
}

// One elliptical-arc command of sweep <= pi on the unit circle.
void arc_command(std::string& d, const Config& from, CsSense sense, double sweep) {
    const double dir = sense == CsSense::L ? 1.0 : -1.0;
    const Vec2 center = from.position + (sense == CsSense::L ? perp_left(from.tangent())
                                                             : perp_right(from.tangent()));
    const double a0 = angle_of(from.position - center);
    const Vec2 end = center + unit_from_angle(a0 + dir * sweep);
    const int large = sweep > kPi ? 1 : 0;
    const int flag = sense == CsSense::L ? 1 : 0;
    d += " A 1 1 0 " + std::to_string(large) + " " + std::to_string(flag) + " " +
         num(end.x) + " " + num(end.y);
}

void full_circle_subpath(std::string& d, Vec2 center) {
    // two half-turn arcs; sweep orientation does not matter for fills
    d += " M " + num(center.x + 1.0) + " " + num(center.y);
    d += " A 1 1 0 1 1 " + num(center.x - 1.0) + " " + num(center.y);
    d += " A 1 1 0 1 1 " + num(center.x + 1.0) + " " + num(center.y);
    d += " Z";
}

}  // namespace

std::string render(const CsPath& p, const RenderSpec& spec) {
    if (spec.width_px <= 0 || spec.height_px <= 0)
        throw Error(Errc::bad_input, "svg: dimensions must be positive");

    // Gather bounds from a coarse sweep of the path.
    Bounds box;
    const double total = path::length(p);
    box.add(p.start.position, 0.5);
    const int probes = 256;
    for (int i = 1; i <= probes; ++i)
        box.add(path::evaluate(p, total * i / probes).position, 0.5);
    const auto adj = geom::adjacent_circles(p.start);
    if (spec.show_adjacent_circles || spec.show_region) {
        box.add(adj.left.center, 1.1);
        box.add(adj.right.center, 1.1);
    }

    const double world_w = std::max(box.max_x - box.min_x, 1e-6);
    const double world_h = std::max(box.max_y - box.min_y, 1e-6);
    const double scale = std::min(spec.width_px / world_w, spec.height_px / world_h);
    const double tx = (spec.width_px - scale * (box.min_x + box.max_x)) * 0.5;
    const double ty = (spec.height_px + scale * (box.min_y + box.max_y)) * 0.5;
    const double stroke = 1.6 * spec.stroke_scale / scale;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.width_px) + "\" height=\"" + std::to_string(spec.height_px) +
           "\">\n";
    out += "<g transform=\"matrix(" + num(scale) + " 0 0 " + num(-scale) + " " + num(tx) +
           " " + num(ty) + ")\">\n";

    if (spec.show_region) {
        std::string d;
        full_circle_subpath(d, p.start.position);  // unit disk about the anchor
        full_circle_subpath(d, adj.left.center);
        full_circle_subpath(d, adj.right.center);
        out += "<clipPath id=\"anchor-disk\"><path d=\"";
        std::string clip;
        full_circle_subpath(clip, p.start.position);
        out += clip + "\"/></clipPath>\n";
        out += "<path clip-path=\"url(#anchor-disk)\" fill-rule=\"evenodd\" fill=\"#d9d9d9\" "
               "stroke=\"none\" d=\"" + d + "\"/>\n";
    }

    if (spec.show_adjacent_circles) {
        for (const auto& c : {adj.left, adj.right}) {
            out += "<circle cx=\"" + num(c.center.x) + "\" cy=\"" + num(c.center.y) +
                   "\" r=\"1\" fill=\"none\" stroke=\"#888888\" stroke-width=\"" +
                   num(0.6 * stroke) + "\" stroke-dasharray=\"" + num(6.0 / scale) + " " +
                   num(4.0 / scale) + "\"/>\n";
        }
    }

    // start marker: small solid triangle pointing along the initial heading
    {
        const Vec2 tip = p.start.position + p.start.tangent() * (7.0 / scale);
        const Vec2 left = p.start.position + perp_left(p.start.tangent()) * (3.0 / scale);
        const Vec2 right = p.start.position + perp_right(p.start.tangent()) * (3.0 / scale);
        out += "<path fill=\"#c0392b\" stroke=\"none\" d=\"M " + num(tip.x) + " " +
               num(tip.y) + " L " + num(left.x) + " " + num(left.y) + " L " + num(right.x) +
               " " + num(right.y) + " Z\"/>\n";
    }

    if (!p.components.empty()) {
        std::string d = "M " + num(p.start.position.x) + " " + num(p.start.position.y);
        Config cur = p.start;
        double consumed = 0.0;
        for (const auto& comp : p.components) {
            consumed += comp.length;
            const Config next = path::evaluate(p, consumed);
            if (comp.sense == CsSense::S) {
                d += " L " + num(next.position.x) + " " + num(next.position.y);
            } else if (comp.length > 1e-12) {
                // split long arcs so each command stays well below a full turn
                double remaining = comp.length;
                Config from = cur;
                while (remaining > kPi) {
                    arc_command(d, from, comp.sense, kPi * 0.5);
                    const double step_len = kPi * 0.5;
                    CsPath piece{from, {path::CsComponent(comp.sense, step_len)}};
                    from = path::endpoint(piece);
                    remaining -= step_len;
                }
                arc_command(d, from, comp.sense, remaining);
            }
            cur = next;
        }
        out += "<path fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"" + num(stroke) +
               "\" stroke-linecap=\"round\" d=\"" + d + "\"/>\n";
    }

    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace bcp::svg
