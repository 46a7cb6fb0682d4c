#pragma once
/**
 * @file svg.hpp
 * @brief SVG 1.1 rendering of cs paths. Arcs are emitted as native elliptical
 *        arc commands (unit radius under the world transform), so the
 *        rendered geometry is exact rather than a polyline approximation.
 */

#include "bcp/cs_path.hpp"

#include <string>

namespace bcp::svg {

struct RenderSpec {
    int width_px = 640;
    int height_px = 640;
    bool show_adjacent_circles = false;
    bool show_region = false;
    double stroke_scale = 1.0;
};

/// Render a cs path (plus optional adjacent circles of the start config and
/// the start region) to an SVG 1.1 document.
std::string render(const path::CsPath& p, const RenderSpec& spec = {});

}  // namespace bcp::svg
