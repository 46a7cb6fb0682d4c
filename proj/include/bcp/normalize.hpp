#pragma once
/**
 * @file normalize.hpp
 * @brief Fragmentation of sampled paths and per-fragment CSC replacement.
 *
 * The pipeline: cut a sampled path into fragments shorter than 1, replace
 * each fragment by the CSC path joining its endpoint configurations (arcs
 * strictly shorter than pi, never longer than the fragment), concatenate
 * and canonicalise. The result is a cs path of no greater length.
 */

#include "bcp/cs_path.hpp"
#include "bcp/geometry.hpp"

#include <vector>

namespace bcp::norm {

using geom::Config;
using path::CsPath;
using path::SampledPath;

/// Ordered cut arclengths 0 = t0 < t1 < ... < tm = total, every gap < 1.
struct Fragmentation {
    std::vector<double> cut_points;

    std::size_t fragment_count() const {
        return cut_points.size() < 2 ? 0 : cut_points.size() - 1;
    }
};

/**
 * @brief Uniform cuts with spacing <= max_len (and strictly < 1).
 * Throws Errc::bad_max_len for max_len outside (0, 1).
 */
Fragmentation fragmentize(double total_length, double max_len);

/// One region-membership violation found by check_region.
struct RegionViolation {
    std::size_t sample_index;
    const char* condition;  // which membership condition failed
};

struct RegionReport {
    std::vector<RegionViolation> violations;
    bool ok() const { return violations.empty(); }
};

/**
 * @brief Check every sample of a fragment against the region of its anchor
 *        (unit disk about the anchor minus the open adjacent disks).
 *        Diagnostic only; valid bounded-curvature fragments produce an
 *        empty report.
 */
RegionReport check_region(const SampledPath& fragment, const NumericPolicy& policy = {});

/// True iff the tangent at every sample keeps a positive inner product with
/// the fragment's initial heading.
bool check_direction(const SampledPath& fragment);

/**
 * @brief CSC replacement of a fragment (length < 1, no negative direction):
 *        the shortest constructible CSC between the fragment's endpoint
 *        configurations among the candidates with both arcs < pi.
 */
CsPath replace_fragment(const SampledPath& fragment, const NumericPolicy& policy = {});

struct NormalizeResult {
    CsPath path;
    std::size_t fragment_count{0};
};

/**
 * @brief Fragment, replace and concatenate. Cut points snap to the nearest
 *        sample so fragment endpoints are taken directly from samples.
 */
NormalizeResult normalize(const SampledPath& p, double max_len = 0.9,
                          const NumericPolicy& policy = {});

}  // namespace bcp::norm
