#pragma once
/**
 * @file cs_path.hpp
 * @brief Piecewise-constant-curvature paths: component sequences, arclength
 *        evaluation, length/complexity accounting and JSON serialization.
 */

#include "bcp/geometry.hpp"
#include "bcp/numeric.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bcp::path {

using geom::Config;

/// Turn sense of one component: left arc, straight segment, right arc.
enum class CsSense : char { L = 'L', S = 'S', R = 'R' };

char to_char(CsSense s);
CsSense sense_from_char(char c);

/**
 * @brief One constant-curvature piece. For arcs the arclength equals the
 *        turned angle (radius 1); arcs of a full turn or more are rejected.
 */
struct CsComponent {
    CsSense sense{CsSense::S};
    double length{0.0};

    CsComponent() = default;
    CsComponent(CsSense s, double len);
};

/// Start configuration plus ordered component list.
struct CsPath {
    Config start{};
    std::vector<CsComponent> components{};

    CsPath() = default;
    CsPath(Config s, std::vector<CsComponent> comps)
        : start(s), components(std::move(comps)) {}
};

double length(const CsPath& p);

/// Number of positive-length components after canonicalization.
int complexity(const CsPath& p);

/**
 * @brief Merge adjacent same-sense components and drop components of length
 *        <= drop_eps (exact zeros by default). Endpoint and length are
 *        preserved up to the dropped dust.
 */
CsPath canonicalize(const CsPath& p, double drop_eps = 0.0);

/// Pose after travelling @p s along the path; throws Errc::out_of_range for
/// s outside [0, length] beyond a small slack.
Config evaluate(const CsPath& p, double s);

Config endpoint(const CsPath& p);

/// Same geometric path traversed backwards (senses flip, order reverses).
CsPath reversed(const CsPath& p);

struct SampledPath;

/**
 * @brief Sample at arclengths {0, step, 2*step, ...} plus the exact total
 *        length. Throws Errc::bad_step for step <= 0.
 */
SampledPath sample(const CsPath& p, double step, const NumericPolicy& policy = {});

/// JSON with 17-significant-digit numbers; parse(serialize(p)) == p bit-exactly.
std::string to_json(const CsPath& p);
CsPath from_json(const std::string& text);

/**
 * @brief Arclength-ordered pose samples of an arbitrary bounded-curvature
 *        path, stored as parallel columns (kernel-friendly layout).
 *
 * Construction validates the ingestion invariants: strictly increasing s
 * starting at 0, positions consistent with headings and gaps, and the
 * discrete curvature bound |wrap(dtheta)|/ds <= 1 + curvature_slack.
 * Unit tangents are cached at ingestion.
 */
struct SampledPath {
    std::vector<double> s, x, y, theta;
    std::vector<double> tan_x, tan_y;  // cached cos/sin of theta

    static SampledPath from_columns(std::vector<double> s, std::vector<double> x,
                                    std::vector<double> y, std::vector<double> theta,
                                    const NumericPolicy& policy = {});

    std::size_t size() const { return s.size(); }
    double total_length() const { return s.back(); }
    /// Sum of chord lengths (differs from total_length by O(step^2)).
    double measured_length() const;
    Config config_at(std::size_t i) const { return Config(x[i], y[i], theta[i]); }
    Config front() const { return config_at(0); }
    Config back() const { return config_at(size() - 1); }

    /// Copy of the samples in [i0, i1] inclusive, with s rebased to 0.
    SampledPath slice(std::size_t i0, std::size_t i1) const;

    /// Unvalidated CSV columns (for callers that rescale before ingestion).
    struct RawColumns {
        std::vector<double> s, x, y, theta;
    };
    static RawColumns read_csv_columns(std::istream& in);

    /// CSV with header "s,x,y,theta", LF line endings.
    static SampledPath read_csv(std::istream& in, const NumericPolicy& policy = {});
    void write_csv(std::ostream& out) const;

private:
    SampledPath() = default;
    void validate(const NumericPolicy& policy);
};

}  // namespace bcp::path
