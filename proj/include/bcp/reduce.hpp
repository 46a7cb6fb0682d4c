#pragma once
/**
 * @file reduce.hpp
 * @brief Complexity reduction of cs paths: window detection, the shortening
 *        constructions for SCS / CCS / SCC / short-middle CCC / CCCC
 *        windows, admissible-component replacement, and the fixed-point
 *        loop driving any cs path toward complexity <= 3.
 *
 * Every rule exchanges a window for a strictly length-monotone replacement
 * between the window's endpoint configurations; a rule that cannot improve
 * a window returns nothing and the loop moves on. Reaching a path where no
 * rule fires and the complexity still exceeds 3 is impossible for valid
 * inputs and raises Errc::internal.
 */

#include "bcp/cs_path.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcp::reduce {

using path::CsPath;

enum class Pattern { C1, C2, SCS, CCS, SCC, CCC, CCCC };

std::string_view name(Pattern p);

/// A pattern match on a canonical component sequence. C slots match L or R
/// (adjacent C slots with distinct senses), S slots match segments; all
/// matched lengths are positive.
struct ComponentWindow {
    Pattern pattern;
    std::size_t start;  // first component index
    std::size_t span;   // number of components matched
};

/// All matches of every pattern, ordered by start index then pattern.
std::vector<ComponentWindow> find_windows(const CsPath& p);

struct ReductionStep {
    CsPath before;
    CsPath after;
    std::string rule;
    double length_delta{0.0};   // <= 0
    int complexity_delta{0};    // <= 0; not both zero
    bool boundary{false};       // set on flagged boundary outcomes
};

/// One line of JSON per step: rule id, deltas, after-path.
std::string step_to_json(const ReductionStep& step);

/**
 * @brief Replace an admissible C1/C2 window by its CSC replacement.
 *        Returns nothing when the window is non-admissible (no CSC between
 *        the window endpoints is at most the window's length).
 */
std::optional<ReductionStep> reduce_admissible(const CsPath& p, const ComponentWindow& w,
                                               const NumericPolicy& policy = {});

/**
 * @brief Shorten an SCS window: shrink the longer segment to the
 *        equal-segment normal form, then swap the far segment/arc pair for
 *        the arc pair on the circle tangent to the first segment's line and
 *        the terminal adjacent circle. Falls back to the plain CSC
 *        replacement when that circle does not exist. Returns nothing only
 *        in the zero-improvement limit (middle arc ~ 0).
 */
std::optional<ReductionStep> shorten_scs(const CsPath& p, const ComponentWindow& w,
                                         const NumericPolicy& policy = {});

/// Mirrored construction for CCS / SCC windows.
std::optional<ReductionStep> reduce_ccs_scc(const CsPath& p, const ComponentWindow& w,
                                            const NumericPolicy& policy = {});

/**
 * @brief Replace a CCC window whose middle arc is at most pi by a CSC
 *        between the window endpoints. At middle == pi the window is only
 *        flagged (no replacement is applied); below pi the replacement is
 *        strictly shorter.
 */
std::optional<ReductionStep> reduce_ccc_short_middle(const CsPath& p, const ComponentWindow& w,
                                                     const NumericPolicy& policy = {});

/**
 * @brief Descend from a CCCC window along the one-parameter family of
 *        center placements (middle centers ride circles of radius 2 about
 *        the fixed outer centers, staying mutually tangent) to a strictly
 *        shorter CCCC. Raises Errc::internal if no descent is found.
 */
std::optional<ReductionStep> cccc_instability(const CsPath& p, const ComponentWindow& w,
                                              const NumericPolicy& policy = {});

/**
 * @brief Length of the CCCC window family at parameter offset @p eps along
 *        the constrained center perturbation (for variational probes).
 */
double cccc_length_at(const CsPath& p, const ComponentWindow& w, double eps,
                      const NumericPolicy& policy = {});

struct ReduceResult {
    CsPath path;
    std::vector<ReductionStep> steps;
};

/**
 * @brief Apply rules (CCC-short-middle, SCS, CCS/SCC, admissible C1/C2,
 *        CCCC descent, in that priority) until none fires. Every accepted
 *        step strictly decreases (length, complexity) lexicographically.
 *        Throws Errc::iteration_cap beyond @p iteration_cap steps and
 *        Errc::internal on a quiescent path of complexity > 3.
 */
ReduceResult reduce_to_minimizer(const CsPath& p, const NumericPolicy& policy = {},
                                 std::size_t iteration_cap = 10000);

enum class Taxonomy { csc_form, ccc_long_middle, other };

/// Structural class of a path, ignoring components shorter than @p eps.
Taxonomy classify(const CsPath& p, double eps = 1e-6);

}  // namespace bcp::reduce
