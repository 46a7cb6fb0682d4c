#include "bcp/reduce.hpp"

#include "bcp/dubins.hpp"
#include "bcp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace bcp::reduce {

using geom::adjacent_circle;
using geom::arc_between;
using geom::Circle;
using geom::Config;
using geom::opposite;
using geom::Sense;
using path::CsComponent;
using path::CsSense;

std::string_view name(Pattern p) {
    switch (p) {
        case Pattern::C1: return "C1";
        case Pattern::C2: return "C2";
        case Pattern::SCS: return "SCS";
        case Pattern::CCS: return "CCS";
        case Pattern::SCC: return "SCC";
        case Pattern::CCC: return "CCC";
        case Pattern::CCCC: return "CCCC";
    }
    return "?";
}

namespace {

constexpr double kLexEps = 1e-12;

struct PatternDef {
    Pattern pattern;
    std::string_view slots;
};

constexpr std::array<PatternDef, 7> kPatterns{{{Pattern::C1, "CSCSC"},
                                               {Pattern::C2, "CSCCSC"},
                                               {Pattern::SCS, "SCS"},
                                               {Pattern::CCS, "CCS"},
                                               {Pattern::SCC, "SCC"},
                                               {Pattern::CCC, "CCC"},
                                               {Pattern::CCCC, "CCCC"}}};

bool matches(const std::vector<CsComponent>& comps, std::size_t i, std::string_view slots) {
    if (i + slots.size() > comps.size()) return false;
    for (std::size_t j = 0; j < slots.size(); ++j) {
        const CsComponent& c = comps[i + j];
        if (!(c.length > 0.0)) return false;
        if (slots[j] == 'S') {
            if (c.sense != CsSense::S) return false;
        } else {
            if (c.sense == CsSense::S) return false;
            // consecutive arcs in a window must alternate turn direction
            if (j > 0 && slots[j - 1] == 'C' && comps[i + j - 1].sense == c.sense)
                return false;
        }
    }
    return true;
}

Config config_before(const CsPath& p, std::size_t idx) {
    CsPath prefix{p.start, {p.components.begin(),
                            p.components.begin() + static_cast<std::ptrdiff_t>(idx)}};
    return path::endpoint(prefix);
}

struct WindowCtx {
    Config a;      // configuration entering the window
    Config b;      // configuration leaving the window
    double length; // sum of window component lengths
};

WindowCtx window_ctx(const CsPath& p, const ComponentWindow& w) {
    WindowCtx ctx;
    ctx.a = config_before(p, w.start);
    CsPath win{ctx.a, {p.components.begin() + static_cast<std::ptrdiff_t>(w.start),
                       p.components.begin() + static_cast<std::ptrdiff_t>(w.start + w.span)}};
    ctx.b = path::endpoint(win);
    ctx.length = path::length(win);
    return ctx;
}

Sense sense_of(CsSense s) { return s == CsSense::L ? Sense::left : Sense::right; }
CsSense cs_of(Sense s) { return s == Sense::left ? CsSense::L : CsSense::R; }

/// Splice a replacement into the window, canonicalise and validate the
/// step: endpoint preserved and (length, complexity) lexicographically
/// decreased. Returns nothing for a candidate that fails either gate.
std::optional<ReductionStep> make_step(const CsPath& p, const ComponentWindow& w,
                                       const std::vector<CsComponent>& replacement,
                                       const char* rule, const NumericPolicy& policy) {
    CsPath after;
    after.start = p.start;
    after.components.assign(p.components.begin(),
                            p.components.begin() + static_cast<std::ptrdiff_t>(w.start));
    after.components.insert(after.components.end(), replacement.begin(), replacement.end());
    after.components.insert(after.components.end(),
                            p.components.begin() +
                                static_cast<std::ptrdiff_t>(w.start + w.span),
                            p.components.end());
    after = path::canonicalize(after, policy.length_eps);

    const Config e0 = path::endpoint(p);
    const Config e1 = path::endpoint(after);
    if ((e1.position - e0.position).norm() > policy.endpoint_tol ||
        std::fabs(wrap_pi(e1.heading - e0.heading)) > policy.endpoint_tol)
        return std::nullopt;

    const double dlen = path::length(after) - path::length(p);
    const int dcomp = complexity(after) - complexity(p);
    if (dlen > kLexEps) return std::nullopt;
    if (!(dlen < -kLexEps || dcomp < 0)) return std::nullopt;

    ReductionStep step;
    step.before = p;
    step.after = std::move(after);
    step.rule = rule;
    step.length_delta = dlen;
    step.complexity_delta = dcomp;
    return step;
}

std::optional<dubins::DubinsSolution> best_csc(const Config& a, const Config& b,
                                               const NumericPolicy& policy) {
    std::optional<dubins::DubinsSolution> best;
    for (const auto t : {dubins::PathType::LSL, dubins::PathType::RSR, dubins::PathType::LSR,
                         dubins::PathType::RSL}) {
        const auto cand = dubins::solve_csc(a, b, t, policy);
        if (!cand) continue;
        if (!best || cand->total < best->total) best = cand;
    }
    return best;
}

struct SccCandidate {
    std::vector<CsComponent> components;
    double total;
};

/**
 * The tangent-circle swap behind the SCS/SCC shortenings: given a window
 * starting with a segment along line L0 (config @p p0) and ending at config
 * @p q, place a circle tangent to L0 on the turn side and tangent to the
 * adjacent circle of @p q on the far side, and route
 * segment -> arc -> arc. Up to two placements exist (the two intersections
 * of the offset line with the radius-2 circle about the terminal center).
 */
std::vector<SccCandidate> scc_swap_candidates(const Config& p0, const Config& q,
                                              Sense mid_sense, const NumericPolicy& policy) {
    std::vector<SccCandidate> out;
    const Vec2 t = p0.tangent();
    const Vec2 n = mid_sense == Sense::left ? perp_left(t) : perp_right(t);
    const Circle terminal = adjacent_circle(q, opposite(mid_sense));

    // |base + u*t - c_f|^2 = 4, base on the offset line.
    const Vec2 base = p0.position + n;
    const Vec2 w = base - terminal.center;
    const double bq = t.dot(w);
    const double cq = w.norm2() - 4.0;
    const double disc = bq * bq - cq;
    if (disc < 0.0) return out;
    const double sq = std::sqrt(disc);

    for (const double u : {-bq - sq, -bq + sq}) {
        if (u < -1e-12) continue;  // tangency point behind the segment start
        const double seg = std::max(u, 0.0);
        const Vec2 c2 = base + t * seg;
        const Vec2 foot = p0.position + t * seg;
        const Vec2 meet = (c2 + terminal.center) * 0.5;
        try {
            const double arc_mid = arc_between(Circle{c2, mid_sense}, foot, meet, policy);
            const double arc_end = arc_between(terminal, meet, q.position, policy);
            SccCandidate cand;
            cand.components = {CsComponent(CsSense::S, seg),
                               CsComponent(cs_of(mid_sense), arc_mid),
                               CsComponent(cs_of(opposite(mid_sense)), arc_end)};
            cand.total = seg + arc_mid + arc_end;
            out.push_back(std::move(cand));
        } catch (const Error&) {
            // degenerate placement (coincident centers); skip
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SccCandidate& l, const SccCandidate& r) { return l.total < r.total; });
    return out;
}

std::vector<CsComponent> reverse_components(const std::vector<CsComponent>& comps) {
    std::vector<CsComponent> out;
    out.reserve(comps.size());
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
        CsSense s = it->sense;
        if (s == CsSense::L) s = CsSense::R;
        else if (s == CsSense::R) s = CsSense::L;
        out.emplace_back(s, it->length);
    }
    return out;
}

}  // namespace

std::vector<ComponentWindow> find_windows(const CsPath& p) {
    std::vector<ComponentWindow> out;
    for (std::size_t i = 0; i < p.components.size(); ++i)
        for (const auto& def : kPatterns)
            if (matches(p.components, i, def.slots))
                out.push_back({def.pattern, i, def.slots.size()});
    std::sort(out.begin(), out.end(), [](const ComponentWindow& l, const ComponentWindow& r) {
        if (l.start != r.start) return l.start < r.start;
        return static_cast<int>(l.pattern) < static_cast<int>(r.pattern);
    });
    return out;
}

std::string step_to_json(const ReductionStep& step) {
    char head[128];
    std::snprintf(head, sizeof head, "{\"rule\": \"%s\", \"length_delta\": %.17g, "
                                     "\"complexity_delta\": %d, \"after\": ",
                  step.rule.c_str(), step.length_delta, step.complexity_delta);
    return std::string(head) + path::to_json(step.after) + "}";
}

std::optional<ReductionStep> reduce_admissible(const CsPath& p, const ComponentWindow& w,
                                               const NumericPolicy& policy) {
    if (w.pattern != Pattern::C1 && w.pattern != Pattern::C2)
        throw Error(Errc::bad_input, "reduce_admissible: window is not C1/C2");
    const WindowCtx ctx = window_ctx(p, w);
    const auto cand = best_csc(ctx.a, ctx.b, policy);
    if (!cand || cand->total > ctx.length + kLexEps) return std::nullopt;  // non-admissible
    return make_step(p, w, cand->path.components, "c1_c2_replace", policy);
}

std::optional<ReductionStep> shorten_scs(const CsPath& p, const ComponentWindow& w,
                                         const NumericPolicy& policy) {
    if (w.pattern != Pattern::SCS)
        throw Error(Errc::bad_input, "shorten_scs: window is not SCS");
    const double first_seg = p.components[w.start].length;
    const double middle = p.components[w.start + 1].length;
    const double last_seg = p.components[w.start + 2].length;
    if (!(middle > 0.0))
        throw Error(Errc::degenerate_window, "shorten_scs: zero middle arc");
    const Sense mid_sense = sense_of(p.components[w.start + 1].sense);
    const WindowCtx ctx = window_ctx(p, w);

    // Equal-segment normal form: cut the longer segment, keep the remainder
    // as a prefix (or, mirrored, a suffix).
    const bool mirrored = last_seg > first_seg;
    const double extra = std::fabs(first_seg - last_seg);

    Config p0;
    Config q;
    Sense sub_sense;
    if (!mirrored) {
        p0 = Config(ctx.a.position + ctx.a.tangent() * extra, ctx.a.heading);
        q = ctx.b;
        sub_sense = mid_sense;
    } else {
        // Reverse the window: the long segment becomes the first one.
        p0 = Config(ctx.b.position - ctx.b.tangent() * extra, ctx.b.heading + kPi);
        q = ctx.a.reversed();
        sub_sense = opposite(mid_sense);
    }

    for (const auto& cand : scc_swap_candidates(p0, q, sub_sense, policy)) {
        if (!(cand.total < ctx.length - extra - kLexEps)) continue;
        std::vector<CsComponent> rep;
        if (!mirrored) {
            rep.emplace_back(CsSense::S, extra + cand.components[0].length);
            rep.push_back(cand.components[1]);
            rep.push_back(cand.components[2]);
        } else {
            rep = reverse_components(cand.components);
            rep.back().length += extra;
        }
        if (auto step = make_step(p, w, rep, "scs_shorten", policy)) return step;
    }

    // The tangent swap needs the terminal adjacent circle within reach of
    // the first segment's line (deep middle arcs); otherwise fall back to
    // the plain CSC replacement of the window.
    if (const auto csc = best_csc(ctx.a, ctx.b, policy);
        csc && csc->total < ctx.length - kLexEps)
        if (auto step = make_step(p, w, csc->path.components, "scs_shorten", policy))
            return step;
    return std::nullopt;
}

std::optional<ReductionStep> reduce_ccs_scc(const CsPath& p, const ComponentWindow& w,
                                            const NumericPolicy& policy) {
    if (w.pattern != Pattern::SCC && w.pattern != Pattern::CCS)
        throw Error(Errc::bad_input, "reduce_ccs_scc: window is not SCC/CCS");
    for (std::size_t j = 0; j < w.span; ++j)
        if (!(p.components[w.start + j].length > 0.0))
            throw Error(Errc::degenerate_window, "reduce_ccs_scc: zero-length component");
    const WindowCtx ctx = window_ctx(p, w);

    const bool is_ccs = w.pattern == Pattern::CCS;
    Config p0;
    Config q;
    Sense mid_sense;
    if (!is_ccs) {
        p0 = ctx.a;
        q = ctx.b;
        mid_sense = sense_of(p.components[w.start + 1].sense);
    } else {
        p0 = ctx.b.reversed();
        q = ctx.a.reversed();
        mid_sense = opposite(sense_of(p.components[w.start + 1].sense));
    }

    for (const auto& cand : scc_swap_candidates(p0, q, mid_sense, policy)) {
        if (!(cand.total < ctx.length - kLexEps)) continue;  // current branch reproduces itself
        const std::vector<CsComponent> rep =
            is_ccs ? reverse_components(cand.components) : cand.components;
        if (auto step = make_step(p, w, rep, "ccs_scc_shorten", policy)) return step;
    }

    if (const auto csc = best_csc(ctx.a, ctx.b, policy);
        csc && csc->total < ctx.length - kLexEps)
        if (auto step = make_step(p, w, csc->path.components, "ccs_scc_shorten", policy))
            return step;
    return std::nullopt;
}

std::optional<ReductionStep> reduce_ccc_short_middle(const CsPath& p, const ComponentWindow& w,
                                                     const NumericPolicy& policy) {
    if (w.pattern != Pattern::CCC)
        throw Error(Errc::bad_input, "reduce_ccc_short_middle: window is not CCC");
    const double middle = p.components[w.start + 1].length;
    if (middle > kPi + kLexEps) return std::nullopt;  // not a target of this rule
    if (middle > kPi - kLexEps) return std::nullopt;  // boundary: flagged, never lengthened
    const WindowCtx ctx = window_ctx(p, w);

    // The construction on the outer adjacent circles keeps the outer turn
    // sense: LSL for an LRL window, RSR for RLR.
    const Sense outer = sense_of(p.components[w.start].sense);
    const auto designated = dubins::solve_csc(
        ctx.a, ctx.b, outer == Sense::left ? dubins::PathType::LSL : dubins::PathType::RSR,
        policy);
    if (designated && designated->total <= ctx.length + kLexEps)
        if (auto step = make_step(p, w, designated->path.components, "ccc_short_middle", policy))
            return step;

    // Small outer arcs can make the same-sense tangent points unreachable
    // (the sweep would wrap); any strictly shorter CSC still witnesses
    // non-minimality of the window.
    if (const auto csc = best_csc(ctx.a, ctx.b, policy);
        csc && csc->total < ctx.length - kLexEps)
        if (auto step = make_step(p, w, csc->path.components, "ccc_short_middle", policy))
            return step;
    return std::nullopt;
}

// --- CCCC instability ----------------------------------------------------

namespace {

struct CcccFrame {
    Config a, b;
    Vec2 c1, c4;
    Vec2 c3_ref;
    double phi2_0;
    std::array<Sense, 4> senses;

    struct Eval {
        double total;
        double min_arc;
        std::array<double, 4> sweeps;
        Vec2 c2, c3;
    };

    CcccFrame(const CsPath& p, const ComponentWindow& w, const NumericPolicy& policy) {
        const WindowCtx ctx = window_ctx(p, w);
        a = ctx.a;
        b = ctx.b;
        Config cur = ctx.a;
        std::array<Vec2, 4> centers{};
        for (std::size_t j = 0; j < 4; ++j) {
            const auto& comp = p.components[w.start + j];
            senses[j] = sense_of(comp.sense);
            centers[j] = adjacent_circle(cur, senses[j]).center;
            CsPath one{cur, {comp}};
            cur = path::endpoint(one);
        }
        for (std::size_t j = 1; j < 4; ++j)
            if (std::fabs((centers[j] - centers[j - 1]).norm() - 2.0) > 1e-6)
                throw Error(Errc::internal, "cccc: window circles are not mutually tangent");
        c1 = centers[0];
        c4 = centers[3];
        c3_ref = centers[2];
        phi2_0 = angle_of(centers[1] - c1);
        (void)policy;
    }

    std::optional<Eval> eval(double phi2, int branch, const NumericPolicy& policy) const {
        const Vec2 c2 = c1 + unit_from_angle(phi2) * 2.0;
        const Vec2 delta = c4 - c2;
        const double d = delta.norm();
        if (d > 4.0 || d < 1e-9) return std::nullopt;
        const Vec2 mid = (c2 + c4) * 0.5;
        const double h = std::sqrt(std::max(0.0, 4.0 - 0.25 * d * d));
        const Vec2 n = perp_left(delta * (1.0 / d));
        const Vec2 c3 = mid + n * (branch > 0 ? h : -h);

        Eval e;
        e.c2 = c2;
        e.c3 = c3;
        try {
            e.sweeps[0] = arc_between(Circle{c1, senses[0]}, a.position, (c1 + c2) * 0.5, policy);
            e.sweeps[1] = arc_between(Circle{c2, senses[1]}, (c1 + c2) * 0.5, (c2 + c3) * 0.5, policy);
            e.sweeps[2] = arc_between(Circle{c3, senses[2]}, (c2 + c3) * 0.5, (c3 + c4) * 0.5, policy);
            e.sweeps[3] = arc_between(Circle{c4, senses[3]}, (c3 + c4) * 0.5, b.position, policy);
        } catch (const Error&) {
            return std::nullopt;
        }
        e.total = e.sweeps[0] + e.sweeps[1] + e.sweeps[2] + e.sweeps[3];
        e.min_arc = *std::min_element(e.sweeps.begin(), e.sweeps.end());
        return e;
    }

    std::vector<CsComponent> components(const Eval& e) const {
        std::vector<CsComponent> out;
        out.reserve(4);
        for (std::size_t j = 0; j < 4; ++j) out.emplace_back(cs_of(senses[j]), e.sweeps[j]);
        return out;
    }
};

}  // namespace

double cccc_length_at(const CsPath& p, const ComponentWindow& w, double eps,
                      const NumericPolicy& policy) {
    if (w.pattern != Pattern::CCCC)
        throw Error(Errc::bad_input, "cccc_length_at: window is not CCCC");
    const CcccFrame frame(p, w, policy);
    // Stay on the branch of the starting configuration.
    const auto pick = [&](double phi) -> std::optional<CcccFrame::Eval> {
        const auto plus = frame.eval(phi, +1, policy);
        const auto minus = frame.eval(phi, -1, policy);
        if (plus && minus) {
            const double dp = (plus->c3 - frame.c3_ref).norm2();
            const double dm = (minus->c3 - frame.c3_ref).norm2();
            return dp <= dm ? plus : minus;
        }
        return plus ? plus : minus;
    };
    const auto e = pick(frame.phi2_0 + eps);
    if (!e)
        throw Error(Errc::bad_input, "cccc_length_at: parameter leaves the family");
    return e->total;
}

std::optional<ReductionStep> cccc_instability(const CsPath& p, const ComponentWindow& w,
                                              const NumericPolicy& policy) {
    if (w.pattern != Pattern::CCCC)
        throw Error(Errc::bad_input, "cccc_instability: window is not CCCC");
    const CcccFrame frame(p, w, policy);
    const WindowCtx ctx = window_ctx(p, w);
    const double base_len = ctx.length;

    struct Best {
        double phi2{0.0};
        int branch{+1};
        CcccFrame::Eval eval{};
        bool found{false};
    };
    Best best;

    double center = frame.phi2_0;
    double radius = 0.2;
    for (int round = 0; round < 7; ++round) {
        constexpr int kGrid = 41;
        for (int g = 0; g < kGrid; ++g) {
            const double phi =
                center - radius + 2.0 * radius * static_cast<double>(g) / (kGrid - 1);
            for (const int branch : {+1, -1}) {
                const auto e = frame.eval(phi, branch, policy);
                if (!e) continue;
                if (!best.found || e->total < best.eval.total) {
                    best = {phi, branch, *e, true};
                }
            }
        }
        if (!best.found) break;
        center = best.phi2;
        radius /= 8.0;
    }

    if (!best.found || !(best.eval.total < base_len - kLexEps)) {
        throw Error(Errc::internal,
                    "cccc: no shorter configuration within the probe radius; window path: " +
                        path::to_json(p));
    }

    // If the descent ran into the family boundary (an arc about to vanish),
    // bisect to the wall so the dying arc drops below the canonicalisation
    // threshold and the splice closes the window for good.
    if (best.eval.min_arc < 0.05) {
        std::size_t dying = 0;
        for (std::size_t j = 1; j < 4; ++j)
            if (best.eval.sweeps[j] < best.eval.sweeps[dying]) dying = j;
        const double dir = best.phi2 >= frame.phi2_0 ? 1.0 : -1.0;

        auto arc_at = [&](double phi) -> std::optional<double> {
            const auto e = frame.eval(phi, best.branch, policy);
            if (!e) return std::nullopt;
            if (e->sweeps[dying] > kPi) return std::nullopt;  // wrapped past zero
            return e->sweeps[dying];
        };

        double lo = best.phi2;           // valid side
        double hi = best.phi2;
        bool bracketed = false;
        for (double step = 1e-3; step < 0.5; step *= 2.0) {
            hi = best.phi2 + dir * step;
            if (!arc_at(hi)) {
                bracketed = true;
                break;
            }
            lo = hi;
        }
        if (bracketed) {
            for (int it = 0; it < 200 && std::fabs(hi - lo) > 1e-16; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (arc_at(mid)) lo = mid;
                else hi = mid;
            }
            if (const auto e = frame.eval(lo, best.branch, policy);
                e && e->total < base_len - kLexEps && e->total <= best.eval.total + kLexEps) {
                if (auto step = make_step(p, w, frame.components(*e), "cccc_descent", policy))
                    return step;
            }
        }
    }

    if (auto step = make_step(p, w, frame.components(best.eval), "cccc_descent", policy))
        return step;
    throw Error(Errc::internal,
                "cccc: descent produced no acceptable step; window path: " + path::to_json(p));
}

// --- fixed-point loop ----------------------------------------------------

namespace {

// A same-sense arc pair left split by canonicalisation carries a full turn;
// removing exactly one turn preserves the endpoint and shortens by 2*pi.
std::optional<ReductionStep> erase_full_turn(const CsPath& p, const NumericPolicy& policy) {
    for (std::size_t i = 0; i + 1 < p.components.size(); ++i) {
        const auto& c0 = p.components[i];
        const auto& c1 = p.components[i + 1];
        if (c0.sense == CsSense::S || c0.sense != c1.sense) continue;
        const double sum = c0.length + c1.length;
        if (sum < kTwoPi) continue;
        const ComponentWindow w{Pattern::CCC /*unused*/, i, 2};
        std::vector<CsComponent> rep;
        if (sum - kTwoPi > 0.0) rep.emplace_back(c0.sense, sum - kTwoPi);
        if (auto step = make_step(p, w, rep, "full_turn_erase", policy)) return step;
    }
    return std::nullopt;
}

}  // namespace

ReduceResult reduce_to_minimizer(const CsPath& p, const NumericPolicy& policy,
                                 std::size_t iteration_cap) {
    ReduceResult result;
    result.path = path::canonicalize(p);

    for (std::size_t iter = 0;; ++iter) {
        if (iter >= iteration_cap)
            throw Error(Errc::iteration_cap, "reduce: iteration cap exceeded");

        std::optional<ReductionStep> fired = erase_full_turn(result.path, policy);

        const auto windows = find_windows(result.path);
        const auto try_rule = [&](Pattern pat, auto&& rule) {
            if (fired) return;
            for (const auto& w : windows) {
                if (w.pattern != pat) continue;
                if (auto step = rule(result.path, w)) {
                    fired = std::move(step);
                    return;
                }
            }
        };

        try_rule(Pattern::CCC, [&](const CsPath& q, const ComponentWindow& w) {
            return reduce_ccc_short_middle(q, w, policy);
        });
        try_rule(Pattern::SCS, [&](const CsPath& q, const ComponentWindow& w) {
            return shorten_scs(q, w, policy);
        });
        try_rule(Pattern::CCS, [&](const CsPath& q, const ComponentWindow& w) {
            return reduce_ccs_scc(q, w, policy);
        });
        try_rule(Pattern::SCC, [&](const CsPath& q, const ComponentWindow& w) {
            return reduce_ccs_scc(q, w, policy);
        });
        try_rule(Pattern::C1, [&](const CsPath& q, const ComponentWindow& w) {
            return reduce_admissible(q, w, policy);
        });
        try_rule(Pattern::C2, [&](const CsPath& q, const ComponentWindow& w) {
            return reduce_admissible(q, w, policy);
        });
        try_rule(Pattern::CCCC, [&](const CsPath& q, const ComponentWindow& w) {
            return cccc_instability(q, w, policy);
        });

        if (!fired) break;
        result.path = fired->after;
        result.steps.push_back(std::move(*fired));
    }

    if (complexity(result.path) > 3)
        throw Error(Errc::internal, "reduce: quiescent path of complexity > 3: " +
                                        path::to_json(result.path));
    return result;
}

Taxonomy classify(const CsPath& p, double eps) {
    const CsPath q = path::canonicalize(p, eps);
    const auto& c = q.components;
    const auto is_arc = [](const CsComponent& comp) { return comp.sense != CsSense::S; };
    switch (c.size()) {
        case 0:
        case 1:
            return Taxonomy::csc_form;
        case 2:
            if (is_arc(c[0]) && is_arc(c[1]) && c[0].sense == c[1].sense)
                return Taxonomy::other;  // split full-turn arc
            return Taxonomy::csc_form;
        case 3:
            if (c[1].sense == CsSense::S && is_arc(c[0]) && is_arc(c[2]))
                return Taxonomy::csc_form;
            if (is_arc(c[0]) && is_arc(c[1]) && is_arc(c[2]) && c[0].sense != c[1].sense &&
                c[1].sense != c[2].sense)
                return c[1].length > kPi - 1e-9 ? Taxonomy::ccc_long_middle : Taxonomy::other;
            return Taxonomy::other;
        default:
            return Taxonomy::other;
    }
}

}  // namespace bcp::reduce
