#include "bcp/cs_path.hpp"

#include "bcp/kernels.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace bcp::path {

char to_char(CsSense s) { return static_cast<char>(s); }

CsSense sense_from_char(char c) {
    switch (c) {
        case 'L': return CsSense::L;
        case 'S': return CsSense::S;
        case 'R': return CsSense::R;
        default: throw Error(Errc::bad_input, std::string("unknown sense: ") + c);
    }
}

CsComponent::CsComponent(CsSense s, double len) : sense(s), length(len) {
    if (!(len >= 0.0))
        throw Error(Errc::bad_input, "component length must be nonnegative");
    if (s != CsSense::S && len >= kTwoPi)
        throw Error(Errc::bad_input, "arc component must be shorter than a full turn");
}

double length(const CsPath& p) {
    double total = 0.0;
    for (const auto& c : p.components) total += c.length;
    return total;
}

CsPath canonicalize(const CsPath& p, double drop_eps) {
    CsPath out;
    out.start = p.start;
    out.components.reserve(p.components.size());
    for (const auto& c : p.components) {
        if (c.length <= drop_eps) continue;
        if (!out.components.empty() && out.components.back().sense == c.sense) {
            // Merge only while the result stays representable; a merged arc of
            // a full turn or more is kept split.
            const double merged = out.components.back().length + c.length;
            if (c.sense == CsSense::S || merged < kTwoPi) {
                out.components.back().length = merged;
                continue;
            }
        }
        out.components.push_back(c);
    }
    return out;
}

int complexity(const CsPath& p) {
    return static_cast<int>(canonicalize(p).components.size());
}

namespace {

Config advance(const Config& c, CsSense sense, double len) {
    const double th = c.heading;
    switch (sense) {
        case CsSense::S:
            return Config(c.position + unit_from_angle(th) * len, th);
        case CsSense::L: {
            const double th1 = th + len;
            return Config(c.position + Vec2{std::sin(th1) - std::sin(th),
                                            std::cos(th) - std::cos(th1)},
                          th1);
        }
        case CsSense::R: {
            const double th1 = th - len;
            return Config(c.position + Vec2{std::sin(th) - std::sin(th1),
                                            std::cos(th1) - std::cos(th)},
                          th1);
        }
    }
    return c;  // unreachable
}

}  // namespace

Config evaluate(const CsPath& p, double s) {
    const double total = length(p);
    const double slack = 1e-9 * std::max(1.0, total);
    if (s < -slack || s > total + slack)
        throw Error(Errc::out_of_range, "evaluate: arclength outside [0, length]");
    double remaining = std::clamp(s, 0.0, total);

    Config cur = p.start;
    for (const auto& comp : p.components) {
        if (remaining <= comp.length) return advance(cur, comp.sense, remaining);
        cur = advance(cur, comp.sense, comp.length);
        remaining -= comp.length;
    }
    return cur;
}

Config endpoint(const CsPath& p) {
    Config cur = p.start;
    for (const auto& comp : p.components) cur = advance(cur, comp.sense, comp.length);
    return cur;
}

CsPath reversed(const CsPath& p) {
    CsPath out;
    out.start = endpoint(p).reversed();
    out.components.reserve(p.components.size());
    for (auto it = p.components.rbegin(); it != p.components.rend(); ++it) {
        CsSense s = it->sense;
        if (s == CsSense::L) s = CsSense::R;
        else if (s == CsSense::R) s = CsSense::L;
        out.components.emplace_back(s, it->length);
    }
    return out;
}

SampledPath sample(const CsPath& p, double step, const NumericPolicy& policy) {
    if (!(step > 0.0)) throw Error(Errc::bad_step, "sample: step must be positive");
    const double total = length(p);

    std::vector<double> ts;
    const auto n = static_cast<std::size_t>(std::floor(total / step + 1e-9));
    ts.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) ts.push_back(static_cast<double>(i) * step);
    if (ts.back() > total || total - ts.back() <= 1e-12 * std::max(1.0, total))
        ts.back() = total;  // grid landed on the end; make it exact
    else
        ts.push_back(total);

    std::vector<double> xs, ys, ths;
    xs.reserve(ts.size());
    ys.reserve(ts.size());
    ths.reserve(ts.size());
    for (double t : ts) {
        const Config c = evaluate(p, t);
        xs.push_back(c.position.x);
        ys.push_back(c.position.y);
        ths.push_back(c.heading);
    }
    return SampledPath::from_columns(std::move(ts), std::move(xs), std::move(ys),
                                     std::move(ths), policy);
}

// --- JSON -------------------------------------------------------------

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string to_json(const CsPath& p) {
    std::string out;
    out += "{\"start\": {\"x\": " + fmt17(p.start.position.x);
    out += ", \"y\": " + fmt17(p.start.position.y);
    out += ", \"theta\": " + fmt17(p.start.heading);
    out += "}, \"components\": [";
    for (std::size_t i = 0; i < p.components.size(); ++i) {
        if (i) out += ", ";
        out += "{\"sense\": \"";
        out += to_char(p.components[i].sense);
        out += "\", \"length\": " + fmt17(p.components[i].length) + "}";
    }
    out += "]}";
    return out;
}

CsPath from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::bad_input, std::string("cs path JSON: ") + e.what());
    }
    try {
        const auto& st = j.at("start");
        CsPath p;
        p.start = Config(st.at("x").get<double>(), st.at("y").get<double>(),
                         st.at("theta").get<double>());
        for (const auto& c : j.at("components")) {
            const std::string s = c.at("sense").get<std::string>();
            if (s.size() != 1) throw Error(Errc::bad_input, "bad sense string");
            p.components.emplace_back(sense_from_char(s[0]), c.at("length").get<double>());
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::bad_input, std::string("cs path JSON shape: ") + e.what());
    }
}

// --- SampledPath -------------------------------------------------------

SampledPath SampledPath::from_columns(std::vector<double> s, std::vector<double> x,
                                      std::vector<double> y, std::vector<double> theta,
                                      const NumericPolicy& policy) {
    SampledPath p;
    p.s = std::move(s);
    p.x = std::move(x);
    p.y = std::move(y);
    p.theta = std::move(theta);
    p.validate(policy);
    return p;
}

void SampledPath::validate(const NumericPolicy& policy) {
    const std::size_t n = s.size();
    if (n == 0 || x.size() != n || y.size() != n || theta.size() != n)
        throw Error(Errc::bad_input, "sampled path: empty or ragged columns");
    if (std::fabs(s[0]) > 1e-12)
        throw Error(Errc::bad_input, "sampled path: first arclength must be 0");
    s[0] = 0.0;

    tan_x.resize(n);
    tan_y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        theta[i] = wrap_two_pi(theta[i]);
        tan_x[i] = std::cos(theta[i]);
        tan_y[i] = std::sin(theta[i]);
    }

    for (std::size_t i = 1; i < n; ++i) {
        const double ds = s[i] - s[i - 1];
        if (!(ds > 0.0))
            throw Error(Errc::bad_input,
                        "sampled path: arclength not strictly increasing at row " +
                            std::to_string(i));
        const double dx = x[i] - x[i - 1];
        const double dy = y[i] - y[i - 1];
        const double chord = std::sqrt(dx * dx + dy * dy);
        if (chord > ds * (1.0 + 1e-6) + 1e-9)
            throw Error(Errc::bad_input,
                        "sampled path: chord longer than arclength gap at row " +
                            std::to_string(i));
        const double kappa = 1.0 + policy.curvature_slack;
        if (ds <= 2.0) {
            const double floor_chord = (2.0 / kappa) * std::sin(std::min(kappa * ds, kPi) / 2.0);
            if (chord < floor_chord - 1e-9)
                throw Error(Errc::bad_input,
                            "sampled path: positions inconsistent with arclength gap at row " +
                                std::to_string(i));
        }
        if (chord > 1e-12) {
            const double chord_ang = std::atan2(dy, dx);
            const double dev = std::fabs(wrap_pi(chord_ang - theta[i - 1]));
            if (dev > ds * kappa + 1e-7)
                throw Error(Errc::bad_input,
                            "sampled path: heading inconsistent with chord direction at row " +
                                std::to_string(i));
        }
    }

    const double worst = kernels::max_abs_turn_rate(theta, s);
    if (worst > 1.0 + policy.curvature_slack) {
        for (std::size_t i = 1; i < n; ++i) {
            double d = wrap_pi(theta[i] - theta[i - 1]);
            if (std::fabs(d) / (s[i] - s[i - 1]) > 1.0 + policy.curvature_slack)
                throw Error(Errc::bad_input,
                            "sampled path: discrete curvature bound exceeded at row " +
                                std::to_string(i) + " (|dtheta/ds| = " +
                                std::to_string(std::fabs(d) / (s[i] - s[i - 1])) + " > " +
                                std::to_string(1.0 + policy.curvature_slack) + ")");
        }
        throw Error(Errc::bad_input, "sampled path: discrete curvature bound exceeded");
    }
}

double SampledPath::measured_length() const { return kernels::polyline_length(x, y); }

SampledPath SampledPath::slice(std::size_t i0, std::size_t i1) const {
    if (i0 > i1 || i1 >= size())
        throw Error(Errc::bad_input, "sampled path slice: bad index range");
    SampledPath out;
    const std::size_t m = i1 - i0 + 1;
    out.s.reserve(m);
    for (std::size_t i = i0; i <= i1; ++i) out.s.push_back(s[i] - s[i0]);
    out.s[0] = 0.0;
    auto copy = [&](const std::vector<double>& src, std::vector<double>& dst) {
        dst.assign(src.begin() + static_cast<std::ptrdiff_t>(i0),
                   src.begin() + static_cast<std::ptrdiff_t>(i1 + 1));
    };
    copy(x, out.x);
    copy(y, out.y);
    copy(theta, out.theta);
    copy(tan_x, out.tan_x);
    copy(tan_y, out.tan_y);
    return out;
}

SampledPath::RawColumns SampledPath::read_csv_columns(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw Error(Errc::bad_input, "sampled path CSV: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "s,x,y,theta")
        throw Error(Errc::bad_input, "sampled path CSV: expected header \"s,x,y,theta\"");

    RawColumns cols;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double a, b, c, d;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &a, &b, &c, &d) != 4)
            throw Error(Errc::bad_input,
                        "sampled path CSV: malformed row " + std::to_string(row));
        cols.s.push_back(a);
        cols.x.push_back(b);
        cols.y.push_back(c);
        cols.theta.push_back(d);
        ++row;
    }
    return cols;
}

SampledPath SampledPath::read_csv(std::istream& in, const NumericPolicy& policy) {
    RawColumns cols = read_csv_columns(in);
    return from_columns(std::move(cols.s), std::move(cols.x), std::move(cols.y),
                        std::move(cols.theta), policy);
}

void SampledPath::write_csv(std::ostream& out) const {
    out << "s,x,y,theta\n";
    char buf[176];
    for (std::size_t i = 0; i < size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s[i], x[i], y[i],
                      theta[i]);
        out << buf;
    }
}

}  // namespace bcp::path
