// bcpath: solve, normalize, reduce, verify and render bounded-curvature
// paths from the command line.

#include "bcp/dubins.hpp"
#include "bcp/normalize.hpp"
#include "bcp/oracle.hpp"
#include "bcp/reduce.hpp"
#include "bcp/svg.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace {

using bcp::Error;
using bcp::Vec2;
using bcp::geom::Config;
using bcp::path::CsPath;
using bcp::path::SampledPath;

constexpr int kExitBadFlags = 2;
constexpr int kExitIngestion = 3;
constexpr int kExitReduceInternal = 4;
constexpr int kExitVerifyBreach = 5;

Config parse_config(const std::string& text, bool degrees) {
    double x, y, th;
    char trailing;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &x, &y, &th, &trailing) != 3)
        throw CLI::ValidationError("pose", "expected x,y,theta but got \"" + text + "\"");
    if (degrees) th *= bcp::kPi / 180.0;
    return Config(x, y, th);
}

CsPath scale_path(const CsPath& p, double factor) {
    CsPath out;
    out.start = Config(p.start.position * factor, p.start.heading);
    for (const auto& c : p.components)
        out.components.emplace_back(c.sense, c.length * factor);
    return out;
}

double round12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return std::atof(buf);
}

void print_solution_row(const std::string& type, double l0, double l1, double l2) {
    // the printed total is the sum of the printed components, so the row
    // stays self-consistent after parsing
    const double total = round12(l0) + round12(l1) + round12(l2);
    std::printf("%s %.12f %.12f %.12f %.12f\n", type.c_str(), l0, l1, l2, total);
}

CsPath load_cs_path(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error(bcp::Errc::bad_input, "cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    return bcp::path::from_json(buf.str());
}

void write_file(const std::string& file, const std::string& content) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw Error(bcp::Errc::bad_input, "cannot open " + file + " for writing");
    out << content;
}

// --- solve ---------------------------------------------------------------

struct SolveArgs {
    std::string from, to, json_out;
    bool all_candidates = false;
    bool degrees = false;
    double kappa = 1.0;
};

int run_solve(const SolveArgs& args) {
    const Config x0 = parse_config(args.from, args.degrees);
    const Config y0 = parse_config(args.to, args.degrees);
    // normalise to unit turning radius, report back in user units
    const Config x(x0.position * args.kappa, x0.heading);
    const Config y(y0.position * args.kappa, y0.heading);
    const double inv = 1.0 / args.kappa;

    if (args.all_candidates) {
        const auto candidates = bcp::dubins::all_candidates(x, y);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const std::string type{bcp::dubins::name(bcp::dubins::kAllTypes[i])};
            if (candidates[i]) {
                const auto& c = *candidates[i];
                print_solution_row(type, c.lengths[0] * inv, c.lengths[1] * inv,
                                   c.lengths[2] * inv);
            } else {
                const double inf = std::numeric_limits<double>::infinity();
                print_solution_row(type, inf, inf, inf);
            }
        }
    }
    const auto sol = bcp::dubins::solve_dubins(x, y);
    if (!args.all_candidates)
        print_solution_row(std::string(bcp::dubins::name(sol.path_type)),
                           sol.lengths[0] * inv, sol.lengths[1] * inv, sol.lengths[2] * inv);
    if (!args.json_out.empty())
        write_file(args.json_out, bcp::path::to_json(scale_path(sol.path, inv)));
    return 0;
}

// --- normalize -----------------------------------------------------------

struct NormalizeArgs {
    std::string input, output;
    double max_len = 0.9;
    double kappa = 1.0;
};

int run_normalize(const NormalizeArgs& args) {
    std::ifstream in(args.input);
    if (!in) {
        std::cerr << "error: cannot open " << args.input << "\n";
        return kExitIngestion;
    }
    SampledPath p = [&] {
        auto cols = SampledPath::read_csv_columns(in);
        for (auto* col : {&cols.s, &cols.x, &cols.y})
            for (double& v : *col) v *= args.kappa;
        return SampledPath::from_columns(std::move(cols.s), std::move(cols.x),
                                         std::move(cols.y), std::move(cols.theta));
    }();
    const auto result = bcp::norm::normalize(p, args.max_len);
    const double inv = 1.0 / args.kappa;
    write_file(args.output, bcp::path::to_json(scale_path(result.path, inv)));
    std::printf("input_length=%.12f output_length=%.12f fragments=%zu\n",
                p.total_length() * inv, bcp::path::length(result.path) * inv,
                result.fragment_count);
    return 0;
}

// --- reduce --------------------------------------------------------------

struct ReduceArgs {
    std::string input, output, trace, svg_dir;
};

int run_reduce(const ReduceArgs& args) {
    const CsPath input = load_cs_path(args.input);

    bcp::reduce::ReduceResult result;
    try {
        result = bcp::reduce::reduce_to_minimizer(input);
    } catch (const Error& e) {
        std::cerr << "error: reduction failed: " << e.what() << "\n";
        return kExitReduceInternal;
    }

    const std::string out_file =
        args.output.empty() ? args.input + ".reduced.json" : args.output;
    write_file(out_file, bcp::path::to_json(result.path));

    if (!args.trace.empty()) {
        std::string lines;
        for (const auto& step : result.steps) lines += bcp::reduce::step_to_json(step) + "\n";
        write_file(args.trace, lines);
    }
    if (!args.svg_dir.empty()) {
        std::filesystem::create_directories(args.svg_dir);
        char name[32];
        std::snprintf(name, sizeof name, "stage_%04d.svg", 0);
        write_file(args.svg_dir + "/" + name, bcp::svg::render(input));
        for (std::size_t i = 0; i < result.steps.size(); ++i) {
            std::snprintf(name, sizeof name, "stage_%04zu.svg", i + 1);
            write_file(args.svg_dir + "/" + name, bcp::svg::render(result.steps[i].after));
        }
    }

    const Config a = input.start;
    const Config b = bcp::path::endpoint(input);
    const auto optimum = bcp::dubins::solve_dubins(a, b);
    std::printf("initial_length=%.12f final_length=%.12f initial_complexity=%d "
                "final_complexity=%d steps=%zu dubins_optimum=%.12f\n",
                bcp::path::length(input), bcp::path::length(result.path),
                bcp::path::complexity(input), bcp::path::complexity(result.path),
                result.steps.size(), optimum.total);
    return 0;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
    int count = 20;
    std::uint64_t seed = 1;
    double lattice_step = 0.02;
};

int run_verify(const VerifyArgs& args) {
    std::mt19937_64 rng(args.seed);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    std::uniform_real_distribution<double> angle(0.0, bcp::kTwoPi);

    struct Query {
        Config x, y;
    };
    std::vector<Query> queries;
    queries.reserve(static_cast<std::size_t>(args.count));
    for (int i = 0; i < args.count; ++i) {
        const Config x(coord(rng), coord(rng), angle(rng));
        const Config y(coord(rng), coord(rng), angle(rng));
        queries.push_back({x, y});
    }

    std::vector<double> gaps(queries.size(), 0.0);
    std::atomic<std::size_t> cursor{0};
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(),
                              static_cast<unsigned>(queries.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = cursor.fetch_add(1)) < queries.size();) {
                auto spec = bcp::oracle::LatticeSpec::for_query(queries[i].x, queries[i].y);
                spec.control_step = args.lattice_step;
                const auto lattice =
                    bcp::oracle::lattice_shortest(queries[i].x, queries[i].y, spec);
                const auto exact = bcp::dubins::solve_dubins(queries[i].x, queries[i].y);
                gaps[i] = std::fabs(lattice.length - exact.total);
            }
        });
    }
    for (auto& t : pool) t.join();

    double max_gap = 0.0, sum = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        sum += gaps[i];
        if (gaps[i] > max_gap) {
            max_gap = gaps[i];
            worst = i;
        }
    }
    const double tolerance = 0.05 + 3.0 * args.lattice_step;
    std::printf("queries=%d max_gap=%.6f mean_gap=%.6f tolerance=%.6f\n", args.count,
                max_gap, queries.empty() ? 0.0 : sum / static_cast<double>(gaps.size()),
                tolerance);
    if (max_gap > tolerance) {
        const auto& q = queries[worst];
        std::printf("worst: --from %.17g,%.17g,%.17g --to %.17g,%.17g,%.17g gap=%.6f\n",
                    q.x.position.x, q.x.position.y, q.x.heading, q.y.position.x,
                    q.y.position.y, q.y.heading, max_gap);
        return kExitVerifyBreach;
    }
    return 0;
}

// --- render --------------------------------------------------------------

struct RenderArgs {
    std::string input, output;
    bool circles = false;
    bool region = false;
    int width = 640;
    int height = 640;
};

int run_render(const RenderArgs& args) {
    CsPath p;
    try {
        p = load_cs_path(args.input);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    }
    bcp::svg::RenderSpec spec;
    spec.show_adjacent_circles = args.circles;
    spec.show_region = args.region;
    spec.width_px = args.width;
    spec.height_px = args.height;
    write_file(args.output, bcp::svg::render(p, spec));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded-curvature path toolkit"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "analytic shortest path between two poses");
    solve->add_option("--from", solve_args.from, "start pose x,y,theta")->required();
    solve->add_option("--to", solve_args.to, "goal pose x,y,theta")->required();
    solve->add_option("--json", solve_args.json_out, "write the winning path as JSON");
    solve->add_flag("--all-candidates", solve_args.all_candidates, "print all six rows");
    solve->add_flag("--degrees", solve_args.degrees, "angles given in degrees");
    solve->add_option("--kappa", solve_args.kappa, "curvature bound (default 1)")
        ->check(CLI::PositiveNumber);

    NormalizeArgs norm_args;
    auto* norm = app.add_subcommand("normalize", "replace a sampled path by a cs path");
    norm->add_option("--input", norm_args.input, "sampled path CSV")->required();
    norm->add_option("--output", norm_args.output, "output cs path JSON")->required();
    norm->add_option("--max-len", norm_args.max_len, "fragment bound in (0,1)");
    norm->add_option("--kappa", norm_args.kappa, "curvature bound (default 1)")
        ->check(CLI::PositiveNumber);

    ReduceArgs reduce_args;
    auto* red = app.add_subcommand("reduce", "reduce a cs path toward complexity <= 3");
    red->add_option("--input", reduce_args.input, "cs path JSON")->required();
    red->add_option("--output", reduce_args.output, "final path JSON");
    red->add_option("--trace", reduce_args.trace, "JSONL step trace");
    red->add_option("--svg-stages", reduce_args.svg_dir, "directory for per-step SVGs");

    VerifyArgs verify_args;
    auto* ver = app.add_subcommand("verify", "compare the solver against the lattice oracle");
    ver->add_option("--count", verify_args.count, "number of random queries")
        ->check(CLI::PositiveNumber);
    ver->add_option("--seed", verify_args.seed, "RNG seed");
    ver->add_option("--lattice-step", verify_args.lattice_step, "control step")
        ->check(CLI::PositiveNumber);

    RenderArgs render_args;
    auto* ren = app.add_subcommand("render", "render a cs path to SVG");
    ren->add_option("--input", render_args.input, "cs path JSON")->required();
    ren->add_option("--output", render_args.output, "output SVG file")->required();
    ren->add_flag("--circles", render_args.circles, "draw adjacent circles (dashed)");
    ren->add_flag("--region", render_args.region, "shade the start region");
    ren->add_option("--width", render_args.width, "width in px")->check(CLI::PositiveNumber);
    ren->add_option("--height", render_args.height, "height in px")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadFlags;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args);
        if (norm->parsed()) return run_normalize(norm_args);
        if (red->parsed()) return run_reduce(reduce_args);
        if (ver->parsed()) return run_verify(verify_args);
        if (ren->parsed()) return run_render(render_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (norm->parsed()) return kExitIngestion;
        if (red->parsed()) return kExitReduceInternal;
        return kExitBadFlags;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
