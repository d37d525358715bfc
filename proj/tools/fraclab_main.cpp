#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fraclab/config.hpp"
#include "fraclab/errors.hpp"
#include "fraclab/golden.hpp"
#include "fraclab/io.hpp"
#include "fraclab/report.hpp"
#include "fraclab/selfsim.hpp"
#include "fraclab/spiral.hpp"
#include "fraclab/verification.hpp"

namespace {

using fraclab::Polyline;

// Writes to the path, or to stdout when the path is empty. Returns false
// (after printing a diagnostic) when the file cannot be written.
bool emit(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return true;
    }
    std::ofstream os(path, std::ios::binary);
    os << payload;
    os.flush();
    if (!os) {
        std::cerr << "fraclab: cannot write '" << path << "'\n";
        return false;
    }
    return true;
}

int run_generate(const Polyline& line, const std::string& format,
                 const std::string& out) {
    std::ostringstream os;
    if (format == "svg")
        fraclab::io::write_polyline_svg(os, line);
    else
        fraclab::io::write_polyline_csv(os, line);
    return emit(out, os.str()) ? 0 : 1;
}

// theta,r samples from an x,y polyline: r = |P|, theta unwound by
// accumulating the wrapped turning increments (steps must stay under half
// a turn, which holds for any reasonably sampled spiral).
std::vector<std::pair<double, double>> unwind_xy(
    const std::vector<std::pair<double, double>>& xy) {
    std::vector<std::pair<double, double>> out;
    out.reserve(xy.size());
    double theta = 0.0;
    double prev_raw = 0.0;
    for (std::size_t i = 0; i < xy.size(); ++i) {
        const double raw = std::atan2(xy[i].second, xy[i].first);
        if (i == 0) {
            theta = raw;
        } else {
            double delta = raw - prev_raw;
            while (delta > std::numbers::pi) delta -= 2.0 * std::numbers::pi;
            while (delta <= -std::numbers::pi) delta += 2.0 * std::numbers::pi;
            theta += delta;
        }
        prev_raw = raw;
        out.emplace_back(theta, std::hypot(xy[i].first, xy[i].second));
    }
    return out;
}

// Accepts either native theta,r data or an x,y polyline (the generate
// format), converting the latter to polar form.
std::vector<std::pair<double, double>> read_fit_input(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw fraclab::CsvError("cannot open '" + path + "'", 0);

    std::string header;
    std::getline(is, header);
    if (!header.empty() && header.back() == '\r') header.pop_back();

    is.seekg(0);
    if (header == "theta,r") return fraclab::io::read_theta_r_csv(is);
    if (header == "x,y") {
        // Same row grammar as theta,r; reuse the reader and reinterpret.
        std::stringstream patched;
        patched << "theta,r\n";
        std::string rest;
        std::getline(is, rest);  // discard the x,y header
        patched << is.rdbuf();
        return unwind_xy(fraclab::io::read_theta_r_csv(patched));
    }
    throw fraclab::CsvError("expected header 'theta,r' or 'x,y'", 1);
}

int run_fit_slope(const std::string& input) {
    std::vector<std::pair<double, double>> samples;
    try {
        samples = read_fit_input(input);
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (!(samples[i].second > 0.0)) {
                std::cerr << "fraclab: nonpositive radius at line " << i + 2
                          << "\n";
                return 2;
            }
        }
        const fraclab::LineFit fit = fraclab::spiral::fit_loglog_slope(samples);

        std::string note;
        if (fit.r_squared < 0.99) {
            note = "not self-similar at tolerance (r^2 < 0.99)";
        } else if (std::abs(fit.slope) < 1e-9) {
            note = "degenerate: constant radius, slope 0 with perfect fit";
        } else {
            note = "self-similar: d = " + fraclab::io::format_double(fit.slope) +
                   ", radius factor " +
                   fraclab::io::format_double(
                       std::exp(2.0 * std::numbers::pi * std::abs(fit.slope))) +
                   " per turn";
            if (fit.slope < 0.0) note += " (indirect branch)";
        }

        nlohmann::ordered_json j;
        j["slope"] = fit.slope;
        j["intercept"] = fit.intercept;
        j["r_squared"] = fit.r_squared;
        j["inferred_dimension_note"] = note;
        std::cout << j.dump(2) << "\n";
        return 0;
    } catch (const fraclab::CsvError& e) {
        std::cerr << "fraclab: " << e.what();
        if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
        std::cerr << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fraclab: " << e.what() << "\n";
        return 2;
    }
}

int run_verify(const std::string& suite, const std::string& config_path,
               const std::string& out_override) {
    fraclab::RunConfig cfg;
    try {
        if (!config_path.empty())
            cfg = fraclab::RunConfig::parse_file(config_path);
    } catch (const fraclab::ConfigError& e) {
        std::cerr << "fraclab: config error: " << e.what();
        if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
        std::cerr << "\n";
        return 2;
    }

    const fraclab::VerificationReport report = fraclab::run_suite(suite, cfg);
    const std::string out =
        out_override.empty() ? cfg.report_path : out_override;
    if (!emit(out, fraclab::report_to_json(report).dump(2) + "\n")) return 2;
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractal self-similarity lab: spiral/fractal generation, "
                 "verification suites, slope fitting"};
    app.require_subcommand(1);

    // generate ------------------------------------------------------------
    auto* gen = app.add_subcommand(
        "generate", "Emit a curve as CSV (x,y rows) or a standalone SVG path");
    gen->require_subcommand(1);

    std::string format = "csv";
    std::string out;

    int depth = 3;
    auto* koch = gen->add_subcommand("koch", "Koch curve at a given depth");
    koch->add_option("--depth", depth, "Substitution depth")
        ->check(CLI::Range(0, 12));

    double r0 = 1.0;
    double slope_d = 0.25;
    double theta_max = 4.0 * std::numbers::pi;
    int samples = 400;
    std::string handedness = "direct";
    auto* logspiral =
        gen->add_subcommand("logspiral", "Logarithmic spiral r = r0 e^(d theta)");
    logspiral->add_option("--r0", r0, "Anchor radius at theta = 0")
        ->check(CLI::PositiveNumber);
    logspiral->add_option("--d", slope_d, "Log-log slope");
    logspiral->add_option("--theta-max", theta_max, "Winding angle range")
        ->check(CLI::PositiveNumber);
    logspiral->add_option("--samples", samples, "Number of points")
        ->check(CLI::Range(2, 1000000));
    logspiral->add_option("--handedness", handedness, "Branch orientation")
        ->check(CLI::IsMember({"direct", "indirect"}));

    auto* goldenspiral = gen->add_subcommand(
        "goldenspiral", "Golden spiral (radius grows by phi per quarter turn)");
    goldenspiral->add_option("--r0", r0, "Anchor radius at theta = 0")
        ->check(CLI::PositiveNumber);
    goldenspiral->add_option("--theta-max", theta_max, "Winding angle range")
        ->check(CLI::PositiveNumber);
    goldenspiral->add_option("--samples", samples, "Number of points")
        ->check(CLI::Range(2, 1000000));

    int arcs = 6;
    double unit = 1.0;
    int samples_per_arc = 32;
    auto* fibspiral = gen->add_subcommand(
        "fibspiral", "Quarter-circle spiral through the Fibonacci tiling");
    fibspiral->add_option("--arcs", arcs, "Number of quarter arcs")
        ->check(CLI::Range(2, 80));
    fibspiral->add_option("--unit", unit, "Side of the first square")
        ->check(CLI::PositiveNumber);
    fibspiral->add_option("--samples-per-arc", samples_per_arc, "Points per arc")
        ->check(CLI::Range(2, 100000));

    for (auto* leaf : {koch, logspiral, goldenspiral, fibspiral}) {
        leaf->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "svg"}));
        leaf->add_option("--out", out, "Output path (default stdout)");
    }

    // verify --------------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify", "Run a verification suite and emit a JSON report");
    std::string suite = "all";
    std::string config_path;
    std::string report_out;
    verify->add_option("--suite", suite, "Suite name or 'all'")
        ->check(CLI::IsMember({"all", "fock", "selfsim", "spiral",
                               "dissipative", "golden", "ncplane"}));
    verify->add_option("--config", config_path, "key=value configuration file");
    verify->add_option("--out", report_out,
                       "Report path (overrides config report_path)");

    // fit-slope -----------------------------------------------------------
    auto* fit = app.add_subcommand(
        "fit-slope", "Fit ln r against theta and report the slope as JSON");
    std::string fit_input;
    fit->add_option("input", fit_input, "CSV with header theta,r or x,y")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            Polyline line;
            if (koch->parsed()) {
                line = fraclab::selfsim::koch_iterate(depth);
            } else if (logspiral->parsed()) {
                const fraclab::spiral::SpiralParams params(
                    r0, slope_d,
                    handedness == "indirect"
                        ? fraclab::spiral::Handedness::indirect
                        : fraclab::spiral::Handedness::direct);
                for (double th : fraclab::linspace(0.0, theta_max, samples))
                    line.push_back(fraclab::spiral::spiral_point(params, th));
            } else if (goldenspiral->parsed()) {
                const fraclab::spiral::SpiralParams params(
                    r0, fraclab::golden::golden_constants().d_g);
                for (double th : fraclab::linspace(0.0, theta_max, samples))
                    line.push_back(fraclab::spiral::spiral_point(params, th));
            } else {
                line = fraclab::golden::fibonacci_spiral(arcs, unit,
                                                         samples_per_arc);
            }
            return run_generate(line, format, out);
        }
        if (verify->parsed()) return run_verify(suite, config_path, report_out);
        if (fit->parsed()) return run_fit_slope(fit_input);
    } catch (const std::exception& e) {
        std::cerr << "fraclab: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
