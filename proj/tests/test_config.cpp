#include <sstream>
#include <string>

#include <doctest.h>

#include "fraclab/config.hpp"
#include "fraclab/errors.hpp"

using namespace fraclab;

namespace {

RunConfig parse_text(const std::string& text) {
    std::istringstream is(text);
    return RunConfig::parse(is);
}

int error_line(const std::string& text) {
    std::istringstream is(text);
    try {
        RunConfig::parse(is);
    } catch (const ConfigError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("defaults survive an empty config") {
    const RunConfig cfg = parse_text("");
    CHECK(cfg.cutoff == 64);
    CHECK(!cfg.pair_cutoff_override.has_value());
    CHECK(cfg.pair_cutoff() == 64);
    CHECK(cfg.margin == 2);
    CHECK(cfg.step == 1e-3);
    CHECK(cfg.rk4_steps == 10000);
    CHECK(cfg.tolerance_scale == 1.0);
    CHECK(cfg.report_path.empty());
}

TEST_CASE("keys, comments, spacing, and later-entry override") {
    const RunConfig cfg = parse_text(
        "# full run\n"
        "cutoff = 32   # this comment is stripped\n"
        "\n"
        "  margin=3\n"
        "step = 5e-4\n"
        "rk4_steps = 2000\n"
        "tolerance_scale = 2.5\n"
        "report_path = out/report.json\n"
        "cutoff = 48\n");
    CHECK(cfg.cutoff == 48);
    CHECK(cfg.margin == 3);
    CHECK(cfg.step == 5e-4);
    CHECK(cfg.rk4_steps == 2000);
    CHECK(cfg.tolerance_scale == 2.5);
    CHECK(cfg.report_path == "out/report.json");
    CHECK(cfg.pair_cutoff() == 48);
}

TEST_CASE("pair_cutoff overrides the single-mode cutoff when set") {
    const RunConfig cfg = parse_text("cutoff = 32\npair_cutoff = 128\n");
    CHECK(cfg.cutoff == 32);
    CHECK(cfg.pair_cutoff() == 128);
}

TEST_CASE("malformed entries carry their line number") {
    CHECK(error_line("cutoff\n") == 1);
    CHECK(error_line("# ok\nwidth = 3\n") == 2);
    CHECK(error_line("cutoff = twelve\n") == 1);
    CHECK(error_line("step = fast\n") == 1);
    CHECK(error_line("\n\nstep = 1e-3\ncutoff = 1\n") == 4);
    CHECK(error_line("pair_cutoff = 1\n") == 1);
    CHECK(error_line("margin = -1\n") == 1);
    CHECK(error_line("step = 0\n") == 1);
    CHECK(error_line("step = -1e-3\n") == 1);
    CHECK(error_line("rk4_steps = 8\n") == 1);
    CHECK(error_line("tolerance_scale = 0\n") == 1);
}

TEST_CASE("missing config file reports line 0") {
    try {
        RunConfig::parse_file("/nonexistent/fraclab.cfg");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 0);
        CHECK(std::string(e.what()).find("cannot open") != std::string::npos);
    }
}
