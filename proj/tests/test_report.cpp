#include <cmath>
#include <cctype>
#include <limits>
#include <string>

#include <doctest.h>

#include "fraclab/report.hpp"

using namespace fraclab;

namespace {

VerificationReport sample_report() {
    VerificationReport r;
    r.suite = "demo";
    r.config.cutoff = 16;
    r.config.margin = 1;
    r.config.step = 0.25;
    r.config.rk4_steps = 100;
    r.config.tolerance_scale = 2.0;

    CheckResult ok;
    ok.id = "demo.01_pass";
    ok.paper_anchor = "a residual that stays small";
    ok.measured = 1.5e-9;
    ok.tolerance = 1e-8;
    ok.pass = true;

    CheckResult bad;
    bad.id = "demo.02_fail";
    bad.paper_anchor = "a residual that does not";
    bad.measured = std::numeric_limits<double>::quiet_NaN();
    bad.tolerance = 1e-8;
    bad.pass = false;
    bad.note = "threw: something";

    r.checks = {ok, bad};
    return r;
}

}  // namespace

TEST_CASE("pass counting") {
    VerificationReport r = sample_report();
    CHECK(r.total() == 2);
    CHECK(r.passed() == 1);
    CHECK(!r.all_passed());
    r.checks[1].pass = true;
    CHECK(r.all_passed());
}

TEST_CASE("json layout is stable without the timestamp") {
    const auto j = report_to_json(sample_report(), false);
    CHECK(j.dump() ==
          R"({"schema_version":1,"suite":"demo",)"
          R"("environment":{"cutoff":16,"pair_cutoff":16,"margin":1,)"
          R"("step":0.25,"rk4_steps":100,"tolerance_scale":2.0},)"
          R"("checks":[{"id":"demo.01_pass",)"
          R"("paper_anchor":"a residual that stays small",)"
          R"("measured":1.5e-09,"tolerance":1e-08,"pass":true},)"
          R"({"id":"demo.02_fail",)"
          R"("paper_anchor":"a residual that does not",)"
          R"("measured":null,"tolerance":1e-08,"pass":false,)"
          R"("note":"threw: something"}],)"
          R"("summary":{"total":2,"passed":1}})");
}

TEST_CASE("pair_cutoff override lands in the environment block") {
    VerificationReport r = sample_report();
    r.config.pair_cutoff_override = 96;
    const auto j = report_to_json(r, false);
    CHECK(j["environment"]["pair_cutoff"] == 96);
    CHECK(j["environment"]["cutoff"] == 16);
}

TEST_CASE("timestamp is UTC shaped") {
    const auto j = report_to_json(sample_report(), true);
    REQUIRE(j.contains("generated_at"));
    const std::string ts = j["generated_at"];
    REQUIRE(ts.size() == 20);
    CHECK(ts[4] == '-');
    CHECK(ts[7] == '-');
    CHECK(ts[10] == 'T');
    CHECK(ts[13] == ':');
    CHECK(ts[16] == ':');
    CHECK(ts[19] == 'Z');
    for (int i : {0, 1, 2, 3, 5, 6, 8, 9, 11, 12, 14, 15, 17, 18})
        CHECK(std::isdigit(static_cast<unsigned char>(ts[i])));
}
