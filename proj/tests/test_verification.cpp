#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "fraclab/verification.hpp"

using namespace fraclab;

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    REQUIRE(names.size() == 6);
    const std::set<std::string> expected = {"fock",  "selfsim",     "spiral",
                                            "golden", "dissipative", "ncplane"};
    CHECK(std::set<std::string>(names.begin(), names.end()) == expected);

    for (const auto& n : names) CHECK(is_valid_suite(n));
    CHECK(is_valid_suite("all"));
    CHECK(!is_valid_suite(""));
    CHECK(!is_valid_suite("spirals"));
    CHECK_THROWS_AS(run_suite("bogus", RunConfig{}), std::invalid_argument);
}

TEST_CASE("every module suite passes at the default configuration") {
    const RunConfig cfg;
    int total = 0;
    for (const auto& name : suite_names()) {
        const VerificationReport rep = run_suite(name, cfg);
        INFO("suite ", name);
        CHECK(rep.suite == name);
        CHECK(rep.all_passed());
        CHECK(rep.total() > 0);
        total += rep.total();

        CHECK(std::is_sorted(
            rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
        for (const CheckResult& c : rep.checks) {
            CHECK(c.id.rfind(name + ".", 0) == 0);
            CHECK(!c.paper_anchor.empty());
        }
    }

    const VerificationReport all = run_suite("all", cfg);
    CHECK(all.suite == "all");
    CHECK(all.total() == total);
    CHECK(all.all_passed());
}

TEST_CASE("a starved pair basis fails loudly instead of silently") {
    RunConfig cfg;
    cfg.cutoff = 16;
    cfg.pair_cutoff_override = 8;
    const VerificationReport rep = run_suite("dissipative", cfg);
    CHECK(!rep.all_passed());

    bool saw_cutoff_note = false;
    for (const CheckResult& c : rep.checks) {
        if (!c.pass && c.note.find("cutoff") != std::string::npos)
            saw_cutoff_note = true;
    }
    CHECK(saw_cutoff_note);
}

TEST_CASE("tolerance_scale rescales the recorded tolerances") {
    RunConfig strict;
    strict.tolerance_scale = 1e-30;
    const VerificationReport rep = run_suite("golden", strict);
    CHECK(!rep.all_passed());

    const VerificationReport base = run_suite("golden", RunConfig{});
    REQUIRE(rep.total() == base.total());
    for (int i = 0; i < rep.total(); ++i) {
        CHECK(rep.checks[i].id == base.checks[i].id);
        CHECK(rep.checks[i].tolerance ==
              doctest::Approx(base.checks[i].tolerance * 1e-30).epsilon(1e-12));
    }
}
