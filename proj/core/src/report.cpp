#include "fraclab/report.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>

namespace fraclab {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

int VerificationReport::passed() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.pass; }));
}

nlohmann::ordered_json report_to_json(const VerificationReport& report,
                                      bool with_timestamp) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["suite"] = report.suite;
    if (with_timestamp) j["generated_at"] = utc_timestamp();
    j["environment"] = {
        {"cutoff", report.config.cutoff},
        {"pair_cutoff", report.config.pair_cutoff()},
        {"margin", report.config.margin},
        {"step", report.config.step},
        {"rk4_steps", report.config.rk4_steps},
        {"tolerance_scale", report.config.tolerance_scale},
    };
    auto checks = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["paper_anchor"] = c.paper_anchor;
        if (std::isfinite(c.measured))
            jc["measured"] = c.measured;
        else
            jc["measured"] = nullptr;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        if (!c.note.empty()) jc["note"] = c.note;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"total", report.total()}, {"passed", report.passed()}};
    return j;
}

}  // namespace fraclab
