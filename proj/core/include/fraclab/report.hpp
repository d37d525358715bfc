#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fraclab/config.hpp"

namespace fraclab {

// One verification check. For residual-style checks pass means
// measured <= tolerance; structural checks (counts, trends) encode their
// violation as the measured value so the same rule applies. paper_anchor
// names the claim being tested, by content.
struct CheckResult {
    std::string id;
    std::string paper_anchor;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;  // optional context (working dimensions, side values)
};

struct VerificationReport {
    std::string suite;
    RunConfig config;
    std::vector<CheckResult> checks;

    int total() const { return static_cast<int>(checks.size()); }
    int passed() const;
    bool all_passed() const { return passed() == total(); }
};

// Stable JSON layout (schema_version 1). generated_at is the only
// timestamp and the only non-deterministic field; with_timestamp=false
// omits it for byte-identical golden outputs.
nlohmann::ordered_json report_to_json(const VerificationReport& report,
                                      bool with_timestamp = true);

}  // namespace fraclab
