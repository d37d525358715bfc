#pragma once

#include <string>
#include <vector>

#include "fraclab/report.hpp"

namespace fraclab {

// Module suite names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

bool is_valid_suite(const std::string& name);

// Runs the named suite ("all" chains every module suite). Checks are
// returned sorted by id; a check that throws is reported as failed with
// the exception text in its note.
VerificationReport run_suite(const std::string& suite, const RunConfig& config);

}  // namespace fraclab
