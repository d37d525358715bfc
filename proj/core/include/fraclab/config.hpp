#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fraclab/errors.hpp"

namespace fraclab {

// Flat key=value configuration for the verification runner. '#' starts a
// comment; unknown keys are rejected with their line number; later entries
// override earlier ones.
struct RunConfig {
    int cutoff = 64;            // single-mode truncation
    std::optional<int> pair_cutoff_override;  // paired-basis truncation
    int margin = 2;             // interior-block margin per mode
    double step = 1e-3;         // finite-difference step
    int rk4_steps = 10000;      // integrator steps over the test window
    double tolerance_scale = 1.0;
    std::string report_path;    // empty: stdout

    // pair_cutoff falls back to cutoff unless set explicitly.
    int pair_cutoff() const {
        return pair_cutoff_override ? *pair_cutoff_override : cutoff;
    }

    static RunConfig parse(std::istream& is);
    static RunConfig parse_file(const std::string& path);
};

}  // namespace fraclab
