#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fraclab/errors.hpp"
#include "fraclab/geometry.hpp"

namespace fraclab::io {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// CSV with header "x,y", one point per row.
void write_polyline_csv(std::ostream& os, const Polyline& line);

// Standalone SVG: a single stroked path, viewBox padded by 5% around the
// data (y flipped so the curve renders in conventional orientation).
void write_polyline_svg(std::ostream& os, const Polyline& line);

// Reads a CSV with header "theta,r". Throws CsvError with the 1-based line
// number on malformed rows; radius validation is left to the fit.
std::vector<std::pair<double, double>> read_theta_r_csv(std::istream& is);

}  // namespace fraclab::io
