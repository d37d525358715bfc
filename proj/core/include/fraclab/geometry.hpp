#pragma once

#include <vector>

namespace fraclab {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Open polygonal chain; a curve with n segments has n+1 points.
using Polyline = std::vector<Point>;

}  // namespace fraclab
