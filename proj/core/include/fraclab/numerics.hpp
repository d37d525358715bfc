#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace fraclab {

// Common step of a strictly increasing uniform grid; throws on non-uniform
// or too-short input.
double uniform_step(std::span<const double> times, std::size_t min_size = 5);

// Fourth-order central finite differences on a uniform grid. Input is the
// sampled function; outputs cover interior points only (the first and last
// two samples are dropped). values.size() must be >= 5.
std::vector<double> central_derivative1(std::span<const double> values, double h);
std::vector<double> central_derivative2(std::span<const double> values, double h);

// Classical fixed-step Runge-Kutta 4 for y' = f(t, y), y(t0) = y0.
// Returns the states at t0, t0+h, ..., t0+steps*h (steps+1 entries).
std::vector<std::vector<double>> rk4_integrate(
    const std::function<std::vector<double>(double, const std::vector<double>&)>& f,
    double t0, std::vector<double> y0, double h, int steps);

// Gauss-Legendre nodes and weights on [a, b].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_legendre(int n, double a, double b);

// Ordinary least squares fit y = slope * x + intercept, with the coefficient
// of determination. Requires at least two distinct x values.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

std::vector<double> linspace(double a, double b, int n);

}  // namespace fraclab
