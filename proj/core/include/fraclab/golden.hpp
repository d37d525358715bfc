#pragma once

#include <cstdint>
#include <vector>

#include "fraclab/geometry.hpp"

namespace fraclab::golden {

// phi = (1+sqrt5)/2, psi = 1 - phi = -1/phi, and the slope
// d_g = ln(phi)/(pi/2) of the spiral that grows by phi per quarter turn.
struct GoldenConstants {
    double phi;
    double psi;
    double d_g;
};
GoldenConstants golden_constants();

// r0 * exp(d_g * theta).
double golden_radius(double r0, double theta);

// Radius after n quarter turns: r0 * phi^n.
double quarter_turn_progression(double r0, int n);

// F_n with F_0 = 0, F_1 = 1; n in [0, 92] (int64 overflow guard).
std::int64_t fibonacci(int n);

// F_n / F_{n-1}; n >= 2.
double ratio_convergence(int n);

// Quarter-circle spiral through the Fibonacci square tiling (squares
// attached counter-clockwise: right, up, left, down). Arc k has radius
// F_k * unit and spans a quarter turn; consecutive arcs share endpoints
// and tangents by construction. n_arcs >= 2.
Polyline fibonacci_spiral(int n_arcs, double unit = 1.0, int samples_per_arc = 32);

// Relative mismatch between the Fibonacci arc radii and a golden spiral,
// angles matched by cumulative quarter turns. The comparison window is the
// outermost full turn and the golden spiral's anchor radius is fitted over
// that window, so the value reflects how closely the latest arcs follow the
// phi-growth law; it decreases with n_arcs but never reaches zero (adjacent
// Fibonacci ratios only approach phi).
double golden_deviation(int n_arcs);

// Residuals of the defining identities: phi^2 - phi - 1, psi^2 - psi - 1,
// and max over n <= 20 of |phi^n - phi^{n-1} - phi^{n-2}| * phi^{-n}.
struct RecurrenceResiduals {
    double phi_quadratic;
    double psi_quadratic;
    double max_recurrence_scaled;
};
RecurrenceResiduals quadratic_and_recurrence_check();

// Finite-difference residuals of r'' + r' - r = 0 along r_phi = r0 e^{-phi t}
// and r_psi = r0 e^{-psi t} (the two branches the golden quadratic admits;
// the psi branch grows). >= 5 uniform samples; interior residuals returned.
struct GoldenOdeResiduals {
    std::vector<double> phi_branch;
    std::vector<double> psi_branch;
};
GoldenOdeResiduals golden_ode_check(const std::vector<double>& times, double r0 = 1.0);

}  // namespace fraclab::golden
