#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "fraclab/geometry.hpp"
#include "fraclab/numerics.hpp"

namespace fraclab::spiral {

using Complex = std::complex<double>;

enum class Handedness { direct, indirect };

// Logarithmic spiral r(theta) = r0 * exp(+/- d * theta); direct takes the
// growing branch, indirect the mirror image.
struct SpiralParams {
    double r0;
    double d;
    Handedness handedness = Handedness::direct;

    SpiralParams(double r0, double d, Handedness h = Handedness::direct);
};

// Damped/amplified oscillator pair m z1'' + g z1' + k z1 = 0,
// m z2'' - g z2' + k z2 = 0. Requires kappa > gamma^2 / (4 m) so the
// reduced frequency Omega is real.
struct MechanicalParams {
    double m;
    double gamma;
    double kappa;

    MechanicalParams(double m, double gamma, double kappa);

    double Gamma() const;    // gamma / (2m)
    double Omega() const;    // sqrt(kappa/m - Gamma^2)
    double slope() const;    // d = Gamma / Omega
    double period() const;   // T = 2 pi d / Gamma = 2 pi / Omega
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Complex> z1;
    std::vector<Complex> z2;
    // Canonical momenta p_z1 = m z2' - gamma z2 / 2, p_z2 = m z1' + gamma z1 / 2.
    // Filled by the integrator; empty on analytic trajectories.
    std::vector<Complex> p_z1;
    std::vector<Complex> p_z2;
};

Point spiral_point(const SpiralParams& p, double theta);
double spiral_radius(const SpiralParams& p, double theta);

// Winding angle theta(t) = (Gamma / d) t, additive constant fixed to zero.
double theta_of_t(const MechanicalParams& mech, double d, double t);

// z1 = r0 e^{-i Omega t} e^{-Gamma t}, z2 = r0 e^{+i Omega t} e^{+Gamma t}.
Trajectory analytic_trajectory(const MechanicalParams& mech, double r0,
                               std::vector<double> times);

// |m z'' +/- gamma z' + kappa z| per interior sample, via 4th-order central
// differences (first/last two samples dropped). Requires >= 5 uniform samples.
struct ResidualPair {
    double damped;
    double amplified;
};
std::vector<ResidualPair> ode_residual(const MechanicalParams& mech,
                                       const Trajectory& traj);

// Residual of m rho'' + m Omega^2 rho = 0 for rho = r0 e^{+/- i theta(t)},
// same differencing scheme. omega_override substitutes a perturbed frequency
// (negative control); pass 0 to use mech.Omega().
std::vector<ResidualPair> rho_residual(const MechanicalParams& mech, double d,
                                       const std::vector<double>& times,
                                       double r0 = 1.0,
                                       double omega_override = 0.0);

// Fixed-step RK4 on the first-order form of the oscillator pair; fills the
// canonical momenta per sample. steps >= 16.
Trajectory integrate_doubled_system(const MechanicalParams& mech,
                                    Complex z1_0, Complex z2_0,
                                    Complex v1_0, Complex v2_0,
                                    double t_end, int steps);

// Least-squares line through (theta, ln r). Requires >= 3 samples, r > 0.
LineFit fit_loglog_slope(const std::vector<std::pair<double, double>>& samples);

}  // namespace fraclab::spiral
