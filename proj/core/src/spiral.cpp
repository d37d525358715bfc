#include "fraclab/spiral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fraclab::spiral {

SpiralParams::SpiralParams(double r0, double d, Handedness h)
    : r0(r0), d(d), handedness(h) {
    if (!(r0 > 0.0))
        throw std::invalid_argument("SpiralParams: r0 must be positive");
    if (d == 0.0)
        throw std::invalid_argument("SpiralParams: slope d must be nonzero");
}

MechanicalParams::MechanicalParams(double m, double gamma, double kappa)
    : m(m), gamma(gamma), kappa(kappa) {
    if (!(m > 0.0) || !(gamma >= 0.0) || !(kappa > 0.0))
        throw std::invalid_argument(
            "MechanicalParams: m and kappa must be positive, gamma nonnegative");
    if (!(kappa > gamma * gamma / (4.0 * m)))
        throw std::invalid_argument(
            "MechanicalParams: kappa must exceed gamma^2/(4m) (underdamped regime)");
}

double MechanicalParams::Gamma() const { return gamma / (2.0 * m); }

double MechanicalParams::Omega() const {
    const double g = Gamma();
    return std::sqrt(kappa / m - g * g);
}

double MechanicalParams::slope() const { return Gamma() / Omega(); }

double MechanicalParams::period() const { return 2.0 * std::numbers::pi / Omega(); }

double spiral_radius(const SpiralParams& p, double theta) {
    const double sign = p.handedness == Handedness::direct ? 1.0 : -1.0;
    return p.r0 * std::exp(sign * p.d * theta);
}

Point spiral_point(const SpiralParams& p, double theta) {
    const double r = spiral_radius(p, theta);
    return {r * std::cos(theta), r * std::sin(theta)};
}

double theta_of_t(const MechanicalParams& mech, double d, double t) {
    if (d == 0.0)
        throw std::invalid_argument("theta_of_t: d must be nonzero");
    return mech.Gamma() / d * t;
}

Trajectory analytic_trajectory(const MechanicalParams& mech, double r0,
                               std::vector<double> times) {
    if (!(r0 > 0.0))
        throw std::invalid_argument("analytic_trajectory: r0 must be positive");

    Trajectory traj;
    traj.times = std::move(times);
    traj.z1.reserve(traj.times.size());
    traj.z2.reserve(traj.times.size());
    const double G = mech.Gamma();
    const double W = mech.Omega();
    for (double t : traj.times) {
        const Complex rot = std::polar(1.0, W * t);
        traj.z1.push_back(r0 * std::conj(rot) * std::exp(-G * t));
        traj.z2.push_back(r0 * rot * std::exp(G * t));
    }
    return traj;
}

namespace {

struct ComplexDerivatives {
    std::vector<Complex> d1;
    std::vector<Complex> d2;
};

ComplexDerivatives differentiate(const std::vector<Complex>& z, double h) {
    std::vector<double> re(z.size()), im(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        re[i] = z[i].real();
        im[i] = z[i].imag();
    }
    const auto re1 = central_derivative1(re, h);
    const auto im1 = central_derivative1(im, h);
    const auto re2 = central_derivative2(re, h);
    const auto im2 = central_derivative2(im, h);

    ComplexDerivatives out;
    out.d1.resize(re1.size());
    out.d2.resize(re1.size());
    for (std::size_t i = 0; i < re1.size(); ++i) {
        out.d1[i] = {re1[i], im1[i]};
        out.d2[i] = {re2[i], im2[i]};
    }
    return out;
}

}  // namespace

std::vector<ResidualPair> ode_residual(const MechanicalParams& mech,
                                       const Trajectory& traj) {
    const double h = uniform_step(traj.times);
    if (traj.z1.size() != traj.times.size() || traj.z2.size() != traj.times.size())
        throw std::invalid_argument("ode_residual: trajectory length mismatch");
    const auto d1 = differentiate(traj.z1, h);
    const auto d2 = differentiate(traj.z2, h);

    std::vector<ResidualPair> out(d1.d1.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t j = i + 2;  // interior sample index
        out[i].damped = std::abs(mech.m * d1.d2[i] + mech.gamma * d1.d1[i]
                                 + mech.kappa * traj.z1[j]);
        out[i].amplified = std::abs(mech.m * d2.d2[i] - mech.gamma * d2.d1[i]
                                    + mech.kappa * traj.z2[j]);
    }
    return out;
}

std::vector<ResidualPair> rho_residual(const MechanicalParams& mech, double d,
                                       const std::vector<double>& times,
                                       double r0, double omega_override) {
    const double h = uniform_step(times);
    if (d == 0.0)
        throw std::invalid_argument("rho_residual: d must be nonzero");

    const double W = omega_override != 0.0 ? omega_override : mech.Omega();
    const double K = mech.m * W * W;  // effective stiffness m*Omega^2

    std::vector<Complex> rp(times.size()), rm(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double th = theta_of_t(mech, d, times[i]);
        rp[i] = r0 * std::polar(1.0, th);
        rm[i] = r0 * std::polar(1.0, -th);
    }
    const auto dp = differentiate(rp, h);
    const auto dm = differentiate(rm, h);

    std::vector<ResidualPair> out(dp.d2.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t j = i + 2;
        out[i].damped = std::abs(mech.m * dp.d2[i] + K * rp[j]);
        out[i].amplified = std::abs(mech.m * dm.d2[i] + K * rm[j]);
    }
    return out;
}

Trajectory integrate_doubled_system(const MechanicalParams& mech,
                                    Complex z1_0, Complex z2_0,
                                    Complex v1_0, Complex v2_0,
                                    double t_end, int steps) {
    if (steps < 16)
        throw std::invalid_argument("integrate_doubled_system: steps must be >= 16");
    if (!(t_end > 0.0))
        throw std::invalid_argument("integrate_doubled_system: t_end must be positive");

    const double m = mech.m, g = mech.gamma, k = mech.kappa;
    // State layout: re/im of z1, z2, v1, v2.
    auto rhs = [m, g, k](double, const std::vector<double>& y) {
        std::vector<double> dy(8);
        dy[0] = y[4];
        dy[1] = y[5];
        dy[2] = y[6];
        dy[3] = y[7];
        dy[4] = (-g * y[4] - k * y[0]) / m;
        dy[5] = (-g * y[5] - k * y[1]) / m;
        dy[6] = (g * y[6] - k * y[2]) / m;
        dy[7] = (g * y[7] - k * y[3]) / m;
        return dy;
    };

    const double h = t_end / steps;
    const std::vector<double> y0 = {z1_0.real(), z1_0.imag(), z2_0.real(), z2_0.imag(),
                                    v1_0.real(), v1_0.imag(), v2_0.real(), v2_0.imag()};
    const auto states = rk4_integrate(rhs, 0.0, y0, h, steps);

    Trajectory traj;
    traj.times.reserve(states.size());
    traj.z1.reserve(states.size());
    traj.z2.reserve(states.size());
    traj.p_z1.reserve(states.size());
    traj.p_z2.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& y = states[i];
        traj.times.push_back(h * static_cast<double>(i));
        const Complex z1{y[0], y[1]}, z2{y[2], y[3]}, v1{y[4], y[5]}, v2{y[6], y[7]};
        traj.z1.push_back(z1);
        traj.z2.push_back(z2);
        traj.p_z1.push_back(m * v2 - 0.5 * g * z2);
        traj.p_z2.push_back(m * v1 + 0.5 * g * z1);
    }
    return traj;
}

LineFit fit_loglog_slope(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 3)
        throw std::invalid_argument("fit_loglog_slope: need at least 3 samples");

    std::vector<double> theta(samples.size()), logr(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].second > 0.0))
            throw std::invalid_argument("fit_loglog_slope: radii must be positive");
        theta[i] = samples[i].first;
        logr[i] = std::log(samples[i].second);
    }
    return fit_line(theta, logr);
}

}  // namespace fraclab::spiral
