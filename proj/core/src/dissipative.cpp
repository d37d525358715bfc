#include "fraclab/dissipative.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace fraclab::dissipative {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

Eigen::MatrixXd real_ladder(int dim) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

void check_nonnegative_time(double Gamma, double t) {
    if (Gamma * t < 0.0)
        throw std::invalid_argument("Gamma * t must be >= 0");
}

}  // namespace

TwoModes build_modes(int cutoff) {
    if (cutoff < 4)
        throw std::invalid_argument("build_modes: cutoff must be >= 4");

    const Operator a = real_ladder(cutoff).cast<std::complex<double>>();
    const Operator id = identity_like(cutoff);
    const Operator a1 = kron(a, id);
    const Operator a2 = kron(id, a);
    const double rs2 = 1.0 / std::sqrt(2.0);

    TwoModes modes;
    modes.cutoff = cutoff;
    modes.A = rs2 * (a1 + a2);
    modes.B = rs2 * (a1 - a2);
    modes.gen.Jplus = modes.A.adjoint() * modes.B.adjoint();
    modes.gen.Jminus = modes.A * modes.B;
    modes.gen.J2 = 0.5 * kI * (modes.gen.Jminus - modes.gen.Jplus);
    modes.gen.casimir =
        0.5 * (modes.A.adjoint() * modes.A - modes.B.adjoint() * modes.B);
    return modes;
}

Operator free_hamiltonian(const TwoModes& modes, double Omega) {
    return 2.0 * Omega * modes.gen.casimir;
}

Operator interaction_hamiltonian(const TwoModes& modes, double Gamma) {
    return -2.0 * Gamma * modes.gen.J2;
}

int required_pair_cutoff(double Gamma_t, double tail_tol) {
    if (Gamma_t < 0.0)
        throw std::invalid_argument("required_pair_cutoff: Gamma * t must be >= 0");
    if (!(tail_tol > 0.0))
        throw std::invalid_argument("required_pair_cutoff: tolerance must be positive");
    if (Gamma_t == 0.0) return 2;

    const double lth = std::log(std::tanh(Gamma_t));
    const double lch = std::log(std::cosh(Gamma_t));
    // Smallest K with tanh^{2K} / cosh^2 < tol.
    const double bound = (std::log(tail_tol) + 2.0 * lch) / (2.0 * lth);
    return std::max(2, static_cast<int>(std::floor(bound)) + 1);
}

TwoModeState vacuum_evolution(double Gamma, double t, int cutoff, double tail_tol) {
    check_nonnegative_time(Gamma, t);
    if (cutoff < 2)
        throw std::invalid_argument("vacuum_evolution: cutoff must be >= 2");

    const double x = Gamma * t;
    const double th = std::tanh(x);
    const double ch = std::cosh(x);
    const double spec_tail =
        x == 0.0 ? 0.0 : std::exp(2.0 * cutoff * std::log(th) - 2.0 * std::log(ch));
    if (!(spec_tail < tail_tol)) {
        throw CutoffError(
            "vacuum_evolution: analytic tail " + fmt_g(spec_tail)
                + " at cutoff " + std::to_string(cutoff),
            required_pair_cutoff(x, tail_tol));
    }

    TwoModeState state;
    state.cutoff = cutoff;
    state.full_support = false;
    state.pair_amplitudes = Eigen::VectorXcd::Zero(cutoff);
    double amp = 1.0 / ch;
    for (int n = 0; n < cutoff; ++n) {
        state.pair_amplitudes[n] = amp;
        amp *= th;
    }
    // Total mass beyond the cutoff: sum of tanh^{2n}/cosh^2 from K on.
    state.truncation_deficit = x == 0.0 ? 0.0 : std::pow(th, 2.0 * cutoff);
    return state;
}

Eigen::MatrixXd pair_evolution_generator(int cutoff) {
    if (cutoff < 2)
        throw std::invalid_argument("pair_evolution_generator: cutoff must be >= 2");
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(cutoff, cutoff);
    for (int n = 0; n + 1 < cutoff; ++n) {
        g(n + 1, n) = n + 1.0;
        g(n, n + 1) = -(n + 1.0);
    }
    return g;
}

TwoModeState vacuum_evolution_numeric(double Gamma, double t, int cutoff) {
    check_nonnegative_time(Gamma, t);
    const Eigen::MatrixXd u = matrix_exponential(
        Eigen::MatrixXd(Gamma * t * pair_evolution_generator(cutoff)));

    TwoModeState state;
    state.cutoff = cutoff;
    state.full_support = false;
    state.pair_amplitudes = u.col(0).cast<std::complex<double>>();
    state.truncation_deficit = 1.0 - state.pair_amplitudes.squaredNorm();
    return state;
}

double vacuum_fidelity(double Gamma, double t) {
    check_nonnegative_time(Gamma, t);
    return 1.0 / std::cosh(Gamma * t);
}

Operator entropy_operator(double Gamma, double t, int cutoff, Mode mode) {
    if (!(Gamma * t > 0.0))
        throw std::domain_error(
            "entropy_operator: singular at Gamma*t = 0 (the limit value is 0)");
    if (cutoff < 2)
        throw std::invalid_argument("entropy_operator: cutoff must be >= 2");

    const double x = Gamma * t;
    const double ln_sh2 = 2.0 * std::log(std::sinh(x));
    const double ln_ch2 = 2.0 * std::log(std::cosh(x));

    const Eigen::MatrixXd a = real_ladder(cutoff);
    const Eigen::MatrixXd single =
        -(a.transpose() * a * ln_sh2 - a * a.transpose() * ln_ch2);
    const Operator lifted = mode == Mode::A
        ? kron(single, Eigen::MatrixXd::Identity(cutoff, cutoff)).cast<std::complex<double>>()
        : kron(Eigen::MatrixXd::Identity(cutoff, cutoff), single).cast<std::complex<double>>();
    return lifted;
}

double entropy_expectation(double Gamma, double t, int cutoff) {
    if (Gamma * t == 0.0) return 0.0;  // removable singularity
    const TwoModeState state = vacuum_evolution(Gamma, t, cutoff);

    const double x = Gamma * t;
    const double ln_sh2 = 2.0 * std::log(std::sinh(x));
    const double ln_ch2 = 2.0 * std::log(std::cosh(x));
    double sum = 0.0;
    for (int n = 0; n < cutoff; ++n) {
        const double p = std::norm(state.pair_amplitudes[n]);
        sum += p * ((n + 1.0) * ln_ch2 - n * ln_sh2);
    }
    return sum;
}

double entropy_closed_form(double Gamma, double t) {
    const double x = Gamma * t;
    if (x == 0.0) return 0.0;
    const double ch2 = std::cosh(x) * std::cosh(x);
    const double sh2 = std::sinh(x) * std::sinh(x);
    return ch2 * std::log(ch2) - sh2 * std::log(sh2);
}

Thermodynamics thermodynamics(double Gamma, double Omega, double t, int cutoff) {
    const TwoModeState state = vacuum_evolution(Gamma, t, cutoff);
    const auto& c = state.pair_amplitudes;

    // J2 reduced to the pair subspace: J2|n,n> couples to |n-1,n-1> and
    // |n+1,n+1> with (i/2) n and -(i/2)(n+1).
    std::complex<double> j2{0.0, 0.0};
    for (int n = 0; n < cutoff; ++n) {
        if (n > 0) j2 += std::conj(c[n - 1]) * (0.5 * kI * double(n)) * c[n];
        if (n + 1 < cutoff)
            j2 += std::conj(c[n + 1]) * (-0.5 * kI * (n + 1.0)) * c[n];
    }

    Thermodynamics out;
    // The casimir acts as (n_A - n_B)/2 and vanishes on every paired level.
    const double casimir_expectation = 0.0;
    out.internal_energy = 2.0 * Omega * casimir_expectation;
    out.entropy = 2.0 * j2.real();
    out.temperature = Gamma;
    out.free_energy = out.internal_energy - out.temperature * out.entropy;

    const double h = 1e-3 * std::max(1.0, std::abs(Gamma));
    const auto free_energy_at = [&](double T) {
        return out.internal_energy - T * out.entropy;
    };
    out.dF_dT = (free_energy_at(out.temperature + h)
                 - free_energy_at(out.temperature - h)) / (2.0 * h);
    out.entropy_operator_expectation = entropy_expectation(Gamma, t, cutoff);
    return out;
}

double doubled_fractal_identity(int cutoff, int margin) {
    if (cutoff < 8)
        throw std::invalid_argument("doubled_fractal_identity: cutoff must be >= 8");

    const Eigen::MatrixXd a = real_ladder(cutoff);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(cutoff, cutoff);
    const Eigen::MatrixXd c = kron(a, id);
    const Eigen::MatrixXd ct = kron(id, a);
    const double rs2 = 1.0 / std::sqrt(2.0);
    const Eigen::MatrixXd C = rs2 * (c + ct);
    const Eigen::MatrixXd D = rs2 * (c - ct);

    const Eigen::MatrixXd c2 = c * c;
    const Eigen::MatrixXd ct2 = ct * ct;
    const Eigen::MatrixXd lhs = (c2 - c2.transpose()) - (ct2 - ct2.transpose());
    const Eigen::MatrixXd expr =
        lhs + 2.0 * (C.transpose() * D.transpose() - C * D);

    const Operator block = tensor_interior_block(
        expr.cast<std::complex<double>>(), cutoff, margin);
    return operator_norm(block);
}

Operator two_mode_squeeze_generator(double Gamma, double t, int cutoff) {
    if (cutoff < 2)
        throw std::invalid_argument("two_mode_squeeze_generator: cutoff must be >= 2");
    const double zeta = Gamma * t;
    if (!(std::abs(zeta) <= 5.0))
        throw std::domain_error("two_mode_squeeze_generator: |Gamma*t| <= 5 required");

    const Eigen::MatrixXd a = real_ladder(cutoff);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(cutoff, cutoff);
    const Eigen::MatrixXd a2 = a * a;
    const Eigen::MatrixXd gen_single = a2 - a2.transpose();
    const Eigen::MatrixXd x =
        -0.5 * zeta * (kron(gen_single, id) - kron(id, gen_single));
    return matrix_exponential(x).cast<std::complex<double>>();
}

Eigen::VectorXd squeezed_pair_amplitudes(double Gamma, double t, int n_pairs) {
    check_nonnegative_time(Gamma, t);
    if (n_pairs < 1)
        throw std::invalid_argument("squeezed_pair_amplitudes: n_pairs must be >= 1");
    const double zeta = Gamma * t;
    if (!(std::abs(zeta) <= 5.0))
        throw std::domain_error("squeezed_pair_amplitudes: |Gamma*t| <= 5 required");

    if (zeta == 0.0) {
        Eigen::VectorXd c = Eigen::VectorXd::Zero(n_pairs);
        c[0] = 1.0;
        return c;
    }

    // Single-mode working dimension: cover the contraction levels plus the
    // squeezed-vacuum support down to amplitudes ~1e-12.
    const double th = std::tanh(zeta);
    const double lch = std::log(std::cosh(zeta));
    const int k_support = static_cast<int>(std::ceil(
        (std::log(1e-12) + lch) / std::log(std::abs(th)))) + 1;
    const int dim = std::max(2 * n_pairs + 8, 2 * k_support + 32);

    const Eigen::MatrixXd a = real_ladder(dim);
    const Eigen::MatrixXd a2 = a * a;
    const Eigen::MatrixXd gen = a2 - a2.transpose();
    const Eigen::VectorXd u =
        matrix_exponential(Eigen::MatrixXd(-0.5 * zeta * gen)).col(0);
    const Eigen::VectorXd v =
        matrix_exponential(Eigen::MatrixXd(+0.5 * zeta * gen)).col(0);

    // <n,n| over the mixed pair basis contracts the two even columns:
    // c_n = (1/(n! 2^n)) sum_k C(n,k)(-1)^{n-k} sqrt((2k)!(2n-2k)!) u_{2k} v_{2n-2k}.
    Eigen::VectorXd c(n_pairs);
    for (int n = 0; n < n_pairs; ++n) {
        double sum = 0.0;
        for (int k = 0; k <= n; ++k) {
            const double ln_mag = std::lgamma(n + 1.0) - std::lgamma(k + 1.0)
                - std::lgamma(n - k + 1.0)
                + 0.5 * (std::lgamma(2.0 * k + 1.0) + std::lgamma(2.0 * (n - k) + 1.0))
                - std::lgamma(n + 1.0) - n * std::log(2.0);
            const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
            sum += sign * std::exp(ln_mag) * u[2 * k] * v[2 * (n - k)];
        }
        c[n] = sum;
    }
    return c;
}

}  // namespace fraclab::dissipative
