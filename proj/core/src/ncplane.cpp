#include "fraclab/ncplane.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "fraclab/fock.hpp"

namespace fraclab::ncplane {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

NCParams::NCParams(Scheme s, double unit_sq, std::optional<double> gamma)
    : scheme_(s), unit_sq_(unit_sq), gamma_(gamma) {}

NCParams NCParams::from_length(double L) {
    if (!(L > 0.0))
        throw std::invalid_argument("NCParams: L must be positive");
    return NCParams(Scheme::length, L * L, std::nullopt);
}

NCParams NCParams::from_deformation(double q) {
    if (!(q > 0.0))
        throw std::invalid_argument("NCParams: q must be positive");
    return NCParams(Scheme::deformation, q * q, std::nullopt);
}

NCParams NCParams::from_damping(double gamma) {
    if (!(gamma > 0.0))
        throw std::invalid_argument("NCParams: gamma must be positive");
    return NCParams(Scheme::length, 1.0 / gamma, gamma);
}

std::vector<double> quantized_radii(const NCParams& params, int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("quantized_radii: n_max must be >= 0");
    std::vector<double> out(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        out[n] = params.unit_sq() * (2.0 * n + 1.0);
    return out;
}

DeformedLadder deformed_ladder(double q, int cutoff) {
    if (!(q > 0.0))
        throw std::invalid_argument("deformed_ladder: q must be positive");
    if (cutoff < 4)
        throw std::invalid_argument("deformed_ladder: cutoff must be >= 4");

    const Operator a = fock::annihilation(cutoff);
    const Operator ad = a.adjoint();
    const double rs2 = 1.0 / std::sqrt(2.0);
    const Operator x = rs2 * (a + ad);
    const Operator p = -kI * rs2 * (a - ad);

    DeformedLadder lad;
    lad.x1 = x;
    lad.x2 = q * q * p;
    lad.z = (x + kI * q * q * p) / (q * std::sqrt(2.0));
    lad.z_dag = lad.z.adjoint();
    return lad;
}

double interference_phase(double area, const NCParams& params) {
    if (area < 0.0)
        throw std::invalid_argument("interference_phase: area must be >= 0");
    return area / params.unit_sq();
}

CommutatorDeviations velocity_xi_commutators(const spiral::MechanicalParams& mech,
                                             int cutoff, int margin) {
    if (cutoff < 8)
        throw std::invalid_argument("velocity_xi_commutators: cutoff must be >= 8");
    if (!(mech.gamma > 0.0))
        throw std::invalid_argument(
            "velocity_xi_commutators: gamma must be positive (xi scales as 1/gamma)");

    const Operator a = fock::annihilation(cutoff);
    const Operator ad = a.adjoint();
    const double rs2 = 1.0 / std::sqrt(2.0);
    const Operator x = rs2 * (a + ad);
    const Operator p = -kI * rs2 * (a - ad);
    const Operator id = identity_like(cutoff);

    // Two independent canonical pairs: (z+, p+) on the first factor,
    // (z-, p-) on the second.
    const Operator zp = kron(x, id);
    const Operator pp = kron(p, id);
    const Operator zm = kron(id, x);
    const Operator pm = kron(id, p);

    const double m = mech.m, g = mech.gamma;
    const Operator vp = (pm - 0.5 * g * zp) / m;
    const Operator vm = (pp + 0.5 * g * zm) / m;
    const Operator xip = -(m / g) * vp;
    const Operator xim = +(m / g) * vm;

    const Operator id2 = identity_like(cutoff * cutoff);
    CommutatorDeviations dev;
    dev.velocity = tensor_interior_deviation(commutator(vp, vm),
                                             Operator(-kI * g / (m * m) * id2),
                                             cutoff, margin);
    dev.xi = tensor_interior_deviation(commutator(xip, xim),
                                       Operator(kI / g * id2), cutoff, margin);
    return dev;
}

UncertaintyResult uncertainty_check(double q, int cutoff, int level) {
    if (cutoff < 16)
        throw std::invalid_argument("uncertainty_check: cutoff must be >= 16");
    if (level < 0 || level >= cutoff)
        throw std::invalid_argument("uncertainty_check: level out of range");

    const DeformedLadder lad = deformed_ladder(q, cutoff);
    const Operator nq = lad.z_dag * lad.z;
    Eigen::SelfAdjointEigenSolver<Operator> solver(nq);
    const Eigen::VectorXcd psi = solver.eigenvectors().col(level);

    const auto variance = [&psi](const Operator& op) {
        const std::complex<double> mean = psi.dot(op * psi);
        const std::complex<double> second = psi.dot(op * (op * psi));
        return second.real() - mean.real() * mean.real();
    };

    UncertaintyResult out;
    out.product = std::sqrt(variance(lad.x1)) * std::sqrt(variance(lad.x2));
    out.bound = q * q / 2.0;
    return out;
}

double fractal_energy(double q, int n) {
    if (!(q > 0.0))
        throw std::invalid_argument("fractal_energy: q must be positive");
    if (n < 0)
        throw std::invalid_argument("fractal_energy: n must be >= 0");
    return q * q * (n + 0.5);
}

DeformedSpectrum deformed_spectrum(double q, int count) {
    if (!(q > 0.0))
        throw std::invalid_argument("deformed_spectrum: q must be positive");
    if (count < 1)
        throw std::invalid_argument("deformed_spectrum: count must be >= 1");

    // The n-th eigenvector is a squeezed number state whose Fock support
    // reaches roughly n * max(q^2, 1/q^2) and then decays slowly (geometric
    // in tanh|ln q^2|), so the operator needs headroom well past the
    // stretched support or the top requested eigenvalues come out distorted.
    const double stretch = std::max(q * q, 1.0 / (q * q));
    const int working_dim =
        static_cast<int>(std::ceil(1.75 * count * stretch)) + 48;

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(working_dim, working_dim);
    for (int n = 1; n < working_dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    const double rs2 = 1.0 / std::sqrt(2.0);
    const Eigen::MatrixXd x = rs2 * (a + a.transpose());
    const Eigen::MatrixXd w = rs2 * (a - a.transpose());  // i * p
    const Eigen::MatrixXd h = x * x - std::pow(q, 4.0) * (w * w);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    DeformedSpectrum out;
    out.working_dim = working_dim;
    out.eigenvalues.assign(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + count);
    return out;
}

}  // namespace fraclab::ncplane
