#include "fraclab/fock.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace fraclab::fock {

QDeformation QDeformation::from_q(double q) {
    if (!(q > 0.0))
        throw std::invalid_argument("QDeformation: q must be positive");
    return {q, std::log(q)};
}

QDeformation QDeformation::from_zeta(double zeta) {
    return {std::exp(zeta), zeta};
}

namespace {

void check_dim(int dim, int min_dim = 2) {
    if (dim < min_dim)
        throw std::invalid_argument("Fock operator dimension must be >= "
                                    + std::to_string(min_dim));
}

std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

}  // namespace

Operator annihilation(int dim) {
    check_dim(dim);
    Operator a = Operator::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

Operator creation(int dim) { return annihilation(dim).adjoint(); }

Operator number(int dim) {
    const Operator a = annihilation(dim);
    return a.adjoint() * a;
}

double coherent_tail_mass(double abs_alpha_sq, int dim) {
    if (abs_alpha_sq < 0.0)
        throw std::invalid_argument("coherent_tail_mass: |alpha|^2 must be >= 0");
    check_dim(dim, 1);
    if (abs_alpha_sq == 0.0) return 0.0;

    // Poisson(|alpha|^2) upper tail from n = dim, summed in log space.
    const double lam = abs_alpha_sq;
    double term = std::exp(-lam + dim * std::log(lam) - std::lgamma(dim + 1.0));
    double sum = 0.0;
    for (int n = dim; n < dim + 20000; ++n) {
        sum += term;
        term *= lam / (n + 1.0);
        if (term < sum * 1e-18 + 1e-320) break;
    }
    return sum;
}

int required_coherent_dim(double abs_alpha_sq, double tail_tol) {
    if (!(tail_tol > 0.0))
        throw std::invalid_argument("required_coherent_dim: tolerance must be positive");
    int dim = std::max(2, static_cast<int>(std::ceil(abs_alpha_sq)));
    while (coherent_tail_mass(abs_alpha_sq, dim) >= tail_tol) {
        ++dim;
        if (dim > 1000000)
            throw std::invalid_argument("required_coherent_dim: tolerance unreachable");
    }
    return dim;
}

FockState coherent_state(Complex alpha, int dim, double tail_tol) {
    check_dim(dim);
    const double lam = std::norm(alpha);
    const double tail = coherent_tail_mass(lam, dim);
    if (!(tail < tail_tol)) {
        throw CutoffError("coherent_state: tail mass " + fmt_g(tail)
                              + " exceeds tolerance at dim " + std::to_string(dim),
                          required_coherent_dim(lam, tail_tol));
    }

    FockState psi;
    psi.amplitudes = Eigen::VectorXcd::Zero(dim);
    psi.amplitudes[0] = std::exp(-lam / 2.0);
    for (int n = 1; n < dim; ++n)
        psi.amplitudes[n] = psi.amplitudes[n - 1] * alpha / std::sqrt(double(n));
    psi.tail_mass = tail;
    return psi;
}

Operator fractal_operator(const QDeformation& q, int dim) {
    check_dim(dim);
    Operator op = Operator::Zero(dim, dim);
    double qn = 1.0;
    for (int n = 0; n < dim; ++n) {
        op(n, n) = qn;
        qn *= q.q;
    }
    return op;
}

namespace {

// In-place application of the annihilation operator to an amplitude vector.
void apply_annihilation(Eigen::VectorXcd& v) {
    const int dim = static_cast<int>(v.size());
    for (int m = 0; m + 1 < dim; ++m) v[m] = std::sqrt(double(m + 1)) * v[m + 1];
    v[dim - 1] = 0.0;
}

}  // namespace

Complex magnifying_lens(const QDeformation& q, Complex alpha, int n, int dim,
                        double tail_tol) {
    if (n < 0)
        throw std::invalid_argument("magnifying_lens: n must be >= 0");
    const FockState psi = coherent_state(q.q * alpha, dim, tail_tol);
    Eigen::VectorXcd v = psi.amplitudes;
    for (int k = 0; k < n; ++k) apply_annihilation(v);
    return psi.amplitudes.dot(v);
}

Operator single_mode_squeeze(double zeta, int dim) {
    check_dim(dim);
    if (!(std::abs(zeta) <= 5.0))
        throw std::domain_error("single_mode_squeeze: |zeta| <= 5 required");

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    const Eigen::MatrixXd a2 = a * a;
    // The generator is real and antisymmetric, so the exponential stays
    // real-orthogonal (unitary) even after truncation.
    const Eigen::MatrixXd x = -0.5 * zeta * (a2 - a2.transpose());
    return matrix_exponential(x).cast<Complex>();
}

Complex inner(const FockState& a, const FockState& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("inner: dimension mismatch");
    return a.amplitudes.dot(b.amplitudes);
}

Complex expectation(const Operator& op, const FockState& psi) {
    if (op.rows() != psi.dim() || op.cols() != psi.dim())
        throw std::invalid_argument("expectation: dimension mismatch");
    return psi.amplitudes.dot(op * psi.amplitudes);
}

FockState apply(const Operator& op, const FockState& psi) {
    if (op.rows() != op.cols() || op.cols() != psi.dim())
        throw std::invalid_argument("apply: dimension mismatch");
    FockState out;
    out.amplitudes = op * psi.amplitudes;
    out.tail_mass = 0.0;
    return out;
}

}  // namespace fraclab::fock
