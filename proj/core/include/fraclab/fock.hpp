#pragma once

#include <complex>

#include "fraclab/errors.hpp"
#include "fraclab/linalg.hpp"

namespace fraclab::fock {

using Complex = std::complex<double>;

// Deformation parameter q = e^zeta, q > 0. q < 1 contracts, q > 1 dilates,
// q = 1 is the identity deformation.
struct QDeformation {
    double q;
    double zeta;

    static QDeformation from_q(double q);
    static QDeformation from_zeta(double zeta);
};

// State vector on the truncated number basis |0..dim-1>. tail_mass is the
// analytic probability mass beyond the truncation when the constructor can
// compute it, 0 otherwise.
struct FockState {
    Eigen::VectorXcd amplitudes;
    double tail_mass = 0.0;

    int dim() const { return static_cast<int>(amplitudes.size()); }
    double norm() const { return amplitudes.norm(); }
};

// Ladder operators on the truncated basis. annihilation(dim) has
// sqrt(n) on the first superdiagonal; creation is its adjoint; number is
// the product creation*annihilation (diagonal 0..dim-1 up to rounding
// of sqrt(n)^2).
Operator annihilation(int dim);
Operator creation(int dim);
Operator number(int dim);

// Probability mass of the coherent state |alpha> beyond level dim-1, i.e.
// the Poisson(|alpha|^2) upper tail starting at dim.
double coherent_tail_mass(double abs_alpha_sq, int dim);

// Smallest dimension whose coherent tail is below tail_tol.
int required_coherent_dim(double abs_alpha_sq, double tail_tol);

// Coherent state amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!). Throws
// CutoffError when the analytic tail at dim is not below tail_tol.
FockState coherent_state(Complex alpha, int dim, double tail_tol = 1e-12);

// Diagonal contraction q^N = diag(q^n). Maps |alpha> to a vector
// proportional to |q alpha| (the scale factor e^{(|q alpha|^2-|alpha|^2)/2}
// is not unity, so this is not norm-preserving for q != 1).
Operator fractal_operator(const QDeformation& q, int dim);

// Expectation <q alpha| a^n |q alpha>; equals (q alpha)^n in the
// untruncated algebra.
Complex magnifying_lens(const QDeformation& q, Complex alpha, int n, int dim,
                        double tail_tol = 1e-12);

// Single-mode squeeze exp(-(zeta/2)(a^2 - a^+2)). The generator is
// anti-Hermitian even on the truncated basis, so the result is exactly
// unitary up to rounding. |zeta| <= 5 enforced (beyond that the truncated
// matrix no longer resembles the operator it stands for).
Operator single_mode_squeeze(double zeta, int dim);

Complex inner(const FockState& a, const FockState& b);
Complex expectation(const Operator& op, const FockState& psi);
FockState apply(const Operator& op, const FockState& psi);

}  // namespace fraclab::fock
