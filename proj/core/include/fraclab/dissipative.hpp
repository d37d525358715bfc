#pragma once

#include "fraclab/errors.hpp"
#include "fraclab/linalg.hpp"

namespace fraclab::dissipative {

// State confined to the paired levels |n,n> of a two-mode space,
// n = 0..cutoff-1. truncation_deficit is the analytic probability mass
// beyond the cutoff (norm^2 + deficit = 1 for normalized states).
struct TwoModeState {
    int cutoff;
    Eigen::VectorXcd pair_amplitudes;
    bool full_support = false;
    double truncation_deficit = 0.0;

    double norm() const { return pair_amplitudes.norm(); }
};

// su(1,1) realization on the truncated two-mode tensor space:
// Jplus = A+B+, Jminus = AB, J2 = (i/2)(AB - A+B+),
// casimir = (A+A - B+B)/2.
struct SU11Generators {
    Operator Jplus;
    Operator Jminus;
    Operator J2;
    Operator casimir;
};

// Mixed modes A = (a+b)/sqrt(2), B = (a-b)/sqrt(2) lifted to the tensor
// space of per-mode dimension `cutoff` (total dimension cutoff^2), plus the
// assembled su(1,1) generators.
struct TwoModes {
    int cutoff;
    Operator A;
    Operator B;
    SU11Generators gen;
};

TwoModes build_modes(int cutoff);

// H0 = 2 Omega casimir and HI = -2 Gamma J2 (hbar = 1).
Operator free_hamiltonian(const TwoModes& modes, double Omega);
Operator interaction_hamiltonian(const TwoModes& modes, double Gamma);

// Evolved vacuum amplitudes tanh^n(Gamma t)/cosh(Gamma t) on |n,n>.
// Throws CutoffError when tanh^{2K}(Gamma t)/cosh^2(Gamma t) >= tail_tol.
TwoModeState vacuum_evolution(double Gamma, double t, int cutoff,
                              double tail_tol = 1e-12);

// Smallest cutoff accepted by vacuum_evolution at the given tolerance.
int required_pair_cutoff(double Gamma_t, double tail_tol = 1e-12);

// Generator G of the evolution reduced to the pair subspace:
// amplitudes(t) = exp(Gamma t G) e0, with G[n+1][n] = n+1, G[n][n+1] = -(n+1).
Eigen::MatrixXd pair_evolution_generator(int cutoff);

// Same state as vacuum_evolution but via the matrix exponential of the
// reduced generator; no tail precondition (used as the independent route).
TwoModeState vacuum_evolution_numeric(double Gamma, double t, int cutoff);

// Overlap <0(t)|0> = 1/cosh(Gamma t).
double vacuum_fidelity(double Gamma, double t);

enum class Mode { A, B };

// Entropy operator -{N ln sinh^2(Gamma t) - (N+1) ln cosh^2(Gamma t)} for
// the chosen mode, on the tensor space. Gamma t > 0 (log singular at 0).
Operator entropy_operator(double Gamma, double t, int cutoff, Mode mode = Mode::A);

// <S_A> on the evolved vacuum, summed in the pair representation. Returns
// the analytic limit 0 at t = 0 (removable singularity).
double entropy_expectation(double Gamma, double t, int cutoff);

// cosh^2 ln cosh^2 - sinh^2 ln sinh^2 at Gamma t.
double entropy_closed_form(double Gamma, double t);

// Thermodynamic bookkeeping on the evolved vacuum: U = <2 Omega casimir>
// (zero on paired levels), S = 2<J2>, T = Gamma, F = U - T S, and the
// finite-difference (dF/dT) at fixed state. entropy_operator_expectation
// carries <S_A> so both entropy candidates appear side by side.
struct Thermodynamics {
    double internal_energy;
    double entropy;
    double temperature;
    double free_energy;
    double dF_dT;
    double entropy_operator_expectation;
};
Thermodynamics thermodynamics(double Gamma, double Omega, double t, int cutoff);

// Max interior deviation of (c^2 - c+^2) - (ct^2 - ct+^2) + 2(C+D+ - CD)
// with C = (c+ct)/sqrt(2), D = (c-ct)/sqrt(2); the identity is exact in the
// untruncated algebra. cutoff is per mode, >= 8.
double doubled_fractal_identity(int cutoff, int margin = 2);

// Finite squeeze transformation exp(-(Gamma t/2)[(a^2-a+^2)-(b^2-b+^2)])
// on the tensor space; squeezing parameter zeta = -Gamma t per mode a.
// |Gamma t| <= 5 guard as for the single-mode squeeze.
Operator two_mode_squeeze_generator(double Gamma, double t, int cutoff);

// Amplitudes <n,n| U(t) |0,0> computed from the factorized form
// U = U_a(z) (x) U_b(-z): single-mode squeezed columns contracted into the
// paired basis. Independent of the closed form; used to cross-check it.
Eigen::VectorXd squeezed_pair_amplitudes(double Gamma, double t, int n_pairs);

}  // namespace fraclab::dissipative
