#pragma once

#include <optional>
#include <vector>

#include "fraclab/linalg.hpp"
#include "fraclab/spiral.hpp"

namespace fraclab::ncplane {

enum class Scheme { length, deformation };

// Noncommutativity scale: either a geometric length L or a deformation q,
// never both. The damping construction is the length scheme with
// L^2 = 1/gamma and gamma remembered for phase formulas.
class NCParams {
public:
    static NCParams from_length(double L);
    static NCParams from_deformation(double q);
    static NCParams from_damping(double gamma);

    Scheme scheme() const { return scheme_; }
    // L^2 or q^2: the cell area unit in [x1, x2] = i * unit.
    double unit_sq() const { return unit_sq_; }
    std::optional<double> gamma() const { return gamma_; }

private:
    NCParams(Scheme s, double unit_sq, std::optional<double> gamma);

    Scheme scheme_;
    double unit_sq_;
    std::optional<double> gamma_;
};

// Quantized squared radii delta^2_n = unit^2 * (2n+1), n = 0..n_max.
std::vector<double> quantized_radii(const NCParams& params, int n_max);

// Deformed ladder z_q = (x + i q^2 p)/(q sqrt 2) and the noncommutative
// coordinates x1 = x, x2 = q^2 p, built from the quadratures
// x = (a+a+)/sqrt2, p = (a-a+)/(i sqrt2). [z_q, z_q+] = 1 and
// [x1, x2] = i q^2 on interior blocks.
struct DeformedLadder {
    Operator z;
    Operator z_dag;
    Operator x1;
    Operator x2;
};
DeformedLadder deformed_ladder(double q, int cutoff);

// Interference phase between the two paths around an enclosed area:
// area/L^2, area/q^2, or area*gamma (identical to area/L^2 when
// L^2 = 1/gamma). area >= 0; orientation left to the caller.
double interference_phase(double area, const NCParams& params);

// Interior-block deviations of [v+, v-] + i gamma/m^2 and
// [xi+, xi-] - i/gamma for the doubled system, with v+- = (p_-+ -+ gamma
// z_+-/2)/m and xi+- = -+(m/gamma) v+-. Quantized as two independent
// canonical pairs on a tensor space of per-mode dimension `cutoff`.
struct CommutatorDeviations {
    double velocity;
    double xi;
};
CommutatorDeviations velocity_xi_commutators(const spiral::MechanicalParams& mech,
                                             int cutoff, int margin = 2);

// Delta x1 * Delta x2 on the n-th eigenstate of z_q+ z_q (ground state by
// default) against the bound q^2/2; the ground state saturates it.
struct UncertaintyResult {
    double product;
    double bound;
};
UncertaintyResult uncertainty_check(double q, int cutoff, int level = 0);

// E_n = q^2 (n + 1/2) = delta^2_n / 2 in the deformation scheme.
double fractal_energy(double q, int n);

// Lowest `count` eigenvalues of x1^2 + x2^2. The eigenproblem is solved on
// an enlarged working dimension (the eigenvectors are squeezed states whose
// number-basis support stretches by max(q^2, 1/q^2), so a literal `count`
// truncation would corrupt most of the spectrum); working_dim records it.
struct DeformedSpectrum {
    std::vector<double> eigenvalues;
    int working_dim;
};
DeformedSpectrum deformed_spectrum(double q, int count);

}  // namespace fraclab::ncplane
