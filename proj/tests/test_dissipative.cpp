#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "fraclab/dissipative.hpp"
#include "fraclab/errors.hpp"
#include "fraclab/fock.hpp"
#include "oracles.hpp"

using namespace fraclab;
using namespace fraclab::dissipative;
using Complex = std::complex<double>;

TEST_CASE("mixed modes close the su(1,1) algebra on interior blocks") {
    const int d = 10;
    const TwoModes tm = build_modes(d);
    const Operator id = identity_like(d * d);

    CHECK(tensor_interior_deviation(commutator(tm.A, tm.A.adjoint()), id, d, 2) <
          1e-13);
    CHECK(tensor_interior_deviation(
              commutator(tm.A, tm.B), Operator(Operator::Zero(d * d, d * d)), d,
              2) < 1e-13);

    const Operator num = tm.A.adjoint() * tm.A + tm.B.adjoint() * tm.B;
    CHECK(tensor_interior_deviation(commutator(tm.gen.Jplus, tm.gen.Jminus),
                                    Operator(-num - id), d, 3) < 1e-12);
    CHECK(tensor_interior_deviation(commutator(tm.gen.casimir, tm.gen.J2),
                                    Operator(Operator::Zero(d * d, d * d)), d,
                                    3) < 1e-12);
    CHECK_THROWS_AS(build_modes(3), std::invalid_argument);
}

TEST_CASE("evolved vacuum amplitudes follow tanh^n over cosh") {
    const TwoModeState s = vacuum_evolution(0.8, 1.0, 40);
    const double th = std::tanh(0.8), ch = std::cosh(0.8);
    double factor = 1.0 / ch;
    for (int n = 0; n < 40; ++n) {
        CHECK(std::abs(s.pair_amplitudes(n) - Complex{factor, 0.0}) < 1e-14);
        factor *= th;
    }
    CHECK(s.norm() * s.norm() + s.truncation_deficit ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(vacuum_evolution(1.0, -1.0, 32), std::invalid_argument);
}

TEST_CASE("pair cutoff requirements are consistent with the tail") {
    CHECK(required_pair_cutoff(1.0) == 50);
    CHECK(required_pair_cutoff(0.5) == 18);
    CHECK(required_pair_cutoff(1.2) == 73);
    CHECK(required_pair_cutoff(1.5) == 131);
    CHECK(required_pair_cutoff(1.0, 1e-9) == 37);

    // The thrown error must advertise a dimension that actually works.
    try {
        vacuum_evolution(1.0, 1.5, 64);
        FAIL("expected CutoffError");
    } catch (const CutoffError& e) {
        CHECK(e.required_dim() == 131);
        CHECK_NOTHROW(vacuum_evolution(1.0, 1.5, e.required_dim()));
    }
}

TEST_CASE("closed-form evolution matches the generator exponential far out") {
    // Gamma t = 2 needs a deep pair basis; the reduced generator keeps the
    // comparison cheap even at 650 levels.
    const int K = 650;
    const TwoModeState closed = vacuum_evolution(1.0, 2.0, K);
    const TwoModeState numeric = vacuum_evolution_numeric(1.0, 2.0, K);
    CHECK((closed.pair_amplitudes - numeric.pair_amplitudes)
              .cwiseAbs()
              .maxCoeff() < 1e-8);
}

TEST_CASE("vacuum survival equals the inverse cosh") {
    CHECK(vacuum_fidelity(1.0, 1.0) ==
          doctest::Approx(oracles::kInvCosh1).epsilon(1e-14));
    CHECK(vacuum_fidelity(2.0, 1.0) ==
          doctest::Approx(oracles::kInvCosh2).epsilon(1e-14));
    CHECK(vacuum_fidelity(1.0, 0.0) == 1.0);
}

TEST_CASE("entropy closed form equals the Shannon sum of pair weights") {
    CHECK(entropy_closed_form(1.0, 1.0) ==
          doctest::Approx(oracles::kEntropyOne).epsilon(1e-14));
    CHECK(entropy_closed_form(1.0, 0.5) ==
          doctest::Approx(oracles::kEntropyHalf).epsilon(1e-14));
    CHECK(entropy_closed_form(1.0, 1.5) ==
          doctest::Approx(oracles::kEntropyThreeHalf).epsilon(1e-14));
    CHECK(entropy_closed_form(1.0, 0.0) == 0.0);

    CHECK(entropy_expectation(1.0, 1.0, 64) ==
          doctest::Approx(oracles::kEntropyOne).epsilon(1e-12));
    CHECK(entropy_expectation(1.0, 0.0, 16) == 0.0);
}

TEST_CASE("entropy operator route agrees for both modes") {
    const int d = 18;
    const TwoModeState s = vacuum_evolution(1.0, 0.5, d);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
    for (int n = 0; n < d; ++n) psi(n * d + n) = s.pair_amplitudes(n);

    const Operator sa = entropy_operator(1.0, 0.5, d, Mode::A);
    const Operator sb = entropy_operator(1.0, 0.5, d, Mode::B);
    const Complex ea = psi.dot(sa * psi);
    const Complex eb = psi.dot(sb * psi);
    CHECK(std::abs(ea - eb) < 1e-12);
    CHECK(ea.real() == doctest::Approx(oracles::kEntropyHalf).epsilon(1e-9));
    CHECK_THROWS_AS(entropy_operator(1.0, 0.0, d), std::domain_error);
}

TEST_CASE("thermodynamic record on the evolved vacuum") {
    const Thermodynamics th = thermodynamics(1.0, 2.0, 0.5, 64);
    CHECK(th.temperature == 1.0);
    // Pair states carry no charge and the evolution generator averages to
    // zero on real amplitude vectors, so the ledger is zeros with the
    // entanglement entropy reported alongside.
    CHECK(std::abs(th.internal_energy) < 1e-12);
    CHECK(std::abs(th.entropy) < 1e-12);
    CHECK(std::abs(th.free_energy -
                   (th.internal_energy - th.temperature * th.entropy)) < 1e-14);
    CHECK(std::abs(th.dF_dT + th.entropy) < 1e-10);
    CHECK(th.entropy_operator_expectation ==
          doctest::Approx(oracles::kEntropyHalf).epsilon(1e-10));
}

TEST_CASE("doubled-mode identity collapses to pair operators") {
    CHECK(doubled_fractal_identity(12) < 1e-10);
    CHECK(doubled_fractal_identity(8, 2) < 1e-10);
    CHECK_THROWS_AS(doubled_fractal_identity(4), std::invalid_argument);
}

TEST_CASE("pair-creation matrix elements fix the mixed-mode conventions") {
    const int d = 8;
    const Operator a = fock::annihilation(d);
    const Operator id = identity_like(d);
    const Operator c = kron(a, id);
    const Operator t = kron(id, a);
    const double rs2 = 1.0 / std::sqrt(2.0);
    const Operator C = rs2 * (c + t);
    const Operator D = rs2 * (c - t);
    const Operator pair = Operator(C.adjoint() * D.adjoint());
    CHECK(std::abs(pair(2 * d, 0) - Complex{oracles::kSqrt2Over2, 0.0}) <
          1e-14);
    CHECK(std::abs(pair(2, 0) + Complex{oracles::kSqrt2Over2, 0.0}) < 1e-14);
    CHECK(std::abs(pair(d + 1, 0)) < 1e-14);
}

TEST_CASE("factorized squeeze reproduces the pair amplitudes") {
    for (double t : {0.5, 1.5}) {
        const Eigen::VectorXd amps = squeezed_pair_amplitudes(1.0, t, 48);
        const double th = std::tanh(t), ch = std::cosh(t);
        double factor = 1.0 / ch;
        for (int n = 0; n < 48; ++n) {
            CHECK(std::abs(amps(n) - factor) < 1e-8);
            factor *= th;
        }
    }
    CHECK_THROWS_AS(squeezed_pair_amplitudes(1.0, 6.0, 8), std::domain_error);
}

TEST_CASE("dense two-mode squeeze column matches the closed form") {
    const int d = 20;
    const double t = 0.4;
    const Operator u = two_mode_squeeze_generator(1.0, t, d);
    // <0,0| U |0,0> = 1/cosh by the disentangled form.
    CHECK(std::abs(u(0, 0) - Complex{1.0 / std::cosh(t), 0.0}) < 1e-8);
    CHECK_THROWS_AS(two_mode_squeeze_generator(1.0, 6.0, 8), std::domain_error);
}
