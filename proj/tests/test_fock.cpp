#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "fraclab/errors.hpp"
#include "fraclab/fock.hpp"
#include "oracles.hpp"

using namespace fraclab;
using namespace fraclab::fock;

TEST_CASE("ladder operators on the truncated basis") {
    const Operator a = annihilation(6);
    CHECK(a(0, 1) == Complex{1.0, 0.0});
    CHECK(std::abs(a(3, 4) - Complex{2.0, 0.0}) < 1e-15);
    CHECK(a(4, 3) == Complex{0.0, 0.0});
    CHECK((creation(6) - Operator(a.adjoint())).cwiseAbs().maxCoeff() == 0.0);
    const Operator n = number(6);
    CHECK(std::abs(n(5, 5) - Complex{5.0, 0.0}) < 1e-14);
    CHECK_THROWS_AS(annihilation(1), std::invalid_argument);
}

TEST_CASE("coherent state amplitudes and analytic tail") {
    const Complex alpha{1.2, 0.3};
    const FockState s = coherent_state(alpha, 12, 1e-6);
    const double lam = std::norm(alpha);
    // c_n = e^{-|a|^2/2} a^n / sqrt(n!) checked directly for a few n.
    Complex expect = std::exp(-lam / 2.0);
    CHECK(std::abs(s.amplitudes(0) - expect) < 1e-15);
    expect *= alpha / std::sqrt(1.0);
    CHECK(std::abs(s.amplitudes(1) - expect) < 1e-15);
    expect *= alpha / std::sqrt(2.0);
    expect *= alpha / std::sqrt(3.0);
    CHECK(std::abs(s.amplitudes(3) - expect) < 1e-15);

    // Tail against a frozen Poisson partial-sum complement.
    CHECK(s.tail_mass ==
          doctest::Approx(oracles::kCoherentTail12).epsilon(1e-10));
    CHECK(s.norm() * s.norm() + s.tail_mass == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("coherent state refuses an unrepresentable tail") {
    CHECK_THROWS_AS(coherent_state(Complex{3.0, 0.0}, 8), CutoffError);
    try {
        coherent_state(Complex{3.0, 0.0}, 8);
    } catch (const CutoffError& e) {
        CHECK(e.required_dim() > 8);
        // The advertised dimension must actually be big enough.
        const FockState ok =
            coherent_state(Complex{3.0, 0.0}, e.required_dim());
        CHECK(ok.tail_mass < 1e-12);
    }
}

TEST_CASE("deformation operator rescales coherent states") {
    const int dim = 64;
    const QDeformation q = QDeformation::from_q(1.0 / 3.0);
    const FockState s = coherent_state(Complex{1.5, 0.0}, dim);
    Eigen::VectorXcd mapped = fractal_operator(q, dim) * s.amplitudes;
    // The image is exp((|qa|^2 - |a|^2)/2) |qa>; here the scalar is e^{-1}.
    const double scale = mapped.norm();
    CHECK(scale == doctest::Approx(oracles::kExpMinusOne).epsilon(1e-12));
    const FockState target = coherent_state(Complex{0.5, 0.0}, dim);
    CHECK((mapped / scale - target.amplitudes).norm() < 1e-12);
}

TEST_CASE("deformation parameter validation and composition") {
    CHECK_THROWS_AS(QDeformation::from_q(0.0), std::invalid_argument);
    CHECK_THROWS_AS(QDeformation::from_q(-2.0), std::invalid_argument);
    CHECK(QDeformation::from_zeta(0.0).q == 1.0);
    const QDeformation half = QDeformation::from_q(0.5);
    CHECK(half.zeta == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("magnifying lens reproduces powers of the rescaled amplitude") {
    const QDeformation q = QDeformation::from_q(0.5);
    const Complex alpha{2.4, -1.0};
    const Complex w = 0.5 * alpha;
    Complex expect{1.0, 0.0};
    for (int n = 0; n <= 5; ++n) {
        CHECK(std::abs(magnifying_lens(q, alpha, n, 64) - expect) < 1e-9);
        expect *= w;
    }
    CHECK_THROWS_AS(magnifying_lens(q, alpha, -1, 64), std::invalid_argument);
}

TEST_CASE("squeeze operator basics") {
    const Operator u = single_mode_squeeze(0.3, 32);
    CHECK((Operator(u.adjoint() * u) - identity_like(32)).cwiseAbs().maxCoeff() <
          1e-13);
    const Eigen::VectorXcd ground = u.col(0);
    const Complex occ = ground.dot(number(32) * ground);
    CHECK(occ.real() == doctest::Approx(oracles::kSinhSq03).epsilon(1e-10));
    CHECK(std::abs(occ.imag()) < 1e-14);
    // Odd levels stay empty: the generator only couples across pairs.
    CHECK(std::abs(ground(1)) == 0.0);
    CHECK(std::abs(ground(3)) == 0.0);
    CHECK_THROWS_AS(single_mode_squeeze(5.5, 16), std::domain_error);
}

TEST_CASE("state helpers validate dimensions") {
    const FockState a = coherent_state(Complex{0.5, 0.0}, 16);
    const FockState b = coherent_state(Complex{0.5, 0.0}, 24);
    CHECK_THROWS_AS(inner(a, b), std::invalid_argument);
    CHECK_THROWS_AS(expectation(number(8), a), std::invalid_argument);
    CHECK(std::abs(inner(a, a) - Complex{a.norm() * a.norm(), 0.0}) < 1e-14);
    const FockState shifted = fock::apply(creation(16), a);
    CHECK(shifted.dim() == 16);
}
