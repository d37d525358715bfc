#include <complex>

#include <doctest.h>

#include "fraclab/linalg.hpp"
#include "oracles.hpp"

using namespace fraclab;
using Complex = std::complex<double>;

TEST_CASE("kron dimensions and block layout") {
    Operator a(2, 2), b(2, 2);
    a << Complex{1, 0}, Complex{2, 0}, Complex{3, 0}, Complex{4, 0};
    b << Complex{0, 1}, Complex{0, 0}, Complex{0, 0}, Complex{0, -1};
    const Operator k = kron(a, b);
    REQUIRE(k.rows() == 4);
    CHECK(k(0, 0) == Complex{0, 1});
    CHECK(k(1, 1) == Complex{0, -1});
    CHECK(k(0, 2) == Complex{0, 2});
    CHECK(k(3, 3) == Complex{0, -4});
    // (a kron I)(I kron b) = a kron b
    const Operator id = identity_like(2);
    CHECK(((kron(a, id) * kron(id, b)) - k).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("commutator antisymmetry and bilinearity") {
    Operator a = Operator::Random(5, 5);
    Operator b = Operator::Random(5, 5);
    CHECK((commutator(a, b) + commutator(b, a)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((commutator(a, a)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("interior deviation ignores the truncation edge") {
    const int d = 10;
    Operator a = identity_like(d);
    a(d - 1, d - 1) = 42.0;  // corrupted edge entry
    a(0, d - 1) = 7.0;       // corrupted edge column
    CHECK(interior_deviation(a, identity_like(d), 2) == 0.0);
    CHECK(interior_deviation(a, identity_like(d), 0) > 1.0);

    // Tensor variant drops the edge of each factor.
    Operator t = kron(a, identity_like(d));
    CHECK(tensor_interior_deviation(t, identity_like(d * d), d, 2) == 0.0);
    const Operator blk = tensor_interior_block(t, d, 2);
    CHECK(blk.rows() == (d - 2) * (d - 2));
}

TEST_CASE("operator norm matches known spectra") {
    Operator a = Operator::Zero(3, 3);
    a(0, 0) = 3.0;
    a(1, 1) = Complex{0, -5};
    CHECK(operator_norm(a) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("matrix exponential against an independent Taylor oracle") {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Random(6, 6);
    const Operator got = matrix_exponential(Operator(x));
    const Eigen::MatrixXcd want = oracles::taylor_exp(x);
    CHECK((got - want).cwiseAbs().maxCoeff() < 1e-12);

    CHECK((matrix_exponential(Operator(Operator::Zero(4, 4))) -
           identity_like(4))
              .cwiseAbs()
              .maxCoeff() == 0.0);
}

TEST_CASE("exponential of a real antisymmetric matrix is orthogonal") {
    Eigen::MatrixXd g = Eigen::MatrixXd::Random(8, 8);
    Eigen::MatrixXd anti = g - g.transpose();
    const Eigen::MatrixXd u = matrix_exponential(anti);
    CHECK((u.transpose() * u - Eigen::MatrixXd::Identity(8, 8))
              .cwiseAbs()
              .maxCoeff() < 1e-13);
}
