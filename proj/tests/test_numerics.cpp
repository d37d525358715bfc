#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "fraclab/numerics.hpp"

using namespace fraclab;

TEST_CASE("uniform step detection") {
    CHECK(uniform_step(linspace(0.0, 1.0, 101)) == doctest::Approx(0.01));
    CHECK_THROWS_AS(uniform_step(std::vector<double>{0, 1, 2, 3}),
                    std::invalid_argument);  // too short
    CHECK_THROWS_AS(uniform_step(std::vector<double>{0, 1, 2, 3.5, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(uniform_step(std::vector<double>{0, -1, -2, -3, -4}),
                    std::invalid_argument);  // not increasing
}

TEST_CASE("central differences are fourth order on smooth data") {
    const auto sample = [](double h) {
        const int n = static_cast<int>(std::lround(2.0 / h));
        std::vector<double> v(n + 1);
        for (int i = 0; i <= n; ++i) v[i] = std::sin(i * h);
        return v;
    };
    const auto worst_err = [&](double h) {
        const auto v = sample(h);
        const auto d1 = central_derivative1(v, h);
        const auto d2 = central_derivative2(v, h);
        double worst = 0.0;
        for (std::size_t i = 0; i < d1.size(); ++i) {
            const double t = (i + 2) * h;
            worst = std::max(worst, std::abs(d1[i] - std::cos(t)));
            worst = std::max(worst, std::abs(d2[i] + std::sin(t)));
        }
        return worst;
    };
    CHECK(worst_err(1e-2) < 1e-9);
    const double factor = worst_err(0.02) / worst_err(0.01);
    CHECK(factor > 12.0);
    CHECK(factor < 20.0);

    CHECK(central_derivative1(std::vector<double>{1, 2, 3, 4, 5}, 1.0).size() ==
          1);
    CHECK_THROWS_AS(central_derivative1(std::vector<double>{1, 2, 3, 4}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("rk4 integrates linear and oscillatory systems") {
    const auto expo = [](double, const std::vector<double>& y) {
        return std::vector<double>{y[0]};
    };
    auto traj = rk4_integrate(expo, 0.0, {1.0}, 1.0 / 200, 200);
    REQUIRE(traj.size() == 201);
    CHECK(std::abs(traj.back()[0] - std::numbers::e) < 1e-10);

    const auto circle = [](double, const std::vector<double>& y) {
        return std::vector<double>{y[1], -y[0]};
    };
    traj = rk4_integrate(circle, 0.0, {1.0, 0.0},
                         2.0 * std::numbers::pi / 2000, 2000);
    CHECK(std::abs(traj.back()[0] - 1.0) < 1e-10);
    CHECK(std::abs(traj.back()[1]) < 1e-10);
}

TEST_CASE("gauss-legendre quadrature") {
    const QuadratureRule rule = gauss_legendre(8, 0.0, 1.0);
    REQUIRE(rule.nodes.size() == 8);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * std::pow(rule.nodes[i], 14.0);
    CHECK(acc == doctest::Approx(1.0 / 15.0).epsilon(1e-14));  // degree 15 exact

    const QuadratureRule wide = gauss_legendre(32, -1.0, 3.0);
    double ex = 0.0;
    for (std::size_t i = 0; i < wide.nodes.size(); ++i)
        ex += wide.weights[i] * std::exp(wide.nodes[i]);
    CHECK(ex == doctest::Approx(std::exp(3.0) - std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("line fit and degenerate data") {
    const auto xs = linspace(0.0, 9.0, 10);
    std::vector<double> ys(10);
    for (int i = 0; i < 10; ++i) ys[i] = 2.5 * xs[i] - 1.0;
    const LineFit fit = fit_line(xs, ys);
    CHECK(fit.slope == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(fit.intercept == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-14));

    std::vector<double> flat(10, 4.0);
    const LineFit degenerate = fit_line(xs, flat);
    CHECK(degenerate.slope == 0.0);
    CHECK(degenerate.r_squared == 1.0);  // zero variance: perfect by convention

    CHECK_THROWS_AS(fit_line(flat, ys), std::invalid_argument);  // no x spread
}

TEST_CASE("linspace endpoints") {
    const auto v = linspace(-1.0, 2.0, 7);
    REQUIRE(v.size() == 7);
    CHECK(v.front() == -1.0);
    CHECK(v.back() == 2.0);
    CHECK_THROWS_AS(linspace(0.0, 1.0, 1), std::invalid_argument);
}
