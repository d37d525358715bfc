#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "fraclab/golden.hpp"
#include "fraclab/numerics.hpp"
#include "oracles.hpp"

using namespace fraclab;
using namespace fraclab::golden;

TEST_CASE("golden constants and their defining identities") {
    const GoldenConstants g = golden_constants();
    CHECK(g.phi == doctest::Approx(oracles::kPhi).epsilon(1e-15));
    CHECK(g.psi == doctest::Approx(oracles::kPsi).epsilon(1e-15));
    CHECK(g.d_g == doctest::Approx(oracles::kGoldenSlope).epsilon(1e-15));
    CHECK(std::abs(g.phi + g.psi - 1.0) < 1e-15);
    CHECK(std::abs(g.phi * g.psi + 1.0) < 1e-15);

    const RecurrenceResiduals res = quadratic_and_recurrence_check();
    CHECK(std::abs(res.phi_quadratic) < 1e-12);
    CHECK(std::abs(res.psi_quadratic) < 1e-12);
    CHECK(res.max_recurrence_scaled < 1e-12);
}

TEST_CASE("quarter turns multiply the radius by phi") {
    const GoldenConstants g = golden_constants();
    CHECK(quarter_turn_progression(1.0, 0) == 1.0);
    CHECK(quarter_turn_progression(2.0, 1) ==
          doctest::Approx(2.0 * g.phi).epsilon(1e-15));
    CHECK(quarter_turn_progression(1.0, 5) ==
          doctest::Approx(std::pow(g.phi, 5)).epsilon(1e-14));

    const double half_pi = std::acos(0.0);
    CHECK(golden_radius(1.0, half_pi) ==
          doctest::Approx(g.phi).epsilon(1e-14));
    CHECK(golden_radius(1.0, 3.0 * half_pi) ==
          doctest::Approx(g.phi * g.phi * g.phi).epsilon(1e-14));
    CHECK_THROWS_AS(golden_radius(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(quarter_turn_progression(-1.0, 2), std::invalid_argument);
}

TEST_CASE("fibonacci values, range guard, and ratio convergence") {
    const std::vector<std::int64_t> prefix = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
    for (std::size_t i = 0; i < prefix.size(); ++i)
        CHECK(fibonacci(static_cast<int>(i)) == prefix[i]);
    CHECK(fibonacci(12) == 144);
    CHECK(fibonacci(92) == oracles::kFib92);
    CHECK_THROWS_AS(fibonacci(93), std::invalid_argument);
    CHECK_THROWS_AS(fibonacci(-1), std::invalid_argument);

    CHECK(ratio_convergence(2) == 1.0);
    CHECK(ratio_convergence(20) ==
          doctest::Approx(oracles::kFibRatio20).epsilon(1e-15));
    CHECK(std::abs(ratio_convergence(20) - oracles::kPhi) < 1e-7);
    CHECK_THROWS_AS(ratio_convergence(1), std::invalid_argument);
}

TEST_CASE("fibonacci spiral geometry: sampling, continuity, arc radii") {
    const int n_arcs = 6, spa = 16;
    const Polyline p = fibonacci_spiral(n_arcs, 1.0, spa);
    REQUIRE(p.size() == static_cast<std::size_t>(n_arcs * spa + 1));

    // Consecutive samples within arc k sit at distance 2 F_k sin(pi/(4 spa)).
    const double step_angle = 2.0 * std::asin(1.0) / (2.0 * spa);
    for (int k = 0; k < n_arcs; ++k) {
        const double radius = static_cast<double>(fibonacci(k + 1));
        const double expected = 2.0 * radius * std::sin(step_angle / 2.0);
        for (int j = 0; j < spa; ++j) {
            const auto& a = p[k * spa + j];
            const auto& b = p[k * spa + j + 1];
            const double chord = std::hypot(b.x - a.x, b.y - a.y);
            CHECK(chord == doctest::Approx(expected).epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(fibonacci_spiral(1), std::invalid_argument);
    CHECK_THROWS_AS(fibonacci_spiral(4, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fibonacci_spiral(4, 1.0, 0), std::invalid_argument);
}

TEST_CASE("fibonacci spiral drifts toward the golden spiral") {
    const double d4 = golden_deviation(4);
    const double d6 = golden_deviation(6);
    const double d8 = golden_deviation(8);
    const double d12 = golden_deviation(12);
    CHECK(d4 > d6);
    CHECK(d6 > d8);
    CHECK(d8 > d12);
    CHECK(d12 > 0.0);
    CHECK(d12 < 1e-3);
    CHECK_THROWS_AS(golden_deviation(1), std::invalid_argument);
}

TEST_CASE("both quadratic branches satisfy r'' + r' - r = 0") {
    const std::vector<double> times = linspace(0.0, 2.0, 401);
    const GoldenOdeResiduals res = golden_ode_check(times, 1.0);
    REQUIRE(res.phi_branch.size() == times.size() - 4);
    REQUIRE(res.psi_branch.size() == times.size() - 4);
    for (double r : res.phi_branch) CHECK(std::abs(r) < 1e-6);
    for (double r : res.psi_branch) CHECK(std::abs(r) < 1e-6);

    CHECK_THROWS_AS(golden_ode_check({0.0, 1.0, 2.0}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(golden_ode_check(linspace(0.0, 1.0, 16), 0.0),
                    std::invalid_argument);
}
