#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "fraclab/selfsim.hpp"
#include "oracles.hpp"

using namespace fraclab;
using namespace fraclab::selfsim;

TEST_CASE("similarity dimension values and guards") {
    CHECK(similarity_dimension(4, 3.0) ==
          doctest::Approx(std::log(4.0) / std::log(3.0)).epsilon(1e-15));
    CHECK(similarity_dimension(2, 2.0) == doctest::Approx(1.0));
    CHECK(similarity_dimension(9, 3.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(similarity_dimension(1, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(similarity_dimension(4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(similarity_dimension(4, 0.5), std::invalid_argument);
}

TEST_CASE("similarity spec assembles the dimension") {
    const SimilaritySpec spec = make_similarity_spec(4, 3.0);
    CHECK(spec.pieces == 4);
    CHECK(spec.scale == 3.0);
    CHECK(spec.dimension == doctest::Approx(1.2618595071429148).epsilon(1e-14));
}

TEST_CASE("koch curve stages") {
    const Polyline base = koch_iterate(0);
    REQUIRE(base.size() == 2);
    CHECK(base[0].x == 0.0);
    CHECK(base[1].x == 1.0);

    const Polyline tent = koch_iterate(1);
    REQUIRE(tent.size() == 5);
    CHECK(tent[2].x == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(tent[2].y == doctest::Approx(oracles::kSqrt3Over6).epsilon(1e-14));
    CHECK(tent[4].y == 0.0);

    CHECK(koch_iterate(5).size() == 1025);  // 4^5 + 1 points
    CHECK_THROWS_AS(koch_iterate(-1), std::invalid_argument);
    CHECK_THROWS_AS(koch_iterate(13), std::invalid_argument);
}

TEST_CASE("koch census counts segments and lengths") {
    for (int depth : {0, 3, 6}) {
        const SegmentCensus c = segment_census(koch_iterate(depth));
        CHECK(c.segments == (1LL << (2 * depth)));
        const double unit = std::pow(3.0, -depth);
        CHECK(c.min_length == doctest::Approx(unit).epsilon(1e-10));
        CHECK(c.max_length == doctest::Approx(unit).epsilon(1e-10));
        CHECK(c.total_length ==
              doctest::Approx(std::pow(4.0 / 3.0, depth)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(segment_census(Polyline{{0.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("early koch stage embeds in the next one at one-third scale") {
    const Polyline prev = koch_iterate(3);
    const Polyline cur = koch_iterate(4);
    for (std::size_t i = 0; i < prev.size(); ++i) {
        CHECK(std::abs(prev[i].x / 3.0 - cur[i].x) < 1e-12);
        CHECK(std::abs(prev[i].y / 3.0 - cur[i].y) < 1e-12);
    }
}

TEST_CASE("basis components and their normalization") {
    const QDeformation q = QDeformation::from_q(0.5);
    const Complex alpha{2.0, 1.0};
    const Complex w = 0.5 * alpha;
    CHECK(u_n(q, alpha, 0) == Complex{1.0, 0.0});
    CHECK(std::abs(u_n(q, alpha, 3) - w * w * w) < 1e-14);
    CHECK(std::abs(u_n(q, alpha, 3, true) - w * w * w / std::sqrt(6.0)) < 1e-14);
    CHECK_THROWS_AS(u_n(q, alpha, -2), std::invalid_argument);
}

TEST_CASE("q-derivative of monomials gives q-integers") {
    const QDeformation two = QDeformation::from_q(2.0);
    const auto cube = [](Complex z) { return z * z * z; };
    const Complex z{1.3, -0.4};
    // D_q z^3 = (1 + q + q^2) z^2 = 7 z^2 at q = 2.
    CHECK(std::abs(q_derivative(cube, two, z) - Complex{10.71, -7.28}) < 1e-12);
    CHECK_THROWS_AS(q_derivative(cube, QDeformation::from_q(1.0), z),
                    std::domain_error);
    CHECK_THROWS_AS(q_derivative(cube, two, Complex{0.0, 0.0}),
                    std::domain_error);
}
