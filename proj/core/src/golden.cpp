#include "fraclab/golden.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fraclab/numerics.hpp"

namespace fraclab::golden {

namespace {

constexpr double kPhi = 1.6180339887498948482;
constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

GoldenConstants golden_constants() {
    GoldenConstants c;
    c.phi = (1.0 + std::sqrt(5.0)) / 2.0;
    c.psi = 1.0 - c.phi;
    c.d_g = std::log(c.phi) / kHalfPi;
    return c;
}

double golden_radius(double r0, double theta) {
    if (!(r0 > 0.0))
        throw std::invalid_argument("golden_radius: r0 must be positive");
    return r0 * std::exp(golden_constants().d_g * theta);
}

double quarter_turn_progression(double r0, int n) {
    if (!(r0 > 0.0))
        throw std::invalid_argument("quarter_turn_progression: r0 must be positive");
    if (n < 0)
        throw std::invalid_argument("quarter_turn_progression: n must be >= 0");
    double r = r0;
    for (int k = 0; k < n; ++k) r *= kPhi;
    return r;
}

std::int64_t fibonacci(int n) {
    if (n < 0 || n > 92)
        throw std::invalid_argument("fibonacci: n must be in [0, 92] (64-bit range)");
    std::int64_t a = 0, b = 1;
    for (int k = 0; k < n; ++k) {
        const std::int64_t next = a + b;
        a = b;
        b = next;
    }
    return a;
}

double ratio_convergence(int n) {
    if (n < 2)
        throw std::invalid_argument("ratio_convergence: n must be >= 2");
    return static_cast<double>(fibonacci(n)) / static_cast<double>(fibonacci(n - 1));
}

Polyline fibonacci_spiral(int n_arcs, double unit, int samples_per_arc) {
    if (n_arcs < 2)
        throw std::invalid_argument("fibonacci_spiral: n_arcs must be >= 2");
    if (n_arcs > 80)
        throw std::invalid_argument("fibonacci_spiral: n_arcs too large for doubles");
    if (!(unit > 0.0))
        throw std::invalid_argument("fibonacci_spiral: unit must be positive");
    if (samples_per_arc < 1)
        throw std::invalid_argument("fibonacci_spiral: samples_per_arc must be >= 1");

    // Arc k sits in the k-th tiling square (squares attached right, up,
    // left, down in turn) and sweeps a quarter turn about its center c_k.
    // Endpoint continuity fixes the center walk:
    //   c_{k+1} = c_k - F_{k-1} * u(phi0 + k*pi/2),
    // because consecutive radii differ by F_{k+1} - F_k = F_{k-1}.
    const double phi0 = std::numbers::pi;
    double cx = unit, cy = unit;

    Polyline pts;
    pts.reserve(static_cast<std::size_t>(n_arcs) * samples_per_arc + 1);
    for (int k = 1; k <= n_arcs; ++k) {
        const double radius = static_cast<double>(fibonacci(k)) * unit;
        const double a0 = phi0 + (k - 1) * kHalfPi;
        const int first = k == 1 ? 0 : 1;  // junction point already emitted
        for (int s = first; s <= samples_per_arc; ++s) {
            const double a = a0 + kHalfPi * s / samples_per_arc;
            pts.push_back({cx + radius * std::cos(a), cy + radius * std::sin(a)});
        }
        const double a_end = phi0 + k * kHalfPi;
        const double shrink = static_cast<double>(fibonacci(k - 1)) * unit;
        cx -= shrink * std::cos(a_end);
        cy -= shrink * std::sin(a_end);
    }
    return pts;
}

double golden_deviation(int n_arcs) {
    if (n_arcs < 2)
        throw std::invalid_argument("golden_deviation: n_arcs must be >= 2");
    if (n_arcs > 80)
        throw std::invalid_argument("golden_deviation: n_arcs too large for doubles");

    // Compare arc radii F_k against G * phi^k over the outermost full turn,
    // with the anchor G chosen by least squares on that window. Early arcs
    // are excluded on purpose: the ratio F_{k+1}/F_k converges to phi, so
    // the mismatch of the latest arcs is the quantity that shrinks as the
    // tiling grows.
    const int window = std::min(4, n_arcs);
    const double ln_phi = std::log(kPhi);

    double mean = 0.0;
    std::vector<double> rel(window);
    for (int i = 0; i < window; ++i) {
        const int k = n_arcs - window + 1 + i;
        rel[i] = std::log(static_cast<double>(fibonacci(k))) - k * ln_phi;
        mean += rel[i];
    }
    mean /= window;

    double worst = 0.0;
    for (int i = 0; i < window; ++i)
        worst = std::max(worst, std::abs(std::expm1(rel[i] - mean)));
    return worst;
}

RecurrenceResiduals quadratic_and_recurrence_check() {
    const GoldenConstants c = golden_constants();
    RecurrenceResiduals out;
    out.phi_quadratic = std::abs(c.phi * c.phi - c.phi - 1.0);
    out.psi_quadratic = std::abs(c.psi * c.psi - c.psi - 1.0);
    out.max_recurrence_scaled = 0.0;
    double p2 = 1.0, p1 = c.phi;  // phi^{n-2}, phi^{n-1}
    double pn = c.phi * c.phi;
    for (int n = 2; n <= 20; ++n) {
        const double resid = std::abs(pn - p1 - p2) / pn;
        out.max_recurrence_scaled = std::max(out.max_recurrence_scaled, resid);
        p2 = p1;
        p1 = pn;
        pn *= c.phi;
    }
    return out;
}

GoldenOdeResiduals golden_ode_check(const std::vector<double>& times, double r0) {
    if (!(r0 > 0.0))
        throw std::invalid_argument("golden_ode_check: r0 must be positive");
    const double h = uniform_step(times);
    const GoldenConstants c = golden_constants();

    const auto branch = [&](double rate) {
        std::vector<double> r(times.size());
        for (std::size_t i = 0; i < times.size(); ++i)
            r[i] = r0 * std::exp(-rate * times[i]);
        const auto d1 = central_derivative1(r, h);
        const auto d2 = central_derivative2(r, h);
        std::vector<double> resid(d1.size());
        for (std::size_t i = 0; i < d1.size(); ++i)
            resid[i] = std::abs(d2[i] + d1[i] - r[i + 2]);
        return resid;
    };

    GoldenOdeResiduals out;
    out.phi_branch = branch(c.phi);
    out.psi_branch = branch(c.psi);
    return out;
}

}  // namespace fraclab::golden
