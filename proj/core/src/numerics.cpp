#include "fraclab/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fraclab {

double uniform_step(std::span<const double> times, std::size_t min_size) {
    if (times.size() < min_size)
        throw std::invalid_argument("uniform_step: too few samples");
    const double h = times[1] - times[0];
    if (!(h > 0.0))
        throw std::invalid_argument("uniform_step: times must be strictly increasing");
    for (std::size_t i = 1; i + 1 < times.size(); ++i) {
        if (std::abs((times[i + 1] - times[i]) - h) > 1e-9 * std::max(1.0, h))
            throw std::invalid_argument("uniform_step: non-uniform time grid");
    }
    return h;
}

std::vector<double> central_derivative1(std::span<const double> values, double h) {
    if (values.size() < 5)
        throw std::invalid_argument("central_derivative1: need at least 5 samples");
    if (h <= 0.0)
        throw std::invalid_argument("central_derivative1: step must be positive");
    std::vector<double> out;
    out.reserve(values.size() - 4);
    for (std::size_t i = 2; i + 2 < values.size(); ++i) {
        out.push_back((-values[i + 2] + 8.0 * values[i + 1]
                       - 8.0 * values[i - 1] + values[i - 2]) / (12.0 * h));
    }
    return out;
}

std::vector<double> central_derivative2(std::span<const double> values, double h) {
    if (values.size() < 5)
        throw std::invalid_argument("central_derivative2: need at least 5 samples");
    if (h <= 0.0)
        throw std::invalid_argument("central_derivative2: step must be positive");
    std::vector<double> out;
    out.reserve(values.size() - 4);
    for (std::size_t i = 2; i + 2 < values.size(); ++i) {
        out.push_back((-values[i + 2] + 16.0 * values[i + 1] - 30.0 * values[i]
                       + 16.0 * values[i - 1] - values[i - 2]) / (12.0 * h * h));
    }
    return out;
}

std::vector<std::vector<double>> rk4_integrate(
    const std::function<std::vector<double>(double, const std::vector<double>&)>& f,
    double t0, std::vector<double> y0, double h, int steps) {
    if (steps < 1)
        throw std::invalid_argument("rk4_integrate: steps must be positive");
    if (h <= 0.0)
        throw std::invalid_argument("rk4_integrate: step must be positive");

    const std::size_t n = y0.size();
    std::vector<std::vector<double>> out;
    out.reserve(steps + 1);
    out.push_back(y0);

    std::vector<double> k1, k2, k3, k4, tmp(n);
    for (int s = 0; s < steps; ++s) {
        const double t = t0 + s * h;
        const auto& y = out.back();

        k1 = f(t, y);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        k2 = f(t + 0.5 * h, tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        k3 = f(t + 0.5 * h, tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
        k4 = f(t + h, tmp);

        std::vector<double> next(n);
        for (std::size_t i = 0; i < n; ++i)
            next[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        out.push_back(std::move(next));
    }
    return out;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: order must be positive");
    if (!(a < b))
        throw std::invalid_argument("gauss_legendre: empty interval");

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // Newton iteration on P_n from the Chebyshev-like initial guess;
    // nodes computed on [-1, 1] and mapped.
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = 0.5 * (b - a) * x + 0.5 * (b + a);
        rule.weights[i] = (b - a) / ((1.0 - x * x) * pp * pp);
    }
    return rule;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("fit_line: length mismatch");
    const std::size_t n = x.size();
    if (n < 2)
        throw std::invalid_argument("fit_line: need at least 2 samples");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_line: degenerate abscissa");

    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0.0) {
        // All y equal: the horizontal line fits exactly.
        fit.r_squared = 1.0;
    } else {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = y[i] - (fit.slope * x[i] + fit.intercept);
            ss_res += e * e;
        }
        fit.r_squared = 1.0 - ss_res / syy;
    }
    return fit;
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 2)
        throw std::invalid_argument("linspace: need at least 2 points");
    std::vector<double> out(n);
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) out[i] = a + h * i;
    out.back() = b;
    return out;
}

}  // namespace fraclab
