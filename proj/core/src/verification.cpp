#include "fraclab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraclab/dissipative.hpp"
#include "fraclab/fock.hpp"
#include "fraclab/golden.hpp"
#include "fraclab/linalg.hpp"
#include "fraclab/ncplane.hpp"
#include "fraclab/numerics.hpp"
#include "fraclab/selfsim.hpp"
#include "fraclab/spiral.hpp"

namespace fraclab {

namespace {

using Complex = std::complex<double>;
const Complex kI{0.0, 1.0};
const double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Ctx {
    const RunConfig& cfg;
    std::vector<CheckResult> checks;

    void add(std::string id, std::string anchor, double tol,
             const std::function<double(CheckResult&)>& measure) {
        CheckResult c;
        c.id = std::move(id);
        c.paper_anchor = std::move(anchor);
        c.tolerance = tol * cfg.tolerance_scale;
        try {
            c.measured = measure(c);
            c.pass = c.measured <= c.tolerance;
        } catch (const std::exception& e) {
            c.measured = std::numeric_limits<double>::quiet_NaN();
            c.pass = false;
            c.note = e.what();
        }
        checks.push_back(std::move(c));
    }
};

double max_abs(const Operator& m) { return m.cwiseAbs().maxCoeff(); }

// ---------------------------------------------------------------- fock

void fock_checks(Ctx& ctx) {
    using namespace fock;
    const int dim = ctx.cfg.cutoff;
    const int margin = std::max(1, ctx.cfg.margin);

    ctx.add("fock.01_ladder_matrix", "sqrt(n) ladder matrix elements", 1e-12,
            [&](CheckResult&) {
                const int d = 8;
                const Operator a = annihilation(d);
                const Operator ad = creation(d);
                const Operator n = number(d);
                double worst = 0.0;
                for (int r = 0; r < d; ++r) {
                    for (int c = 0; c < d; ++c) {
                        const double av = r + 1 == c ? std::sqrt(double(c)) : 0.0;
                        worst = std::max(worst, std::abs(a(r, c) - av));
                        worst = std::max(worst, std::abs(ad(c, r) - av));
                        const double nv = r == c ? double(r) : 0.0;
                        worst = std::max(worst, std::abs(n(r, c) - nv));
                    }
                }
                return worst;
            });

    ctx.add("fock.02_ccr_interior", "canonical commutator on the interior block",
            1e-12, [&](CheckResult& c) {
                double worst = 0.0;
                for (int d : {8, 16, dim}) {
                    const Operator a = annihilation(d);
                    worst = std::max(
                        worst, interior_deviation(commutator(a, a.adjoint()),
                                                  identity_like(d), margin));
                }
                c.note = "dims 8, 16, " + std::to_string(dim);
                return worst;
            });

    ctx.add("fock.03_number_spectrum", "number operator eigenvalues 0..dim-1",
            1e-12, [&](CheckResult&) {
                const int d = 12;
                Eigen::SelfAdjointEigenSolver<Operator> es(number(d));
                double worst = 0.0;
                for (int n = 0; n < d; ++n)
                    worst = std::max(worst, std::abs(es.eigenvalues()(n) - n));
                return worst;
            });

    ctx.add("fock.04_coherent_norm", "coherent normalization with analytic tail",
            1e-12, [&](CheckResult&) {
                double worst = 0.0;
                for (Complex alpha : {Complex{0.5, 0.0}, Complex{1.2, 0.3},
                                      Complex{0.0, 2.0}}) {
                    const FockState s = coherent_state(alpha, dim);
                    const double n2 = s.norm() * s.norm();
                    worst = std::max(worst, std::abs(n2 + s.tail_mass - 1.0));
                }
                return worst;
            });

    ctx.add("fock.05_coherent_eigenstate",
            "a|alpha> = alpha|alpha> up to the truncation edge", 1.0,
            [&](CheckResult& c) {
                const Operator a = annihilation(dim);
                // |alpha|^2 ~ 0.35 dim keeps the edge amplitude analytic
                // (well above rounding) while the tail stays representable.
                const double amp = std::sqrt(0.35 * dim);
                double worst = 0.0;
                for (double phase : {0.0, 0.7, 1.9, 3.1, 5.0}) {
                    const Complex alpha = std::polar(amp, phase);
                    const FockState s = coherent_state(alpha, dim);
                    const double resid =
                        (a * s.amplitudes - alpha * s.amplitudes).norm();
                    const double bound =
                        10.0 * std::abs(alpha) * std::abs(s.amplitudes(dim - 1));
                    worst = std::max(worst, resid / bound);
                }
                c.note = "residual over 10*|alpha|*|last amplitude|; the exact "
                         "ratio is 0.1";
                return worst;
            });

    ctx.add("fock.06_coherent_displacement", "<alpha|a|alpha> = alpha", 1e-10,
            [&](CheckResult&) {
                const Complex alpha{0.7, 0.2};
                const FockState s = coherent_state(alpha, dim);
                return std::abs(expectation(annihilation(dim), s) - alpha);
            });

    ctx.add("fock.07_coherent_number", "<N> = |alpha|^2 on a coherent state",
            1e-9, [&](CheckResult&) {
                const FockState s = coherent_state(Complex{1.2, 0.0}, dim);
                return std::abs(expectation(number(dim), s) - Complex{1.44, 0.0});
            });

    ctx.add("fock.08_deformation_composition",
            "q^N with q1 then q2 equals (q1 q2)^N", 1e-12, [&](CheckResult&) {
                double worst = 0.0;
                for (auto [q1, q2] : {std::pair{0.8, 1.2}, std::pair{0.5, 0.6}}) {
                    const Operator lhs =
                        fractal_operator(QDeformation::from_q(q1), dim) *
                        fractal_operator(QDeformation::from_q(q2), dim);
                    const Operator rhs =
                        fractal_operator(QDeformation::from_q(q1 * q2), dim);
                    worst = std::max(worst, max_abs(lhs - rhs));
                }
                return worst;
            });

    ctx.add("fock.09_deformation_identity", "q = 1 deformation is the identity",
            1e-15, [&](CheckResult&) {
                const Operator one =
                    fractal_operator(QDeformation::from_q(1.0), dim);
                double worst = max_abs(one - identity_like(dim));
                const Operator half =
                    fractal_operator(QDeformation::from_q(0.5), dim);
                worst = std::max(worst, std::abs(half(2, 2) - Complex{0.25, 0.0}));
                return worst;
            });

    ctx.add("fock.10_coherent_rescaling",
            "q^N maps |alpha> onto the |q alpha> ray", 1e-10,
            [&](CheckResult& c) {
                const double q = 1.0 / 3.0;
                const Complex alpha{1.5, 0.0};
                const FockState s = coherent_state(alpha, dim);
                Eigen::VectorXcd mapped =
                    fractal_operator(QDeformation::from_q(q), dim) * s.amplitudes;
                const double scale = mapped.norm();
                mapped /= scale;
                const FockState target = coherent_state(q * alpha, dim);
                const double overlap =
                    std::abs(target.amplitudes.dot(mapped)) / target.norm();
                c.note = "scale factor " + fmt(scale) +
                         " reported, not asserted (map is not norm-preserving)";
                return std::abs(1.0 - overlap);
            });

    ctx.add("fock.11_lens_moments", "<q alpha|a^n|q alpha> = (q alpha)^n", 1e-8,
            [&](CheckResult& c) {
                const std::vector<Complex> ws = {
                    Complex{0.4, 0.0},  Complex{1.0, 0.0}, Complex{1.6, 0.9},
                    Complex{0.0, 2.0},  Complex{-2.0, 0.0}, Complex{1.2, -1.3}};
                double worst = 0.0;
                for (double q : {0.25, 0.5, 1.0, 4.0 / 3.0}) {
                    const QDeformation def = QDeformation::from_q(q);
                    for (Complex w : ws) {
                        const Complex alpha = w / q;
                        Complex expect{1.0, 0.0};
                        for (int n = 0; n <= 5; ++n) {
                            const Complex lens =
                                magnifying_lens(def, alpha, n, dim);
                            worst = std::max(worst, std::abs(lens - expect));
                            expect *= w;
                        }
                    }
                }
                c.note = "q grid x 6 evaluation points, |q alpha| <= 2, n <= 5";
                return worst;
            });

    ctx.add("fock.12_lens_unit_scale",
            "lens moments collapse to 1 at the self-similarity point q|alpha| = 1",
            1e-8, [&](CheckResult&) {
                const double d = selfsim::similarity_dimension(4, 3);
                const double q = std::exp(-d * std::log(3.0));
                const QDeformation def = QDeformation::from_q(q);
                double worst = 0.0;
                for (int n : {1, 2, 7})
                    worst = std::max(
                        worst, std::abs(magnifying_lens(def, Complex{4.0, 0.0}, n,
                                                        dim) - Complex{1.0, 0.0}));
                return worst;
            });

    ctx.add("fock.13_squeeze_inverse", "squeeze(z) squeeze(-z) = identity",
            1e-8, [&](CheckResult&) {
                const Operator u = single_mode_squeeze(0.4, dim);
                const Operator v = single_mode_squeeze(-0.4, dim);
                return interior_deviation(u * v, identity_like(dim), 8);
            });

    ctx.add("fock.14_squeeze_unitary", "truncated squeeze is exactly unitary",
            1e-10, [&](CheckResult&) {
                const Operator u = single_mode_squeeze(0.4, dim);
                return max_abs(u.adjoint() * u - identity_like(dim));
            });

    ctx.add("fock.15_squeezed_occupation",
            "squeezed-vacuum occupation sinh^2(zeta)", 1e-6, [&](CheckResult&) {
                const double zeta = 0.3;
                const Operator u = single_mode_squeeze(zeta, dim);
                const Eigen::VectorXcd psi = u.col(0);
                const Complex occ = psi.dot(number(dim) * psi);
                return std::abs(occ - Complex{std::sinh(zeta) * std::sinh(zeta), 0.0});
            });

    ctx.add("fock.16_squeeze_zero", "zero squeezing is the identity", 1e-15,
            [&](CheckResult&) {
                return max_abs(single_mode_squeeze(0.0, 16) - identity_like(16));
            });
}

// ------------------------------------------------------------- selfsim

void selfsim_checks(Ctx& ctx) {
    using namespace selfsim;
    const int dim = ctx.cfg.cutoff;

    ctx.add("selfsim.01_koch_dimension", "ln 4 / ln 3 similarity dimension",
            1e-4, [&](CheckResult& c) {
                const double d = similarity_dimension(4, 3);
                c.note = "d = " + fmt(d);
                return std::abs(d - 1.2619);
            });

    ctx.add("selfsim.02_dimension_boundaries",
            "line-like and plane-filling reference dimensions", 1e-12,
            [&](CheckResult&) {
                double worst = std::abs(similarity_dimension(2, 2) - 1.0);
                worst = std::max(worst, std::abs(similarity_dimension(3, 3) - 1.0));
                worst = std::max(worst, std::abs(similarity_dimension(9, 3) - 2.0));
                return worst;
            });

    ctx.add("selfsim.03_koch_generator", "one substitution yields the 4-segment tent",
            1e-12, [&](CheckResult&) {
                const Polyline p = koch_iterate(1);
                if (p.size() != 5) return 1.0;
                const double h = std::sqrt(3.0) / 6.0;
                const Polyline want = {{0.0, 0.0},
                                       {1.0 / 3.0, 0.0},
                                       {0.5, h},
                                       {2.0 / 3.0, 0.0},
                                       {1.0, 0.0}};
                double worst = 0.0;
                for (std::size_t i = 0; i < want.size(); ++i)
                    worst = std::max(worst, std::hypot(p[i].x - want[i].x,
                                                       p[i].y - want[i].y));
                return worst;
            });

    ctx.add("selfsim.04_koch_census",
            "4^n segments of length 3^-n, total (4/3)^n", 1e-10,
            [&](CheckResult&) {
                double worst = 0.0;
                for (int depth = 0; depth <= 6; ++depth) {
                    const SegmentCensus cen = segment_census(koch_iterate(depth));
                    if (cen.segments != (1LL << (2 * depth))) return 1.0;
                    const double len = std::pow(3.0, -depth);
                    worst = std::max(worst, std::abs(cen.min_length / len - 1.0));
                    worst = std::max(worst, std::abs(cen.max_length / len - 1.0));
                    worst = std::max(
                        worst,
                        std::abs(cen.total_length / std::pow(4.0 / 3.0, depth) - 1.0));
                }
                return worst;
            });

    ctx.add("selfsim.05_koch_containment",
            "scaling by 1/3 embeds stage n-1 as the first quarter of stage n",
            1e-10, [&](CheckResult&) {
                double worst = 0.0;
                for (int n : {2, 3, 5}) {
                    const Polyline prev = koch_iterate(n - 1);
                    const Polyline cur = koch_iterate(n);
                    for (std::size_t i = 0; i < prev.size(); ++i)
                        worst = std::max(worst,
                                         std::hypot(prev[i].x / 3.0 - cur[i].x,
                                                    prev[i].y / 3.0 - cur[i].y));
                }
                return worst;
            });

    ctx.add("selfsim.06_u_basis", "basis component (q alpha)^n and its unit point",
            1e-10, [&](CheckResult&) {
                const double d = similarity_dimension(4, 3);
                const double q = std::exp(-d * std::log(3.0));
                double worst = std::abs(
                    u_n(QDeformation::from_q(q), Complex{4.0, 0.0}, 7) -
                    Complex{1.0, 0.0});
                worst = std::max(
                    worst, std::abs(u_n(QDeformation::from_q(0.3),
                                        Complex{2.0, -1.0}, 0) - Complex{1.0, 0.0}));
                return worst;
            });

    ctx.add("selfsim.07_u_lens_consistency",
            "lens expectation reproduces the basis component", 1e-8,
            [&](CheckResult&) {
                const QDeformation def = QDeformation::from_q(0.5);
                double worst = 0.0;
                for (double w : {0.5, 1.0, 1.8}) {
                    const Complex alpha{w / 0.5, 0.0};
                    for (int n = 0; n <= 4; ++n)
                        worst = std::max(
                            worst,
                            std::abs(u_n(def, alpha, n) -
                                     fock::magnifying_lens(def, alpha, n, dim)));
                }
                return worst;
            });

    ctx.add("selfsim.08_q_derivative_algebra",
            "finite-difference quotient on monomials and linearity", 1e-12,
            [&](CheckResult&) {
                const QDeformation two = QDeformation::from_q(2.0);
                const auto sq = [](Complex z) { return z * z; };
                const auto cube = [](Complex z) { return z * z * z; };
                double worst = std::abs(q_derivative(sq, two, Complex{1.0, 0.0}) -
                                        Complex{3.0, 0.0});
                const Complex z{1.3, -0.4};
                const Complex lin = q_derivative(
                    [&](Complex w) { return 2.0 * sq(w) + 3.0 * cube(w); }, two, z);
                const Complex parts = 2.0 * q_derivative(sq, two, z) +
                                      3.0 * q_derivative(cube, two, z);
                worst = std::max(worst, std::abs(lin - parts));
                return worst;
            });

    ctx.add("selfsim.09_q_derivative_limit",
            "q -> 1 recovers the ordinary derivative", 1e-4, [&](CheckResult&) {
                const QDeformation near = QDeformation::from_q(1.0 + 1e-6);
                const auto cube = [](Complex z) { return z * z * z; };
                return std::abs(q_derivative(cube, near, Complex{2.0, 0.0}) -
                                Complex{12.0, 0.0});
            });

    ctx.add("selfsim.10_u_orthonormality",
            "normalized components orthonormal under the Gaussian measure",
            1e-6, [&](CheckResult&) {
                const QDeformation one = QDeformation::from_q(1.0);
                const QuadratureRule rule = gauss_legendre(64, 0.0, 8.0);
                const int n_theta = 64;
                double worst = 0.0;
                for (int m = 0; m <= 4; ++m) {
                    for (int n = 0; n <= 4; ++n) {
                        Complex acc{0.0, 0.0};
                        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                            const double r = rule.nodes[i];
                            Complex ring{0.0, 0.0};
                            for (int j = 0; j < n_theta; ++j) {
                                const double th = 2.0 * kPi * j / n_theta;
                                const Complex alpha = std::polar(r, th);
                                ring += std::conj(u_n(one, alpha, m, true)) *
                                        u_n(one, alpha, n, true);
                            }
                            acc += rule.weights[i] * ring * (2.0 * kPi / n_theta) *
                                   std::exp(-r * r) * r / kPi;
                        }
                        const double want = m == n ? 1.0 : 0.0;
                        worst = std::max(worst, std::abs(acc - Complex{want, 0.0}));
                    }
                }
                return worst;
            });
}

// -------------------------------------------------------------- spiral

void spiral_checks(Ctx& ctx) {
    using namespace spiral;
    const MechanicalParams mech(1.0, 1.0, 4.25);  // Gamma 0.5, Omega 2, d 0.25
    const double T = mech.period();

    ctx.add("spiral.01_point_examples", "polar anchor points of the log spiral",
            1e-12, [&](CheckResult&) {
                const SpiralParams p(2.0, 0.1);
                const Point at0 = spiral_point(p, 0.0);
                double worst = std::hypot(at0.x - 2.0, at0.y);
                worst = std::max(
                    worst, std::abs(spiral_radius(p, 2.0 * kPi) -
                                    2.0 * std::exp(0.2 * kPi)));
                const SpiralParams ind(2.0, 0.1, Handedness::indirect);
                for (double th : {0.3, 1.7, 9.0})
                    worst = std::max(worst, std::abs(spiral_radius(ind, th) -
                                                     spiral_radius(p, -th)));
                return worst;
            });

    ctx.add("spiral.02_self_similarity",
            "one turn rescales the radius by exp(2 pi d)", 1e-12,
            [&](CheckResult&) {
                double worst = 0.0;
                for (auto hand : {Handedness::direct, Handedness::indirect}) {
                    const SpiralParams p(1.3, 0.25, hand);
                    const double factor =
                        hand == Handedness::direct ? std::exp(2.0 * kPi * 0.25)
                                                   : std::exp(-2.0 * kPi * 0.25);
                    for (double th : linspace(0.0, 4.0 * kPi, 9))
                        worst = std::max(
                            worst, std::abs(spiral_radius(p, th + 2.0 * kPi) /
                                                spiral_radius(p, th) - factor));
                }
                return worst;
            });

    ctx.add("spiral.03_winding_angle", "theta(t) = (Gamma/d) t covers a turn per period",
            1e-12, [&](CheckResult&) {
                const double d = mech.slope();
                double worst = std::abs(theta_of_t(mech, d, T) - 2.0 * kPi);
                worst = std::max(worst,
                                 std::abs(theta_of_t(mech, 0.25, kPi) - 2.0 * kPi));
                return worst;
            });

    ctx.add("spiral.04_amplitude_product",
            "|z1||z2| stays r0^2 (damping balances amplification)", 1e-12,
            [&](CheckResult&) {
                const double r0 = 1.3;
                const Trajectory traj =
                    analytic_trajectory(mech, r0, linspace(0.0, 2.0 * T, 33));
                double worst = 0.0;
                for (std::size_t i = 0; i < traj.times.size(); ++i)
                    worst = std::max(
                        worst, std::abs(std::abs(traj.z1[i]) * std::abs(traj.z2[i]) -
                                        r0 * r0));
                return worst;
            });

    ctx.add("spiral.05_period_decay",
            "|z1| shrinks by exp(-2 pi d) per period", 1e-10, [&](CheckResult& c) {
                const Trajectory traj =
                    analytic_trajectory(mech, 1.0, {0.0, 0.25 * T, 0.5 * T, 0.75 * T, T});
                const double got = std::abs(traj.z1.back());
                c.note = "|z1(T)| = " + fmt(got);
                double worst = std::abs(got - std::exp(-2.0 * kPi * mech.slope()));
                worst = std::max(worst, std::abs(got - std::exp(-kPi / 2.0)));
                return worst;
            });

    ctx.add("spiral.06_ode_residual",
            "analytic trajectories satisfy the damped/amplified pair", 1e-6,
            [&](CheckResult& c) {
                const double h = ctx.cfg.step;
                const int n = static_cast<int>(std::lround(2.0 * T / h));
                std::vector<double> times(n + 1);
                for (int i = 0; i <= n; ++i) times[i] = i * h;
                const Trajectory traj = analytic_trajectory(mech, 1.0, times);
                double worst = 0.0;
                for (const ResidualPair& r : ode_residual(mech, traj))
                    worst = std::max(worst, std::max(r.damped, r.amplified));
                c.note = "h = " + fmt(h) + " over two periods";
                return worst;
            });

    ctx.add("spiral.07_fd_convergence",
            "fourth-order stencil: residual drops ~16x under step halving", 4.0,
            [&](CheckResult& c) {
                const auto worst_at = [&](double h) {
                    const int n = static_cast<int>(std::lround(2.0 * T / h));
                    std::vector<double> times(n + 1);
                    for (int i = 0; i <= n; ++i) times[i] = i * h;
                    const Trajectory traj = analytic_trajectory(mech, 1.0, times);
                    double worst = 0.0;
                    for (const ResidualPair& r : ode_residual(mech, traj))
                        worst = std::max(worst, std::max(r.damped, r.amplified));
                    return worst;
                };
                const double factor = worst_at(0.02) / worst_at(0.01);
                c.note = "measured factor " + fmt(factor) + ", target 16";
                return std::abs(factor - 16.0);
            });

    ctx.add("spiral.08_parametric_circle",
            "rho = r0 e^{+-i theta(t)} solves the reduced oscillator", 1e-6,
            [&](CheckResult&) {
                const double h = ctx.cfg.step;
                const int n = static_cast<int>(std::lround(2.0 * T / h));
                std::vector<double> times(n + 1);
                for (int i = 0; i <= n; ++i) times[i] = i * h;
                double worst = 0.0;
                for (const ResidualPair& r :
                     rho_residual(mech, mech.slope(), times))
                    worst = std::max(worst, std::max(r.damped, r.amplified));
                return worst;
            });

    ctx.add("spiral.09_parametric_control",
            "a 1% frequency perturbation breaks the reduced equation", 1.0,
            [&](CheckResult& c) {
                const double h = 0.01;
                std::vector<double> times(629);
                for (int i = 0; i < 629; ++i) times[i] = i * h;
                double perturbed = 0.0;
                for (const ResidualPair& r :
                     rho_residual(mech, mech.slope(), times, 1.0,
                                  mech.Omega() * 1.01))
                    perturbed = std::max(perturbed, std::max(r.damped, r.amplified));
                c.note = "perturbed residual " + fmt(perturbed) +
                         " must dwarf the 1e-3 floor";
                return 1e-3 / perturbed;
            });

    ctx.add("spiral.10_rk4_accuracy", "integrator tracks the analytic pair",
            1e-8, [&](CheckResult& c) {
                const double G = mech.Gamma(), W = mech.Omega();
                const Complex v1 = Complex{-G, -W};  // d/dt of e^{-iWt}e^{-Gt} at 0
                const Complex v2 = Complex{G, W};
                const Trajectory traj = integrate_doubled_system(
                    mech, 1.0, 1.0, v1, v2, 2.0 * T, ctx.cfg.rk4_steps);
                const Trajectory ref = analytic_trajectory(mech, 1.0, traj.times);
                double worst = 0.0;
                for (std::size_t i = 0; i < traj.times.size(); ++i) {
                    worst = std::max(worst, std::abs(traj.z1[i] - ref.z1[i]));
                    worst = std::max(worst, std::abs(traj.z2[i] - ref.z2[i]));
                }
                c.note = std::to_string(ctx.cfg.rk4_steps) + " steps over two periods";
                return worst;
            });

    ctx.add("spiral.11_rk4_convergence",
            "global error drops ~16x when steps double", 4.0, [&](CheckResult& c) {
                const double G = mech.Gamma(), W = mech.Omega();
                const Complex v1 = Complex{-G, -W};
                const Complex v2 = Complex{G, W};
                const auto err_at = [&](int steps) {
                    const Trajectory traj = integrate_doubled_system(
                        mech, 1.0, 1.0, v1, v2, 2.0 * T, steps);
                    const Trajectory ref =
                        analytic_trajectory(mech, 1.0, traj.times);
                    double worst = 0.0;
                    for (std::size_t i = 0; i < traj.times.size(); ++i) {
                        worst = std::max(worst, std::abs(traj.z1[i] - ref.z1[i]));
                        worst = std::max(worst, std::abs(traj.z2[i] - ref.z2[i]));
                    }
                    return worst;
                };
                const double factor = err_at(1000) / err_at(2000);
                c.note = "measured factor " + fmt(factor) + ", target 16";
                return std::abs(factor - 16.0);
            });

    ctx.add("spiral.12_symmetric_limit",
            "gamma = 0 collapses the pair onto one undamped oscillator", 1e-10,
            [&](CheckResult&) {
                const MechanicalParams sym(1.0, 0.0, 4.0);
                const Complex v0{0.0, 0.3};
                const Trajectory traj =
                    integrate_doubled_system(sym, 1.0, 1.0, v0, v0, 3.0, 2000);
                double worst = 0.0;
                for (std::size_t i = 0; i < traj.times.size(); ++i)
                    worst = std::max(worst, std::abs(traj.z1[i] - traj.z2[i]));
                return worst;
            });

    ctx.add("spiral.13_canonical_momenta",
            "cross-assigned momenta obey their Euler-Lagrange flow", 1e-6,
            [&](CheckResult&) {
                const double G = mech.Gamma(), W = mech.Omega();
                const Trajectory traj = integrate_doubled_system(
                    mech, 1.0, 1.0, Complex{-G, -W}, Complex{G, W}, 2.0 * T,
                    ctx.cfg.rk4_steps);
                const double h = uniform_step(traj.times);
                const auto split_d1 = [&](const std::vector<Complex>& z) {
                    std::vector<double> re(z.size()), im(z.size());
                    for (std::size_t i = 0; i < z.size(); ++i) {
                        re[i] = z[i].real();
                        im[i] = z[i].imag();
                    }
                    const auto r = central_derivative1(re, h);
                    const auto m = central_derivative1(im, h);
                    std::vector<Complex> out(r.size());
                    for (std::size_t i = 0; i < r.size(); ++i)
                        out[i] = Complex{r[i], m[i]};
                    return out;
                };
                const auto dp1 = split_d1(traj.p_z1);
                const auto dp2 = split_d1(traj.p_z2);
                const auto dz1 = split_d1(traj.z1);
                const auto dz2 = split_d1(traj.z2);
                const double g = mech.gamma, k = mech.kappa;
                double worst = 0.0;
                for (std::size_t i = 0; i < dp1.size(); ++i) {
                    const std::size_t j = i + 2;
                    worst = std::max(
                        worst, std::abs(dp1[i] - (0.5 * g * dz2[i] - k * traj.z2[j])));
                    worst = std::max(
                        worst, std::abs(dp2[i] + 0.5 * g * dz1[i] + k * traj.z1[j]));
                }
                return worst;
            });

    ctx.add("spiral.14_slope_roundtrip",
            "log-log fit recovers the slope of both handedness branches", 1e-9,
            [&](CheckResult&) {
                const double d = 0.30635;
                std::vector<std::pair<double, double>> up, down;
                for (double th : linspace(0.0, 4.0 * kPi, 200)) {
                    up.emplace_back(th, spiral_radius(SpiralParams(2.0, d), th));
                    down.emplace_back(
                        th, spiral_radius(
                                SpiralParams(2.0, d, Handedness::indirect), th));
                }
                const double worst =
                    std::max(std::abs(fit_loglog_slope(up).slope - d),
                             std::abs(fit_loglog_slope(down).slope + d));
                return worst;
            });

    ctx.add("spiral.15_fit_quality", "exact spiral data fits with r^2 = 1",
            1e-12, [&](CheckResult&) {
                std::vector<std::pair<double, double>> samples;
                for (double th : linspace(0.0, 4.0 * kPi, 200))
                    samples.emplace_back(th,
                                         spiral_radius(SpiralParams(1.0, 0.2), th));
                return 1.0 - fit_loglog_slope(samples).r_squared;
            });

    ctx.add("spiral.16_fit_constant_radius",
            "constant radius fits to slope zero (degenerate but defined)",
            1e-15, [&](CheckResult&) {
                std::vector<std::pair<double, double>> samples;
                for (double th : linspace(0.0, 6.0, 40)) samples.emplace_back(th, 5.0);
                return std::abs(fit_loglog_slope(samples).slope);
            });
}

// --------------------------------------------------------- dissipative

void dissipative_checks(Ctx& ctx) {
    using namespace dissipative;
    const int pm = std::clamp(ctx.cfg.cutoff / 4, 8, 16);  // per-mode tensor dim
    const int margin = std::max(1, ctx.cfg.margin);
    const int pair_cutoff = ctx.cfg.pair_cutoff();

    ctx.add("dissipative.01_mixed_mode_ccr",
            "rotated modes A, B stay canonical and independent", 1e-12,
            [&](CheckResult& c) {
                const TwoModes tm = build_modes(pm);
                const Operator id = identity_like(pm * pm);
                const Operator zero = Operator::Zero(pm * pm, pm * pm);
                double worst = tensor_interior_deviation(
                    commutator(tm.A, tm.A.adjoint()), id, pm, margin);
                worst = std::max(worst,
                                 tensor_interior_deviation(
                                     commutator(tm.B, tm.B.adjoint()), id, pm, margin));
                worst = std::max(worst, tensor_interior_deviation(
                                            commutator(tm.A, tm.B), zero, pm, margin));
                worst = std::max(
                    worst, tensor_interior_deviation(
                               commutator(tm.A, tm.B.adjoint()), zero, pm, margin));
                c.note = "per-mode dim " + std::to_string(pm);
                return worst;
            });

    ctx.add("dissipative.02_su11_ladder",
            "[J+, J-] closes on the total number operator", 1e-10,
            [&](CheckResult&) {
                const TwoModes tm = build_modes(pm);
                const Operator num = tm.A.adjoint() * tm.A + tm.B.adjoint() * tm.B;
                return tensor_interior_deviation(
                    commutator(tm.gen.Jplus, tm.gen.Jminus),
                    Operator(-num - identity_like(pm * pm)), pm, margin + 1);
            });

    ctx.add("dissipative.03_hamiltonians_commute",
            "free and interaction parts commute", 1e-10, [&](CheckResult&) {
                const TwoModes tm = build_modes(pm);
                const Operator h0 = free_hamiltonian(tm, 2.0);
                const Operator hi = interaction_hamiltonian(tm, 0.7);
                return tensor_interior_deviation(
                    commutator(h0, hi), Operator::Zero(pm * pm, pm * pm), pm,
                    margin + 1);
            });

    ctx.add("dissipative.04_casimir_eigenstate",
            "charge operator reads (n_A - n_B)/2 on mode eigenstates", 1e-10,
            [&](CheckResult&) {
                const TwoModes tm = build_modes(pm);
                Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(pm * pm);
                vac(0) = 1.0;
                Eigen::VectorXcd s = tm.A.adjoint() * tm.A.adjoint() *
                                     (tm.B.adjoint() * vac);
                s /= s.norm();
                double worst = (tm.gen.casimir * s - 0.5 * s).norm();
                const Operator h0 = free_hamiltonian(tm, 2.0);
                worst = std::max(worst, (h0 * s - 2.0 * s).norm());
                return worst;
            });

    ctx.add("dissipative.05_pair_closure",
            "interaction couples |n,n> only to |n+-1,n+-1>", 1e-14,
            [&](CheckResult& c) {
                const int d = 10;
                const Operator l = fock::annihilation(d);
                const Operator ld = l.adjoint();
                const Operator hi = kI * 0.8 * (kron(ld, ld) - kron(l, l));
                double leak = 0.0;
                for (int n = 0; n < d; ++n) {
                    const int col = n * d + n;
                    for (int row = 0; row < d * d; ++row) {
                        if (row / d == row % d) continue;
                        leak = std::max(leak, std::abs(hi(row, col)));
                    }
                }
                c.note = "support scan in the paired-factor representation";
                return leak;
            });

    ctx.add("dissipative.06_vacuum_at_zero", "no evolution at t = 0", 1e-15,
            [&](CheckResult&) {
                const TwoModeState s = vacuum_evolution(1.0, 0.0, 16);
                double worst = std::abs(s.pair_amplitudes(0) - Complex{1.0, 0.0});
                for (int n = 1; n < 16; ++n)
                    worst = std::max(worst, std::abs(s.pair_amplitudes(n)));
                return worst;
            });

    ctx.add("dissipative.07_vacuum_amplitude_example",
            "leading evolved amplitude 1/cosh at unit damping-time", 1e-12,
            [&](CheckResult& c) {
                const TwoModeState s = vacuum_evolution(1.0, 1.0, 40, 1e-9);
                c.note = "cutoff 40 admits the documented 1e-9 tail, not 1e-12";
                return std::abs(s.pair_amplitudes(0) -
                                Complex{1.0 / std::cosh(1.0), 0.0});
            });

    ctx.add("dissipative.08_norm_deficit",
            "squared norm plus analytic tail is unity", 1e-12, [&](CheckResult&) {
                double worst = 0.0;
                for (double t : {0.3, 0.8}) {
                    const TwoModeState s = vacuum_evolution(1.0, t, pair_cutoff);
                    worst = std::max(
                        worst, std::abs(s.norm() * s.norm() +
                                        s.truncation_deficit - 1.0));
                }
                return worst;
            });

    ctx.add("dissipative.09_closed_vs_expm",
            "closed-form amplitudes match the exponential of the pair generator",
            1e-8, [&](CheckResult& c) {
                double worst = 0.0;
                for (double t : {0.5, 0.75}) {
                    const TwoModeState closed =
                        vacuum_evolution(1.0, t, pair_cutoff);
                    const TwoModeState numeric =
                        vacuum_evolution_numeric(1.0, t, pair_cutoff);
                    worst = std::max(
                        worst, (closed.pair_amplitudes - numeric.pair_amplitudes)
                                   .cwiseAbs()
                                   .maxCoeff());
                }
                c.note = "pair cutoff " + std::to_string(pair_cutoff);
                return worst;
            });

    ctx.add("dissipative.10_fidelity_value",
            "vacuum survival 1/cosh at unit damping-time", 1e-6,
            [&](CheckResult&) {
                double worst = std::abs(vacuum_fidelity(1.0, 0.0) - 1.0);
                worst = std::max(worst,
                                 std::abs(vacuum_fidelity(1.0, 1.0) - 0.648054));
                return worst;
            });

    ctx.add("dissipative.11_fidelity_trend",
            "survival decays monotonically below 1e-4 by damping-time 10",
            1e-12, [&](CheckResult&) {
                double worst = 0.0;
                double prev = vacuum_fidelity(1.0, 0.0);
                for (double t = 0.25; t <= 3.0; t += 0.25) {
                    const double f = vacuum_fidelity(1.0, t);
                    worst = std::max(worst, f - prev);
                    prev = f;
                }
                worst = std::max(worst, vacuum_fidelity(1.0, 10.0) - 1e-4);
                return worst;
            });

    ctx.add("dissipative.12_fidelity_vs_expm",
            "survival amplitude agrees with the generator route", 1e-6,
            [&](CheckResult&) {
                double worst = 0.0;
                for (double t : {0.25, 0.5, 1.0, 2.0}) {
                    const TwoModeState numeric =
                        vacuum_evolution_numeric(1.0, t, pair_cutoff);
                    worst = std::max(
                        worst, std::abs(std::abs(numeric.pair_amplitudes(0)) -
                                        vacuum_fidelity(1.0, t)));
                }
                return worst;
            });

    ctx.add("dissipative.13_entropy_value",
            "pair-summed entropy matches cosh^2 ln cosh^2 - sinh^2 ln sinh^2",
            1e-6, [&](CheckResult&) {
                double worst = 0.0;
                for (double t : {0.5, 1.0})
                    worst = std::max(
                        worst, std::abs(entropy_expectation(1.0, t, pair_cutoff) -
                                        entropy_closed_form(1.0, t)));
                return worst;
            });

    ctx.add("dissipative.14_entropy_mode_symmetry",
            "either mode carries the same entropy", 1e-10, [&](CheckResult&) {
                const int d = 20;
                const TwoModeState s = vacuum_evolution(1.0, 0.5, d);
                Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
                for (int n = 0; n < d; ++n) psi(n * d + n) = s.pair_amplitudes(n);
                const Operator sa = entropy_operator(1.0, 0.5, d, Mode::A);
                const Operator sb = entropy_operator(1.0, 0.5, d, Mode::B);
                const Complex ea = psi.dot(sa * psi);
                const Complex eb = psi.dot(sb * psi);
                return std::abs(ea - eb);
            });

    ctx.add("dissipative.15_entropy_operator_route",
            "tensor-space operator expectation equals the closed form", 1e-8,
            [&](CheckResult&) {
                const int d = 20;
                const TwoModeState s = vacuum_evolution(1.0, 0.5, d);
                Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
                for (int n = 0; n < d; ++n) psi(n * d + n) = s.pair_amplitudes(n);
                const Operator sa = entropy_operator(1.0, 0.5, d, Mode::A);
                return std::abs(psi.dot(sa * psi) -
                                Complex{entropy_closed_form(1.0, 0.5), 0.0});
            });

    ctx.add("dissipative.16_entropy_monotone",
            "entropy grows with damping-time", 1e-12, [&](CheckResult&) {
                double worst = 0.0;
                double prev = 0.0;
                for (double t = 0.1; t <= 1.05; t += 0.1) {
                    const double s = entropy_expectation(1.0, t, pair_cutoff);
                    worst = std::max(worst, prev - s);
                    prev = s;
                }
                return worst;
            });

    ctx.add("dissipative.17_thermo_record",
            "internal energy and heat bookkeeping on the evolved vacuum",
            1e-10, [&](CheckResult& c) {
                const Thermodynamics th =
                    thermodynamics(1.0, 2.0, 0.5, pair_cutoff);
                double worst = std::abs(th.internal_energy);
                worst = std::max(worst, std::abs(th.temperature - 1.0));
                worst = std::max(worst, std::abs(th.entropy));
                worst = std::max(
                    worst, std::abs(th.free_energy -
                                    (th.internal_energy -
                                     th.temperature * th.entropy)));
                worst = std::max(worst, std::abs(th.dF_dT + th.entropy));
                c.note = "pair expectation of the evolution generator vanishes; "
                         "operator entropy <S_A> = " +
                         fmt(th.entropy_operator_expectation);
                return worst;
            });

    ctx.add("dissipative.18_free_energy_operator",
            "dF/dT at fixed Omega is minus twice the evolution generator",
            1e-10, [&](CheckResult&) {
                const TwoModes tm = build_modes(pm);
                const double Omega = 2.0, T = 1.0, h = 1e-3;
                const auto full = [&](double temp) {
                    return Operator(free_hamiltonian(tm, Omega) +
                                    interaction_hamiltonian(tm, temp));
                };
                const Operator fd = (full(T + h) - full(T - h)) / (2.0 * h);
                return tensor_interior_deviation(
                    fd, Operator(-2.0 * tm.gen.J2), pm, margin);
            });

    ctx.add("dissipative.19_doubled_identity",
            "doubled-mode quadrature identity collapses to pair operators",
            1e-10, [&](CheckResult& c) {
                c.note = "per-mode dim 12, margin " + std::to_string(margin);
                return doubled_fractal_identity(12, margin);
            });

    ctx.add("dissipative.20_doubled_swap",
            "swapping the mode with its double flips the pair term's sign",
            1e-13, [&](CheckResult&) {
                const int d = 8;
                const Operator a = fock::annihilation(d);
                const Operator id = identity_like(d);
                const Operator c = kron(a, id);
                const Operator t = kron(id, a);
                const auto pair_term = [&](const Operator& u, const Operator& v) {
                    const double rs2 = 1.0 / std::sqrt(2.0);
                    const Operator C = rs2 * (u + v);
                    const Operator D = rs2 * (u - v);
                    return Operator(C.adjoint() * D.adjoint() - C * D);
                };
                const Operator fwd = pair_term(c, t);
                const Operator swp = pair_term(t, c);
                // <2,0|C+D+|0,0> = +sqrt(2)/2, <0,2| gets the minus sign,
                // <1,1| vanishes; the swap negates all of them.
                const double rt = std::sqrt(2.0) / 2.0;
                double worst = std::abs(fwd(2 * d, 0) - Complex{rt, 0.0});
                worst = std::max(worst, std::abs(fwd(2, 0) + Complex{rt, 0.0}));
                worst = std::max(worst, std::abs(fwd(d + 1, 0)));
                worst = std::max(worst, max_abs(swp + fwd));
                return worst;
            });

    ctx.add("dissipative.21_squeeze_generator_match",
            "quadrature generator equals the pair-creation generator", 1e-12,
            [&](CheckResult&) {
                const int d = 10;
                const double zeta = 0.7;
                const TwoModes tm = build_modes(d);
                const Operator a = fock::annihilation(d);
                const Operator g = a * a - a.adjoint() * a.adjoint();
                const Operator id = identity_like(d);
                const Operator x1 = -0.5 * zeta * (kron(g, id) - kron(id, g));
                const Operator x2 = zeta * (tm.gen.Jplus - tm.gen.Jminus);
                return max_abs(x1 - x2);
            });

    ctx.add("dissipative.22_squeeze_amplitudes",
            "factorized squeeze reproduces tanh^n/cosh pair amplitudes", 1e-8,
            [&](CheckResult& c) {
                const int n_pairs = 40;
                double worst = 0.0;
                for (double t : {0.75, 1.5}) {
                    const Eigen::VectorXd amps =
                        squeezed_pair_amplitudes(1.0, t, n_pairs);
                    const double th = std::tanh(t), ch = std::cosh(t);
                    double factor = 1.0 / ch;
                    for (int n = 0; n < n_pairs; ++n) {
                        worst = std::max(worst, std::abs(amps(n) - factor));
                        factor *= th;
                    }
                }
                c.note = "damping-times 0.75 and 1.5, first 40 pairs";
                return worst;
            });

    ctx.add("dissipative.23_squeeze_dense_small",
            "dense tensor squeeze agrees on the leading pairs", 1e-6,
            [&](CheckResult&) {
                const int d = 20;
                const double t = 0.4;
                const Operator u = two_mode_squeeze_generator(1.0, t, d);
                const Eigen::VectorXcd psi = u.col(0);
                const double th = std::tanh(t), ch = std::cosh(t);
                double worst = 0.0;
                for (int n = 0; n <= 5; ++n) {
                    // <n,n| in the mixed-mode basis expanded over even
                    // two-mode levels |2k, 2n-2k>.
                    Complex amp{0.0, 0.0};
                    for (int k = 0; k <= n; ++k) {
                        double lw = std::lgamma(n + 1.0) -
                                    std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
                        lw += 0.5 * (std::lgamma(2.0 * k + 1.0) +
                                     std::lgamma(2.0 * (n - k) + 1.0));
                        lw -= std::lgamma(n + 1.0) + n * std::log(2.0);
                        const double sign = (n - k) % 2 == 0 ? 1.0 : -1.0;
                        amp += sign * std::exp(lw) * psi(2 * k * d + 2 * (n - k));
                    }
                    worst = std::max(worst,
                                     std::abs(amp - Complex{std::pow(th, n) / ch, 0.0}));
                }
                return worst;
            });
}

// ------------------------------------------------------------- ncplane

void ncplane_checks(Ctx& ctx) {
    using namespace ncplane;
    const int dim = ctx.cfg.cutoff;
    const int margin = std::max(1, ctx.cfg.margin);

    ctx.add("ncplane.01_quantized_radii", "squared radii step by 2 unit^2",
            1e-12, [&](CheckResult&) {
                const auto unit = quantized_radii(NCParams::from_length(1.0), 10);
                double worst = std::abs(unit[0] - 1.0);
                const auto q05 = quantized_radii(NCParams::from_deformation(0.5), 5);
                worst = std::max(worst, std::abs(q05[3] - 1.75));
                const auto q1 = quantized_radii(NCParams::from_deformation(1.0), 10);
                for (int n = 0; n <= 10; ++n)
                    worst = std::max(worst, std::abs(q1[n] - unit[n]));
                const auto la = quantized_radii(NCParams::from_length(0.77), 6);
                const auto qa = quantized_radii(NCParams::from_deformation(0.77), 6);
                for (int n = 0; n <= 6; ++n)
                    worst = std::max(worst, std::abs(la[n] - qa[n]));
                return worst;
            });

    ctx.add("ncplane.02_radius_energy_link",
            "level energies are half the squared radii", 1e-12,
            [&](CheckResult&) {
                const auto radii =
                    quantized_radii(NCParams::from_deformation(0.8), 10);
                double worst = 0.0;
                for (int n = 0; n <= 10; ++n)
                    worst = std::max(
                        worst, std::abs(2.0 * fractal_energy(0.8, n) - radii[n]));
                worst = std::max(worst, std::abs(fractal_energy(1.0, 0) - 0.5));
                return worst;
            });

    ctx.add("ncplane.03_deformed_ccr",
            "[z, z+] = 1 and [x1, x2] = i q^2 on the interior", 1e-10,
            [&](CheckResult& c) {
                double worst = 0.0;
                for (double q : {0.5, 0.7, 1.0, 1.3}) {
                    const DeformedLadder lad = deformed_ladder(q, dim);
                    worst = std::max(
                        worst, interior_deviation(commutator(lad.z, lad.z_dag),
                                                  identity_like(dim), margin));
                    worst = std::max(
                        worst,
                        interior_deviation(commutator(lad.x1, lad.x2),
                                           Operator(kI * q * q *
                                                    identity_like(dim)), margin));
                }
                c.note = "q in {0.5, 0.7, 1.0, 1.3}, cutoff " + std::to_string(dim);
                return worst;
            });

    ctx.add("ncplane.04_interference_phase",
            "enclosed area over the cell unit, scheme-independent", 1e-12,
            [&](CheckResult&) {
                double worst =
                    std::abs(interference_phase(0.0, NCParams::from_length(2.0)));
                worst = std::max(
                    worst,
                    std::abs(interference_phase(2.0, NCParams::from_damping(0.5)) -
                             1.0));
                worst = std::max(
                    worst,
                    std::abs(interference_phase(3.0, NCParams::from_damping(2.0)) -
                             6.0));
                worst = std::max(
                    worst,
                    std::abs(interference_phase(1.0,
                                                NCParams::from_deformation(0.5)) -
                             4.0));
                return worst;
            });

    ctx.add("ncplane.05_deformed_spectrum",
            "x1^2 + x2^2 eigenvalues 2 q^2 (n + 1/2)", 1e-6, [&](CheckResult& c) {
                const int count = std::max(4, dim / 2);
                double worst = 0.0;
                std::string dims;
                for (double q : {0.5, 1.0, 1.3}) {
                    const DeformedSpectrum spec = deformed_spectrum(q, count);
                    for (int n = 0; n < count; ++n) {
                        const double want = 2.0 * q * q * (n + 0.5);
                        worst = std::max(
                            worst, std::abs(spec.eigenvalues[n] - want) / want);
                    }
                    dims += (dims.empty() ? "" : ", ") +
                            std::to_string(spec.working_dim);
                }
                c.note = "lowest " + std::to_string(count) +
                         " levels; working dims " + dims;
                return worst;
            });

    ctx.add("ncplane.06_velocity_xi_commutators",
            "[v+, v-] = -i gamma/m^2 and [xi+, xi-] = i/gamma", 1e-10,
            [&](CheckResult& c) {
                const spiral::MechanicalParams mech(1.0, 2.0, 4.0);
                const CommutatorDeviations dev =
                    velocity_xi_commutators(mech, 12, margin);
                double worst = std::max(dev.velocity, dev.xi);
                const spiral::MechanicalParams stiff(1.0, 2.0, 9.0);
                const CommutatorDeviations dev2 =
                    velocity_xi_commutators(stiff, 12, margin);
                worst = std::max(worst, std::abs(dev.velocity - dev2.velocity));
                worst = std::max(worst, std::abs(dev.xi - dev2.xi));
                c.note = "kappa-independent: deviations repeat at kappa 4 and 9";
                return worst;
            });

    ctx.add("ncplane.07_xi_gamma_scaling",
            "xi commutator scales as 1/gamma", 1e-10, [&](CheckResult&) {
                double worst = 0.0;
                for (double g : {1.0, 4.0}) {
                    const spiral::MechanicalParams mech(1.0, g, 9.0);
                    const CommutatorDeviations dev =
                        velocity_xi_commutators(mech, 12, margin);
                    worst = std::max(worst, dev.xi);
                }
                return worst;
            });

    ctx.add("ncplane.08_uncertainty_ground",
            "ground state saturates Delta x1 Delta x2 = q^2/2", 1e-8,
            [&](CheckResult& c) {
                double worst = 0.0;
                for (double q : {0.6, 1.0}) {
                    const UncertaintyResult u = uncertainty_check(q, dim);
                    worst = std::max(worst, std::abs(u.product - q * q / 2.0));
                    worst = std::max(worst, std::abs(u.bound - q * q / 2.0));
                }
                c.note = "q = 0.6 gives product 0.18";
                return worst;
            });

    ctx.add("ncplane.09_uncertainty_excited",
            "first excited level sits at three times the bound", 1e-6,
            [&](CheckResult&) {
                const double q = 0.6;
                const UncertaintyResult u = uncertainty_check(q, dim, 1);
                double worst = std::abs(u.product - 3.0 * q * q / 2.0);
                worst = std::max(worst, u.bound - u.product);
                return worst;
            });
}

// -------------------------------------------------------------- golden

void golden_checks(Ctx& ctx) {
    using namespace golden;
    const GoldenConstants gc = golden_constants();

    ctx.add("golden.01_quadratic_identities",
            "phi and psi solve x^2 = x + 1; psi = -1/phi", 1e-12,
            [&](CheckResult&) {
                const RecurrenceResiduals r = quadratic_and_recurrence_check();
                double worst = std::max(r.phi_quadratic, r.psi_quadratic);
                worst = std::max(worst, r.max_recurrence_scaled);
                worst = std::max(worst, std::abs(gc.psi + 1.0 / gc.phi));
                return worst;
            });

    ctx.add("golden.02_quarter_turn", "radius multiplies by phi per quarter turn",
            1e-10, [&](CheckResult&) {
                double worst = std::abs(golden_radius(1.0, kPi / 2.0) - gc.phi);
                worst = std::max(
                    worst, std::abs(golden_radius(2.0, 1.5 * kPi) -
                                    2.0 * gc.phi * gc.phi * gc.phi));
                worst = std::max(worst,
                                 std::abs(quarter_turn_progression(1.5, 0) - 1.5));
                for (int n = 1; n <= 8; ++n)
                    worst = std::max(
                        worst, std::abs(quarter_turn_progression(1.5, n) /
                                            quarter_turn_progression(1.5, n - 1) -
                                        gc.phi));
                return worst;
            });

    ctx.add("golden.03_fibonacci_values", "integer sequence prefix and F_12",
            0.5, [&](CheckResult&) {
                const std::int64_t want[] = {0, 1, 1, 2, 3, 5, 8, 13};
                double mismatches = 0.0;
                for (int n = 0; n <= 7; ++n)
                    if (fibonacci(n) != want[n]) mismatches += 1.0;
                if (fibonacci(12) != 144) mismatches += 1.0;
                if (fibonacci(92) <= 0) mismatches += 1.0;  // must not overflow
                return mismatches;
            });

    ctx.add("golden.04_ratio_convergence",
            "F_20/F_19 approximates phi", 1e-7, [&](CheckResult& c) {
                const double r = ratio_convergence(20);
                c.note = "ratio " + fmt(r);
                return std::abs(r - gc.phi);
            });

    ctx.add("golden.05_branch_ode",
            "e^{-phi t} and e^{-psi t} solve r'' + r' - r = 0", 1e-6,
            [&](CheckResult& c) {
                const double h = ctx.cfg.step;
                const int n = static_cast<int>(std::lround(2.0 / h));
                std::vector<double> times(n + 1);
                for (int i = 0; i <= n; ++i) times[i] = i * h;
                const GoldenOdeResiduals res = golden_ode_check(times);
                double worst = 0.0;
                for (double v : res.phi_branch) worst = std::max(worst, v);
                for (double v : res.psi_branch) worst = std::max(worst, v);
                c.note = "h = " + fmt(h) + " on [0, 2]";
                return worst;
            });

    ctx.add("golden.06_tiling_spiral_geometry",
            "quarter arcs carry Fibonacci radii through the square tiling",
            1e-9, [&](CheckResult&) {
                const int spa = 32;
                const Polyline p = fibonacci_spiral(6, 1.0, spa);
                if (p.size() != static_cast<std::size_t>(6 * spa + 1)) return 1.0;
                double worst = 0.0;
                for (int k = 1; k <= 6; ++k) {
                    const int mid = (k - 1) * spa + spa / 2;
                    const Point a = p[mid - 1], b = p[mid], c = p[mid + 1];
                    const double ab = std::hypot(b.x - a.x, b.y - a.y);
                    const double bc = std::hypot(c.x - b.x, c.y - b.y);
                    const double ca = std::hypot(a.x - c.x, a.y - c.y);
                    const double cross = (b.x - a.x) * (c.y - a.y) -
                                         (b.y - a.y) * (c.x - a.x);
                    const double R = ab * bc * ca / (2.0 * std::abs(cross));
                    const double want = static_cast<double>(fibonacci(k));
                    worst = std::max(worst, std::abs(R / want - 1.0));
                }
                return worst;
            });

    ctx.add("golden.07_deviation_trend",
            "arc radii approach the phi-growth law as the tiling grows", 0.5,
            [&](CheckResult& c) {
                const double d4 = golden_deviation(4);
                const double d6 = golden_deviation(6);
                const double d8 = golden_deviation(8);
                const double d12 = golden_deviation(12);
                c.note = "deviations " + fmt(d4) + " > " + fmt(d6) + " > " +
                         fmt(d8) + " > " + fmt(d12) + " > 0";
                const bool ok = d4 > d6 && d6 > d8 && d8 > d12 && d12 > 0.0;
                return ok ? 0.0 : 1.0;
            });

    ctx.add("golden.08_slope_roundtrip",
            "log-log fit of the golden spiral recovers its slope", 1e-6,
            [&](CheckResult& c) {
                std::vector<std::pair<double, double>> samples;
                for (double th : linspace(0.0, 4.0 * kPi, 200))
                    samples.emplace_back(th, golden_radius(1.0, th));
                const double slope = spiral::fit_loglog_slope(samples).slope;
                c.note = "slope " + fmt(slope);
                double worst = std::abs(slope - gc.d_g);
                worst = std::max(worst, std::abs(gc.d_g - 0.306349));
                return worst;
            });

    ctx.add("golden.09_psi_branch_growth",
            "the mirror branch grows while the phi branch decays", 1e-15,
            [&](CheckResult&) {
                double worst = 0.0;
                double prev_psi = 1.0, prev_phi = 1.0;
                for (double t = 0.25; t <= 3.0; t += 0.25) {
                    const double grow = std::exp(-gc.psi * t);
                    const double decay = std::exp(-gc.phi * t);
                    worst = std::max(worst, prev_psi - grow);
                    worst = std::max(worst, decay - prev_phi);
                    prev_psi = grow;
                    prev_phi = decay;
                }
                return worst;
            });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "fock", "selfsim", "spiral", "dissipative", "golden", "ncplane"};
    return names;
}

bool is_valid_suite(const std::string& name) {
    if (name == "all") return true;
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport run_suite(const std::string& suite, const RunConfig& config) {
    if (!is_valid_suite(suite))
        throw std::invalid_argument("unknown suite '" + suite + "'");

    Ctx ctx{config, {}};
    const bool all = suite == "all";
    if (all || suite == "fock") fock_checks(ctx);
    if (all || suite == "selfsim") selfsim_checks(ctx);
    if (all || suite == "spiral") spiral_checks(ctx);
    if (all || suite == "dissipative") dissipative_checks(ctx);
    if (all || suite == "golden") golden_checks(ctx);
    if (all || suite == "ncplane") ncplane_checks(ctx);

    std::sort(ctx.checks.begin(), ctx.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });

    VerificationReport report;
    report.suite = suite;
    report.config = config;
    report.checks = std::move(ctx.checks);
    return report;
}

}  // namespace fraclab
