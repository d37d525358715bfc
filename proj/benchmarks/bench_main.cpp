#include <complex>
#include <utility>
#include <vector>

#include <benchmark/benchmark.h>

#include "fraclab/dissipative.hpp"
#include "fraclab/fock.hpp"
#include "fraclab/golden.hpp"
#include "fraclab/ncplane.hpp"
#include "fraclab/numerics.hpp"
#include "fraclab/selfsim.hpp"
#include "fraclab/spiral.hpp"

namespace {

void BM_koch_iterate(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fraclab::selfsim::koch_iterate(depth));
    }
}
BENCHMARK(BM_koch_iterate)->Arg(4)->Arg(6)->Arg(8);

void BM_koch_census(benchmark::State& state) {
    const auto curve =
        fraclab::selfsim::koch_iterate(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fraclab::selfsim::segment_census(curve));
    }
}
BENCHMARK(BM_koch_census)->Arg(6)->Arg(8);

void BM_coherent_lens(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const auto q = fraclab::fock::QDeformation::from_q(0.5);
    const std::complex<double> alpha{2.4, -1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            fraclab::fock::magnifying_lens(q, alpha, 5, dim));
    }
}
BENCHMARK(BM_coherent_lens)->Arg(64)->Arg(256);

void BM_single_mode_squeeze(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fraclab::fock::single_mode_squeeze(0.3, dim));
    }
}
BENCHMARK(BM_single_mode_squeeze)->Arg(32)->Arg(64)->Arg(128);

void BM_vacuum_evolution_numeric(benchmark::State& state) {
    const int cutoff = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            fraclab::dissipative::vacuum_evolution_numeric(1.0, 1.0, cutoff));
    }
}
BENCHMARK(BM_vacuum_evolution_numeric)->Arg(64)->Arg(128)->Arg(256);

void BM_deformed_spectrum(benchmark::State& state) {
    const int count = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fraclab::ncplane::deformed_spectrum(0.5, count));
    }
}
BENCHMARK(BM_deformed_spectrum)->Arg(16)->Arg(32);

void BM_integrate_doubled_system(benchmark::State& state) {
    const fraclab::spiral::MechanicalParams mech(1.0, 1.0, 4.25);
    const double G = mech.Gamma(), W = mech.Omega();
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fraclab::spiral::integrate_doubled_system(
            mech, 1.0, 1.0, {-G, -W}, {G, W}, 2.0 * mech.period(), steps));
    }
}
BENCHMARK(BM_integrate_doubled_system)->Arg(1000)->Arg(10000);

void BM_fit_loglog_slope(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double d_g = fraclab::golden::golden_constants().d_g;
    std::vector<std::pair<double, double>> samples;
    samples.reserve(n);
    for (double theta : fraclab::linspace(0.0, 12.0, n))
        samples.emplace_back(theta, fraclab::golden::golden_radius(1.0, theta));
    benchmark::DoNotOptimize(d_g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fraclab::spiral::fit_loglog_slope(samples));
    }
}
BENCHMARK(BM_fit_loglog_slope)->Arg(400)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
