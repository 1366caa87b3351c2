// Serial vs OpenMP timings for the three hot kernels. On a single hardware
// thread the parallel variants should tie the serial ones to within scheduling
// overhead; with more cores the row-parallel loops scale.
#include <benchmark/benchmark.h>

#include <span>
#include <vector>

#include "sqz/entropy.hpp"
#include "sqz/kernels.hpp"
#include "sqz/lorentz.hpp"
#include "sqz/quadrature.hpp"

namespace {

void bm_normalization_quadrature(benchmark::State& state, sqz::Exec exec) {
  const sqz::BoostedOscillatorState st{1.0};
  const sqz::QuadratureRule rule = sqz::squeeze_rule(1.0);
  for (auto _ : state) {
    const double norm = sqz::integrate_2d(
        [&st](double z, double t) {
          const double a = st.spatial(z, t);
          return a * a;
        },
        rule, exec);
    benchmark::DoNotOptimize(norm);
  }
  state.counters["nodes"] = static_cast<double>(rule.size());
}

void bm_density_grid(benchmark::State& state, sqz::Exec exec) {
  const sqz::BoostedOscillatorState st{1.0};
  std::vector<double> axis(512);
  for (int i = 0; i < 512; ++i) axis[i] = -4.0 + i * (8.0 / 511.0);
  std::vector<double> out(axis.size() * axis.size());
  for (auto _ : state) {
    sqz::grid_map(
        [&st](double z, double t) {
          const double a = st.spatial(z, t);
          return a * a;
        },
        axis, axis, std::span<double>(out), exec);
    benchmark::DoNotOptimize(out.data());
  }
}

void bm_residual_scan(benchmark::State& state, sqz::Exec exec) {
  const sqz::BoostedOscillatorState st{0.5};
  for (auto _ : state) {
    const double r = sqz::invariant_equation_residual(st, {1.5, 4e-3}, exec);
    benchmark::DoNotOptimize(r);
  }
}

void bm_partial_trace(benchmark::State& state, sqz::Exec exec) {
  const sqz::OscillatorSystem sys{1.0, 5.0, 3.0};
  const sqz::QuadratureRule rule = sqz::QuadratureRule::trapezoid(-12.0, 12.0, 200);
  for (auto _ : state) {
    const sqz::ReducedDensityMatrix rho(sys, rule, exec);
    benchmark::DoNotOptimize(rho.eigenvalue(0));
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_normalization_quadrature, serial, sqz::Exec::serial);
BENCHMARK_CAPTURE(bm_normalization_quadrature, openmp, sqz::Exec::parallel);
BENCHMARK_CAPTURE(bm_density_grid, serial, sqz::Exec::serial);
BENCHMARK_CAPTURE(bm_density_grid, openmp, sqz::Exec::parallel);
BENCHMARK_CAPTURE(bm_residual_scan, serial, sqz::Exec::serial);
BENCHMARK_CAPTURE(bm_residual_scan, openmp, sqz::Exec::parallel);
BENCHMARK_CAPTURE(bm_partial_trace, serial, sqz::Exec::serial);
BENCHMARK_CAPTURE(bm_partial_trace, openmp, sqz::Exec::parallel);

BENCHMARK_MAIN();
