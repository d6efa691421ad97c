#include <benchmark/benchmark.h>

#include "selforg/analytics.hpp"
#include "selforg/linear_response.hpp"
#include "selforg/steady_state.hpp"

using namespace selforg;

namespace {

const ModelParams kOrganized{-100.0, 10.0, -300.0, 200.0, 100.0};

void bm_solve_steady(benchmark::State& state) {
  const SpatialGrid grid(state.range(0));
  for (auto _ : state) {
    SteadyState s = solve_steady(kOrganized, grid, SolverOptions{});
    benchmark::DoNotOptimize(s.theta_op);
  }
}

void bm_build_matrix(benchmark::State& state) {
  const SpatialGrid grid(state.range(0));
  const SteadyState s = solve_steady(kOrganized, grid, SolverOptions{});
  for (auto _ : state) {
    BogoliubovMatrix bm = build_matrix(s, kOrganized, grid);
    benchmark::DoNotOptimize(bm.norm);
  }
}

void bm_eigendecompose(benchmark::State& state) {
  const SpatialGrid grid(state.range(0));
  const SteadyState s = solve_steady(kOrganized, grid, SolverOptions{});
  const BogoliubovMatrix bm = build_matrix(s, kOrganized, grid);
  for (auto _ : state) {
    auto modes = eigendecompose(bm);
    benchmark::DoNotOptimize(modes.data());
  }
}

void bm_quartic_roots(benchmark::State& state) {
  const ModelParams p = kOrganized.with_eta(60.0);
  for (auto _ : state) {
    QuarticRoots qr = quartic_roots(p);
    benchmark::DoNotOptimize(qr.roots.data());
  }
}

}  // namespace

BENCHMARK(bm_solve_steady)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_build_matrix)->Arg(100)->Arg(200)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_eigendecompose)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_quartic_roots);

BENCHMARK_MAIN();
