#include <benchmark/benchmark.h>

#include "liouville/torus/grid.hpp"
#include "liouville/torus/solver.hpp"
#include "liouville/torus/system.hpp"
#include "liouville/torus/weights.hpp"

namespace {

using namespace liouville;
using namespace liouville::torus;

ProblemInstance pair_problem() {
  return {SurfaceSpec::torus(), SingularitySet(), InteractionMatrix({{0, 1}, {1, 0}}), {1.0, 1.0}};
}

WeightSpec pair_weights() {
  const SmoothFactor g{1.0, {{0.1, 1, 0, 0.0}}};
  return {{g, g}, SingularitySet()};
}

void BM_Laplacian(benchmark::State& state) {
  const TorusGrid grid(static_cast<std::size_t>(state.range(0)));
  const GridFunction f = grid.sample([](const TorusPoint& x) { return x[0] * x[1]; });
  for (auto _ : state) benchmark::DoNotOptimize(grid.laplacian(f));
}
BENCHMARK(BM_Laplacian)->Arg(32)->Arg(64)->Arg(128);

void BM_Residual(benchmark::State& state) {
  const TorusGrid grid(static_cast<std::size_t>(state.range(0)));
  const auto h = build_weights(pair_weights(), grid);
  const ProblemInstance p = pair_problem();
  const FieldSet u = FieldSet::zeros(2, grid.resolution());
  for (auto _ : state) benchmark::DoNotOptimize(residual(u, p, h, grid));
}
BENCHMARK(BM_Residual)->Arg(32)->Arg(64)->Arg(128);

void BM_Solve(benchmark::State& state) {
  const TorusGrid grid(static_cast<std::size_t>(state.range(0)));
  const ProblemInstance p = pair_problem();
  const WeightSpec w = pair_weights();
  for (auto _ : state) benchmark::DoNotOptimize(solve_continuation(p, w, grid));
}
BENCHMARK(BM_Solve)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_GreenFunction(benchmark::State& state) {
  const TorusGrid grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(green_function(grid, {0.3, 0.7}));
}
BENCHMARK(BM_GreenFunction)->Arg(64);

} // namespace
