#include <benchmark/benchmark.h>

#include "liouville/critical_spectrum.hpp"
#include "liouville/degree.hpp"
#include "liouville/generating_series.hpp"
#include "liouville/matrix_conditions.hpp"

namespace {

using namespace liouville;

std::vector<double> gammas(std::size_t n) {
  std::vector<double> g;
  for (std::size_t l = 0; l < n; ++l) g.push_back(0.3 + 0.71 * static_cast<double>(l));
  return g;
}

void BM_Spectrum(benchmark::State& state) {
  const SingularitySet s(gammas(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_spectrum(s, 20.0));
}
BENCHMARK(BM_Spectrum)->Arg(0)->Arg(4)->Arg(8)->Arg(12);

void BM_GeneratingFunction(benchmark::State& state) {
  const SingularitySet s(gammas(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_generating_function(-2, s, 20.0));
}
BENCHMARK(BM_GeneratingFunction)->Arg(0)->Arg(4)->Arg(8);

void BM_Degree(benchmark::State& state) {
  const ProblemInstance p{SurfaceSpec::closed(2), SingularitySet(gammas(4)),
                          InteractionMatrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), {40.0, 50.0, 60.0}};
  for (auto _ : state) benchmark::DoNotOptimize(leray_schauder_degree(p));
}
BENCHMARK(BM_Degree);

void BM_CheckHypotheses(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  DenseMatrix m(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 0.0;
  for (auto _ : state) {
    const InteractionMatrix a(m);  // fresh cache each time
    benchmark::DoNotOptimize(check_hypotheses(a));
  }
}
BENCHMARK(BM_CheckHypotheses)->Arg(3)->Arg(16)->Arg(64);

} // namespace
