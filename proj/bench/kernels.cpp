// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "dp6/hodge.hpp"
#include "dp6/numsolve.hpp"

using namespace dp6;

namespace {

const SolutionSet& nodes() {
  static const SolutionSet s = singular_points(y_prime());
  return s;
}

void BM_GradedMap(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(graded_jacobian_map(y_prime(), parallel).rank);
}

void BM_PsiConditions(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  auto c = cokernel_basis(graded_jacobian_map(y_prime()));
  const auto& pts = nodes().points;
  for (auto _ : state) benchmark::DoNotOptimize(psi_conditions(y_prime(), c, pts, parallel));
}

void BM_CertifyNodes(benchmark::State& state) {
  const auto& pts = nodes().points;
  for (auto _ : state) {
    auto certs = state.range(0) != 0 ? certify_all(y_prime(), pts) : certify_all_serial(y_prime(), pts);
    benchmark::DoNotOptimize(certs.data());
  }
}

void BM_SolveCharts(benchmark::State& state) {
  SolveOptions opt;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(y_prime(), opt).size());
}

}  // namespace

// Argument 1 is the OpenMP kernel, 0 the serial reference.
BENCHMARK(BM_GradedMap)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsiConditions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyNodes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveCharts)->Arg(0)->Arg(1)->Iterations(1)->Unit(benchmark::kSecond);

BENCHMARK_MAIN();
