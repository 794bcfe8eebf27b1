#include <benchmark/benchmark.h>

#include "hetnet/analytic.hpp"
#include "hetnet/presets.hpp"

using namespace hetnet;

static void BM_CoverageClosedForm(benchmark::State& state) {
  const NetworkConfig cfg = presets::section_vi_case(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(analytic::coverage(1.0, cfg, analytic::CoveragePath::closed_form).total);
}
BENCHMARK(BM_CoverageClosedForm)->DenseRange(1, 7);

static void BM_CoverageQuadrature(benchmark::State& state) {
  const NetworkConfig cfg = presets::section_vi_case(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(analytic::coverage(1.0, cfg, analytic::CoveragePath::quadrature).total);
}
BENCHMARK(BM_CoverageQuadrature)->DenseRange(1, 7);

static void BM_RateCoverage(benchmark::State& state) {
  const NetworkConfig cfg = presets::section_vi_case(1);
  for (auto _ : state) benchmark::DoNotOptimize(analytic::rate_coverage(1.0, cfg).total);
}
BENCHMARK(BM_RateCoverage);
