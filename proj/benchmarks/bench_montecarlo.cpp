#include <benchmark/benchmark.h>

#include "hetnet/montecarlo.hpp"
#include "hetnet/presets.hpp"

using namespace hetnet;

static void BM_SimulateCase(benchmark::State& state) {
  montecarlo::SimPlan plan;
  plan.cfg = presets::section_vi_case(static_cast<int>(state.range(0)));
  plan.realizations = 1000;
  plan.threads = 1;
  plan.thresholds_db = {-10.0, 0.0, 10.0, 20.0};
  for (auto _ : state) benchmark::DoNotOptimize(montecarlo::simulate(plan).coverage[1].mean);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.realizations));
}
BENCHMARK(BM_SimulateCase)->Arg(1)->Arg(7)->Unit(benchmark::kMillisecond);
