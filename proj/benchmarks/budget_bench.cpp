#include <benchmark/benchmark.h>

#include "qnoise/noise_budget.hpp"

static void RunBudget(benchmark::State& state) {
  qnoise::BudgetInputs in;
  in.grid = qnoise::FrequencyGrid::log_spaced(10.0, 10000.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto report = qnoise::run_budget(in);
    benchmark::DoNotOptimize(report);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(RunBudget)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

static void EtaSweep(benchmark::State& state) {
  const qnoise::BudgetInputs in;
  std::vector<double> etas(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < etas.size(); ++i) etas[i] = (i + 1.0) / static_cast<double>(etas.size());
  for (auto _ : state) {
    auto rows = qnoise::sweep(in, qnoise::SweepAxis::kEta, etas);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(EtaSweep)->Arg(10)->Arg(100);

static void SolveSixDb(benchmark::State& state) {
  const qnoise::BudgetInputs in;
  for (auto _ : state) benchmark::DoNotOptimize(qnoise::solve_efficiency_by_sweep(in, 6.0));
}
BENCHMARK(SolveSixDb);
