#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "fiscalstab/balance.hpp"
#include "fiscalstab/effectiveness.hpp"
#include "fiscalstab/logistic.hpp"
#include "fiscalstab/taxonomy.hpp"
#include "fiscalstab/volatility.hpp"

namespace {

void BM_Decompose(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.8, 1.2);
  std::vector<fiscalstab::balance::FiscalObservation> obs;
  for (int i = 0; i < 1024; ++i) obs.push_back({i, 1000.0 * u(rng), 1000.0, 350.0 * u(rng), 360.0});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fiscalstab::balance::decompose(obs[i++ & 1023], {1.1, 0.1}));
  }
}
BENCHMARK(BM_Decompose);

void BM_ClassifyStationary(benchmark::State& state) {
  const auto p = fiscalstab::volatility::VolParams::from_cube_roots(1.3, 0.7, 9.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(fiscalstab::volatility::classify_stationary(p));
}
BENCHMARK(BM_ClassifyStationary);

void BM_Classify(benchmark::State& state) {
  fiscalstab::taxonomy::StabiliserDescriptor d;
  d.is_institutional_device = d.counters_change = d.overproportional = true;
  d.reduces_gap_actual_desired = d.controls_gdp_change = d.aims_reduce_gdp_volatility = true;
  d.formal_normative = true;
  d.action_mode = fiscalstab::taxonomy::ActionMode::implicit_action;
  d.control_shape = fiscalstab::taxonomy::ControlShape::nonlinear;
  d.target = fiscalstab::taxonomy::Target::revenue;
  for (auto _ : state) benchmark::DoNotOptimize(fiscalstab::taxonomy::classify_stabiliser(d));
}
BENCHMARK(BM_Classify);

// Wage-scenario trajectory: large initial base relaxing toward 1.
void BM_LogisticNumeric(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fiscalstab::effectiveness::base_logistic_numeric(172055.3, 2014.0, 2020.0, step));
  }
}
BENCHMARK(BM_LogisticNumeric)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_OptimalityCheck(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::vector<double> grid, k;
  for (int i = 0; i < n; ++i) {
    grid.push_back(6.0 * i / (n - 1));
    k.push_back(1.0 + 0.3 * std::sin(grid.back()));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fiscalstab::effectiveness::optimality_condition_check(k, 1.0, 0.0, grid));
  }
}
BENCHMARK(BM_OptimalityCheck)->Arg(64)->Arg(1024)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
