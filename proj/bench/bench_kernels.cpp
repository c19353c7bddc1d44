// Serial reference loops against their OpenMP counterparts.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "climate_stress/analytics.hpp"
#include "climate_stress/kernels.hpp"
#include "test_support.hpp"

using namespace climate_stress;

namespace {

const LinkedPortfolio& portfolio_of(std::size_t n) {
  static std::map<std::size_t, LinkedPortfolio> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto syn = testing::make_synthetic(n, 64, 7);
    it = cache.emplace(n, link_exposures(syn.portfolio, syn.hazards, syn.fragility, syn.registry))
             .first;
  }
  return it->second;
}

const Scenario& compound() {
  static const Scenario s = *builtin_scenario("compound");
  return s;
}

template <void (*Kernel)(const LinkedPortfolio&, const Scenario&, std::span<CreditRow>)>
void BM_Credit(benchmark::State& state) {
  const auto& linked = portfolio_of(static_cast<std::size_t>(state.range(0)));
  std::vector<CreditRow> rows(linked.size());
  for (auto _ : state) {
    Kernel(linked, compound(), rows);
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <void (*Kernel)(const LinkedPortfolio&, const Scenario&, std::span<ValuationRow>)>
void BM_Valuation(benchmark::State& state) {
  const auto& linked = portfolio_of(static_cast<std::size_t>(state.range(0)));
  std::vector<ValuationRow> rows(linked.size());
  for (auto _ : state) {
    Kernel(linked, compound(), rows);
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RunScenario(benchmark::State& state) {
  const auto& linked = portfolio_of(static_cast<std::size_t>(state.range(0)));
  auto exec = state.range(1) ? Execution::parallel : Execution::serial;
  for (auto _ : state) {
    auto out = run_scenario(linked, compound(), 10, exec);
    benchmark::DoNotOptimize(out.result.total_el);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Credit<kernels::credit_serial>)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_Credit<kernels::credit_parallel>)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_Valuation<kernels::valuation_serial>)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_Valuation<kernels::valuation_parallel>)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_RunScenario)->Args({100'000, 0})->Args({100'000, 1});

BENCHMARK_MAIN();
