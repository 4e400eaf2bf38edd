#include <vector>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "kident/sweep.hpp"

namespace {

using kident::Execution;
using kident::Real;

const std::vector<Real> kGrid = {Real(1) / 10, Real(1) / 3, 1, 3, 10};

void identity(benchmark::State& state, Execution exec) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto cases = kident::identity_sweep(n_max, kGrid, kident::Precision{}, exec);
    benchmark::DoNotOptimize(cases.data());
  }
  state.counters["cases"] = static_cast<double>((n_max + 1) * kGrid.size());
  state.counters["threads"] = exec == Execution::parallel ? omp_get_max_threads() : 1;
}

void BM_IdentitySerial(benchmark::State& state) { identity(state, Execution::serial); }
void BM_IdentityParallel(benchmark::State& state) { identity(state, Execution::parallel); }

void BM_InnerGrid(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  std::vector<Real> t;
  for (int i = 0; i < 10; ++i) t.push_back(Real(2 * i + 1) / 20);
  for (auto _ : state) {
    auto cases = kident::inner_identity_sweep(kGrid, t, kident::Precision{}, exec);
    benchmark::DoNotOptimize(cases.data());
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_IdentitySerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentityParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InnerGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
