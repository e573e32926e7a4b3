// Serial reference vs OpenMP kernels.

#include "penta/bounds.hpp"
#include "penta/series.hpp"
#include "penta/verify.hpp"

#include <benchmark/benchmark.h>

using namespace penta;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_MTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(m_table(12, static_cast<unsigned>(state.range(1)), mode(state)));
  label(state);
}
BENCHMARK(BM_MTable)->ArgsProduct({{0, 1}, {6, 24}})->Unit(benchmark::kMillisecond);

void BM_Advance(benchmark::State& state) {
  const auto levels = generate(6, static_cast<std::size_t>(state.range(1)));
  const SeriesLevel& top = levels.back();
  for (auto _ : state) benchmark::DoNotOptimize(advance(top.f, top.i, top.row[0], mode(state)));
  label(state);
}
BENCHMARK(BM_Advance)->ArgsProduct({{0, 1}, {200, 800}})->Unit(benchmark::kMillisecond);

void BM_SeriesTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(series_table(10, 6, mode(state)));
  label(state);
}
BENCHMARK(BM_SeriesTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifySuite(benchmark::State& state) {
  VerifyScope scope;
  scope.apply("bigger_n.r_max=10,compute_r.max_sum=12,stepwise_n.degrees=8,stepwise_n_levels.d_max=10");
  for (auto _ : state) benchmark::DoNotOptimize(run_all(scope, mode(state)));
  label(state);
}
BENCHMARK(BM_VerifySuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
