#include <benchmark/benchmark.h>

#include "wsec/pipeline.hpp"

namespace {

void BM_Construct(benchmark::State& state) {
  const wsec::Composition c({2, 3, 1, 1, 1, 3, 3, 1, 1, 1, 1, 3, 3, 3, 1, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(wsec::construct(c, wsec::Step::moved));
}
BENCHMARK(BM_Construct);

void BM_Sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wsec::run_sweep(n, {}, 1));
  state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << n) - 1));
}
BENCHMARK(BM_Sweep)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

}  // namespace
