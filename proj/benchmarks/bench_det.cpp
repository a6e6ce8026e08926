#include <benchmark/benchmark.h>

#include "wsec/invariants.hpp"
#include "wsec/linalg.hpp"
#include "wsec/verify.hpp"

namespace {

// Generic minor of (k, k+1, k), of size 2k + 1.
void BM_GenericInvariant(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const wsec::Tableau t = wsec::build_tableau(wsec::Composition({k, k + 1, k}));
  const wsec::NeighborPair outer{1, 3, k};
  for (auto _ : state) benchmark::DoNotOptimize(wsec::generic_invariant(t, outer, 64));
  state.SetLabel("size " + std::to_string(wsec::minor_size(t, outer)));
}
BENCHMARK(BM_GenericInvariant)->DenseRange(1, 4);

void BM_Restriction(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<int> parts{k};
  for (int i = 0; i < k; ++i) parts.push_back(k + 1);
  parts.push_back(k);
  const wsec::LineSet ls = wsec::construct(wsec::Composition(parts), wsec::Step::moved);
  const wsec::Section sec = wsec::extract_section(ls);
  const wsec::NeighborPair outer{1, static_cast<int>(parts.size()), k};
  const wsec::MinorSpec ms = wsec::minor_spec(ls.tableau(), outer);
  for (auto _ : state) benchmark::DoNotOptimize(wsec::restrict_to_section(ls.tableau(), ms, sec));
  state.SetLabel("size " + std::to_string(ms.size));
}
BENCHMARK(BM_Restriction)->DenseRange(1, 4);

void BM_DensityRank(benchmark::State& state) {
  std::vector<int> parts;
  for (int i = 0; i < state.range(0); ++i) parts.push_back(i % 3 + 1);
  const wsec::LineSet ls = wsec::construct(wsec::Composition(parts), wsec::Step::labelled);
  for (auto _ : state) benchmark::DoNotOptimize(wsec::density_check(ls));
  state.SetLabel("n " + std::to_string(ls.tableau().n()));
}
BENCHMARK(BM_DensityRank)->DenseRange(3, 9, 3);

}  // namespace
