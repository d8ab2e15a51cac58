#include <benchmark/benchmark.h>

#include "asmloops/biject.hpp"
#include "asmloops/enumerate.hpp"
#include "asmloops/inversion.hpp"
#include "asmloops/loops.hpp"

using namespace asmloops;

namespace {

const std::vector<Asm>& asms(int n) {
  static std::vector<std::vector<Asm>> cache(kMaxVerifySize + 1);
  if (cache[n].empty()) cache[n] = enumerate_asms(n);
  return cache[n];
}

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    EnumerationCursor c(n);
    while (auto h = c.next()) benchmark::DoNotOptimize(*h);
    state.counters["items"] = static_cast<double>(c.yielded());
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_InvDirect(benchmark::State& state) {
  const auto& all = asms(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long s = 0;
    for (const auto& a : all) s += inv_direct(a);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * all.size());
}
BENCHMARK(BM_InvDirect)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_InvTheorem(benchmark::State& state) {
  const auto& all = asms(static_cast<int>(state.range(0)));
  std::vector<DyckIsland> islands;
  for (const auto& a : all) islands.push_back(asm_to_island(a));
  for (auto _ : state) {
    long s = 0;
    for (const auto& d : islands) s += inv_theorem(d).first;
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * islands.size());
}
BENCHMARK(BM_InvTheorem)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_ExtractBoundaries(benchmark::State& state) {
  const auto& all = asms(static_cast<int>(state.range(0)));
  std::vector<DyckIsland> islands;
  for (const auto& a : all) islands.push_back(asm_to_island(a));
  for (auto _ : state) {
    for (const auto& d : islands) benchmark::DoNotOptimize(extract_boundaries(d));
  }
  state.SetItemsProcessed(state.iterations() * islands.size());
}
BENCHMARK(BM_ExtractBoundaries)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
