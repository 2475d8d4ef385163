#include <benchmark/benchmark.h>

#include <vector>

#include "signdec/brauer.hpp"
#include "signdec/glue.hpp"
#include "signdec/sign_decomposition.hpp"
#include "signdec/type_a.hpp"

namespace {

void BM_CountBrauerLine(benchmark::State& state) {
  const auto q = signdec::brauer_line_rsz(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(signdec::count_stau(q));
}
BENCHMARK(BM_CountBrauerLine)->DenseRange(4, 16, 4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_CountBrauerCycle(benchmark::State& state) {
  const auto q = signdec::brauer_cycle_rsz(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(signdec::count_stau(q));
}
BENCHMARK(BM_CountBrauerCycle)->Arg(5)->Arg(9)->Arg(13)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_GluedHasseBrauerLine(benchmark::State& state) {
  const auto q = signdec::brauer_line_rsz(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto h = signdec::glued_hasse(q);
    benchmark::DoNotOptimize(h.arrows.data());
  }
}
BENCHMARK(BM_GluedHasseBrauerLine)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_TiltingModulesLinearA(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<signdec::Arrow> arrows;
  for (int i = 1; i < m; ++i) arrows.push_back({i, i + 1, {}});
  const auto p = signdec::PathQuiver::from_quiver(signdec::ValuedQuiver(m, arrows));
  for (auto _ : state) {
    auto mods = signdec::tilting_modules(p);
    benchmark::DoNotOptimize(mods.data());
  }
}
BENCHMARK(BM_TiltingModulesLinearA)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
