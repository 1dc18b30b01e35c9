#include <benchmark/benchmark.h>

#include "treewalk/oracles.hpp"
#include "treewalk/recurrence.hpp"
#include "treewalk/series.hpp"

namespace {

using namespace treewalk;

void BM_BuildTable(benchmark::State& state) {
  const auto n_max = static_cast<std::uint32_t>(state.range(0));
  const WeightConfig w = tree_weights(4);
  for (auto _ : state) benchmark::DoNotOptimize(build_table(w, n_max));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTable)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_BuildTableRational(benchmark::State& state) {
  const auto n_max = static_cast<std::uint32_t>(state.range(0));
  const WeightConfig w{Rat(1), Rat::normalize(1, 2), Rat(2), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(build_table(w, n_max));
}
BENCHMARK(BM_BuildTableRational)->RangeMultiplier(2)->Range(16, 256);

void BM_Sqrt(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const PowerSeries radicand =
      PowerSeries::constant(Rat(1), order) - PowerSeries::monomial(Rat(12), 2, order);
  for (auto _ : state) benchmark::DoNotOptimize(ps_sqrt(radicand));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sqrt)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_Inverse(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const PowerSeries f = ps_sqrt(PowerSeries::constant(Rat(1), order) -
                                PowerSeries::monomial(Rat(12), 2, order));
  for (auto _ : state) benchmark::DoNotOptimize(ps_inv(f));
}
BENCHMARK(BM_Inverse)->RangeMultiplier(2)->Range(16, 256);

void BM_GfFactored(benchmark::State& state) {
  const auto i = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf_f(5, i, 120));
}
BENCHMARK(BM_GfFactored)->Arg(0)->Arg(4)->Arg(16);

void BM_GfClosedForm(benchmark::State& state) {
  const auto i = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf_f_closed_form(5, i, 120));
}
BENCHMARK(BM_GfClosedForm)->Arg(0)->Arg(4)->Arg(16);

void BM_EnumerateDyck(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const WeightConfig w = tree_weights(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_dyck(w, 0, n));
}
BENCHMARK(BM_EnumerateDyck)->DenseRange(8, 20, 4);

void BM_TreeWalk(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tree_walk_count(3, 0, n));
}
BENCHMARK(BM_TreeWalk)->DenseRange(4, 12, 4);

void BM_FreeGroup(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(free_group_count(2, GroupWord(), n));
}
BENCHMARK(BM_FreeGroup)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
