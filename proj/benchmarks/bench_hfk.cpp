#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>

#include "hfk/complex.hpp"
#include "hfk/gf2.hpp"
#include "hfk/grid.hpp"
#include "hfk/homology.hpp"
#include "hfk/invariants.hpp"

namespace {

const char* const kGrids[] = {"trefoil6.grid", "figure_eight6.grid", "five_two7.grid", "torus2_5_7.grid"};

hfk::ValidatedGrid load(const std::string& name) {
  return hfk::load_grid(std::filesystem::path(HFK_BENCH_CORPUS) / name);
}

hfk::EngineOptions single_thread() {
  hfk::EngineOptions o;
  o.threads = 1;
  return o;
}

// Busiest Alexander level of a grid.
int widest_level(const hfk::GradingTables& t) {
  int best = 0;
  std::size_t most = 0;
  for (int a = -20; a <= 20; ++a) {
    const auto n = hfk::generators_in_level(t, a, single_thread()).size();
    if (n > most) {
      most = n;
      best = a;
    }
  }
  return best;
}

void BM_Enumerate(benchmark::State& state) {
  const auto g = load(kGrids[state.range(0)]);
  const hfk::GradingTables t(g);
  std::size_t count = 0;
  for (auto _ : state) {
    count = hfk::generators_in_window(t, -1000, 1000, single_thread()).size();
    benchmark::DoNotOptimize(count);
  }
  state.SetLabel(kGrids[state.range(0)]);
  state.counters["generators"] = static_cast<double>(count);
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_BottomWindowEnumerate(benchmark::State& state) {
  const auto g = load("granny9.grid");
  const hfk::GradingTables t(g);
  for (auto _ : state) benchmark::DoNotOptimize(hfk::generators_in_level(t, -20, single_thread()));
}
BENCHMARK(BM_BottomWindowEnumerate)->Unit(benchmark::kMillisecond);

void BM_Boundary(benchmark::State& state) {
  const auto g = load(kGrids[state.range(0)]);
  const hfk::GradingTables t(g);
  const int level = widest_level(t);
  const auto gens = hfk::generators_in_level(t, level, single_thread());
  for (auto _ : state) benchmark::DoNotOptimize(hfk::build_level_complex(t, level, gens, single_thread()));
  state.SetLabel(kGrids[state.range(0)]);
  state.counters["generators"] = static_cast<double>(gens.size());
}
BENCHMARK(BM_Boundary)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state) {
  const auto g = load(kGrids[state.range(0)]);
  const hfk::GradingTables t(g);
  const auto level = hfk::boundary_at_level(t, widest_level(t), single_thread());
  for (auto _ : state) benchmark::DoNotOptimize(hfk::rank(level.boundary));
  state.SetLabel(kGrids[state.range(0)]);
  state.counters["nnz"] = static_cast<double>(level.boundary.nnz());
}
BENCHMARK(BM_Rank)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_LevelHomology(benchmark::State& state) {
  const auto g = load(kGrids[state.range(0)]);
  const hfk::GradingTables t(g);
  const auto level = hfk::boundary_at_level(t, widest_level(t), single_thread());
  for (auto _ : state) benchmark::DoNotOptimize(hfk::level_homology(level));
  state.SetLabel(kGrids[state.range(0)]);
}
BENCHMARK(BM_LevelHomology)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_BottomGroup(benchmark::State& state) {
  const auto g = load(state.range(0) == 0 ? "granny9.grid" : "kinoshita_terasaka11.grid");
  for (auto _ : state) benchmark::DoNotOptimize(hfk::bottom_group(g, single_thread()));
  state.SetLabel(state.range(0) == 0 ? "granny9" : "kinoshita_terasaka11");
}
BENCHMARK(BM_BottomGroup)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
