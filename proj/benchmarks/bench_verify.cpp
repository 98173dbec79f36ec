#include <benchmark/benchmark.h>

#include "tricirc/connectivity.hpp"
#include "tricirc/discharging.hpp"
#include "tricirc/generators.hpp"

using namespace tricirc;

static void BM_separating_triangles(benchmark::State& state) {
  Triangulation t =
      random_essentially_4connected_triangulation(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(separating_triangles(t).size());
}
BENCHMARK(BM_separating_triangles)->Arg(20)->Arg(40);

static void BM_three_cuts_brute_force(benchmark::State& state) {
  Triangulation t =
      random_essentially_4connected_triangulation(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(three_cuts(t.emb()).size());
}
BENCHMARK(BM_three_cuts_brute_force)->Arg(20)->Arg(40);

static void BM_verify_bound(benchmark::State& state) {
  Triangulation t =
      random_essentially_4connected_triangulation(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bound(t).all_pass());
}
BENCHMARK(BM_verify_bound)->Arg(14)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

static void BM_generator(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        random_essentially_4connected_triangulation(static_cast<int>(state.range(0)), seed++)
            .vertex_count());
}
BENCHMARK(BM_generator)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
