#include <benchmark/benchmark.h>

#include "tricirc/cycles.hpp"
#include "tricirc/generators.hpp"

using namespace tricirc;

static void BM_circumference_double_wheel(benchmark::State& state) {
  Triangulation t = double_wheel(static_cast<int>(state.range(0)) - 2);
  for (auto _ : state) benchmark::DoNotOptimize(circumference(t.emb()).length);
}
BENCHMARK(BM_circumference_double_wheel)->Arg(10)->Arg(14)->Arg(18)->Arg(22);

static void BM_circumference_extremal(benchmark::State& state) {
  Triangulation t = extremal_expand(double_wheel(static_cast<int>(state.range(0)) - 2));
  for (auto _ : state) benchmark::DoNotOptimize(circumference(t.emb()).length);
}
BENCHMARK(BM_circumference_extremal)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_longest_good_cycle(benchmark::State& state) {
  Triangulation t =
      random_essentially_4connected_triangulation(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(longest_good_cycle(t.emb()).length());
}
BENCHMARK(BM_longest_good_cycle)->Arg(14)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);
