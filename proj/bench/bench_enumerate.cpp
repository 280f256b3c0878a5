#include <benchmark/benchmark.h>

#include "togliatti/classify.hpp"
#include "togliatti/family.hpp"
#include "togliatti/monomial.hpp"
#include "togliatti/polytope.hpp"

using namespace togliatti;

namespace {

SearchConfig config_for(int n) {
  SearchConfig c;
  c.n = n;
  return c;
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto c = config_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal_smooth_serial(c));
}
BENCHMARK(BM_EnumerateSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// Thread count is the second argument.
void BM_EnumerateParallel(benchmark::State& state) {
  auto c = config_for(static_cast<int>(state.range(0)));
  c.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal_smooth(c));
}
BENCHMARK(BM_EnumerateParallel)
    ->Args({3, 1})
    ->Args({3, 2})
    ->Args({3, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_SmoothnessSimplex(benchmark::State& state) {
  const auto pts = lattice_points_simplex(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(smoothness_check(pts));
}
BENCHMARK(BM_SmoothnessSimplex)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_FamilySweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (const auto& spec : valid_partitions(n))
      benchmark::DoNotOptimize(smoothness_check(family_system(spec).sys.apolar()));
}
BENCHMARK(BM_FamilySweep)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
