#include <benchmark/benchmark.h>

#include "zdyn/periodic.hpp"

using namespace zdyn;

static void BM_FixCountRational(benchmark::State& state) {
  const ActionSpec a = catalog("times2_times3");
  const long k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fix_count(a, {-k, k}));
}
BENCHMARK(BM_FixCountRational)->RangeMultiplier(4)->Range(4, 1024);

static void BM_FixCountLedrappier(benchmark::State& state) {
  const ActionSpec b = catalog("ledrappier");
  const long k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fix_count(b, {k, k / 2 + 1}));
}
BENCHMARK(BM_FixCountLedrappier)->RangeMultiplier(4)->Range(4, 1024);

static void BM_FixCountToral(benchmark::State& state) {
  const ActionSpec t = catalog("toral_sqrt2_sqrt5");
  const long k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fix_count(t, {k, -k, 1}));
}
BENCHMARK(BM_FixCountToral)->RangeMultiplier(4)->Range(4, 256);

// logN is the benchmark argument
static void BM_HullExperiment(benchmark::State& state) {
  const ActionSpec a = catalog("times2_times3");
  ScanOptions options;
  options.workers = 1;
  const double logN = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hull_experiment(a, logN, 0.9, options));
}
BENCHMARK(BM_HullExperiment)->Arg(10)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_LatticeHull3d(benchmark::State& state) {
  const long r = state.range(0);
  std::vector<std::vector<long>> pts;
  for (long x = -r; x <= r; ++x) {
    for (long y = -r; y <= r; ++y) {
      for (long z = -r; z <= r; ++z) {
        if (x * x + y * y + z * z <= r * r) pts.push_back({x, y, z});
      }
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(lattice_convex_hull(3, pts));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}
BENCHMARK(BM_LatticeHull3d)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
