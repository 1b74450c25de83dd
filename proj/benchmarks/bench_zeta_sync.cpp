#include <benchmark/benchmark.h>

#include "zdyn/sync.hpp"
#include "zdyn/zeta.hpp"

using namespace zdyn;

static void BM_ZetaSeries(benchmark::State& state) {
  const ActionSpec a = catalog("times2_times3");
  const auto K = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_series(a, {-3, 2}, K));
}
BENCHMARK(BM_ZetaSeries)->Arg(8)->Arg(16)->Arg(32);

static void BM_OmegaEnvelope(benchmark::State& state) {
  const LyapunovList list = lyapunov_list(catalog("times2_times3"));
  const double radius = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(omega_lower_envelope(list, omega_set(radius), 360));
}
BENCHMARK(BM_OmegaEnvelope)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_WeakSyncCount(benchmark::State& state) {
  const SyncFamily f = make_sync_family(catalog("times2_times3"), {2, 3});
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weak_sync_count(f, 2, 3, n));
}
BENCHMARK(BM_WeakSyncCount)->RangeMultiplier(4)->Range(16, 4096);

static void BM_RstarTrace(benchmark::State& state) {
  const SyncFamily f = default_sync_family(catalog("sync_1_2_3"));
  for (auto _ : state) benchmark::DoNotOptimize(rstar_trace(f, static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_RstarTrace)->Arg(20)->Arg(200);
