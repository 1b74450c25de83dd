#include <benchmark/benchmark.h>

#include <string>

#include "zdyn/entropy.hpp"
#include "zdyn/polytope.hpp"

using namespace zdyn;

namespace {

const char* const names[] = {"times2_times3", "ledrappier", "toral_sqrt2_sqrt5"};

}  // namespace

static void BM_LyapunovList(benchmark::State& state) {
  const ActionSpec spec = catalog(names[state.range(0)]);
  state.SetLabel(names[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(lyapunov_list(spec));
}
BENCHMARK(BM_LyapunovList)->DenseRange(0, 2);

static void BM_UnitBall(benchmark::State& state) {
  const LyapunovList list = lyapunov_list(catalog(names[state.range(0)]));
  state.SetLabel(names[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(unit_ball(list));
}
BENCHMARK(BM_UnitBall)->DenseRange(0, 2);

static void BM_FriedAverage(benchmark::State& state) {
  const LyapunovList list = lyapunov_list(catalog(names[state.range(0)]));
  state.SetLabel(names[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(fried_average_entropy(list));
}
BENCHMARK(BM_FriedAverage)->DenseRange(0, 2);

static void BM_DirectionalEntropy(benchmark::State& state) {
  const LyapunovList list = lyapunov_list(catalog("toral_sqrt2_sqrt5"));
  const Vector t = {0.3, -1.1, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(directional_entropy(list, t));
}
BENCHMARK(BM_DirectionalEntropy);

static void BM_RelationalEntropy(benchmark::State& state) {
  std::vector<std::pair<double, double>> pairs;
  for (long i = 0; i < state.range(0); ++i) pairs.emplace_back(2.0 + i, 3.0 + 2 * i);
  for (auto _ : state) benchmark::DoNotOptimize(relational_entropy(pairs));
}
BENCHMARK(BM_RelationalEntropy)->DenseRange(2, 16, 7);
