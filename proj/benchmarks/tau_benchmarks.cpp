#include "tau/denominators.hpp"
#include "tau/enumerate.hpp"
#include "tau/identities.hpp"
#include "tau/npoint.hpp"
#include "tau/tau_engine.hpp"

#include <benchmark/benchmark.h>

using namespace tau;

// Cold recursion: every bracket of genus g with n points, fresh table each iteration.
static void BM_DvvColdSweep(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    TauEngine engine;
    Rational acc = 0;
    for_each_multiset_with_sum(n, 3L * g - 3 + n, 0, [&](const std::vector<int>& d) { acc += engine.bracket(g, d); });
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_DvvColdSweep)->Args({4, 3})->Args({6, 3})->Args({6, 4})->Unit(benchmark::kMillisecond);

static void BM_DvvWithoutMemo(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TauEngine engine(EngineOptions{Pivot::Largest, false});
    benchmark::DoNotOptimize(engine.bracket(g, {2, 3 * g - 3}));
  }
}
BENCHMARK(BM_DvvWithoutMemo)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_NPointFunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int g = static_cast<int>(state.range(1));
  for (auto _ : state) {
    NPointEngine engine(g);
    benchmark::DoNotOptimize(engine.function(n).max_genus());
  }
}
BENCHMARK(BM_NPointFunction)->Args({2, 12})->Args({2, 50})->Args({3, 12})->Args({4, 6})->Unit(benchmark::kMillisecond);

static void BM_IdentitySweep(benchmark::State& state) {
  const auto id = static_cast<IdentityId>(state.range(0));
  SweepBounds b;
  b.gmax = 6;
  b.nmax = 4;
  for (auto _ : state) {
    TauEngine engine;
    benchmark::DoNotOptimize(verify_sweep(engine, id, b, 1).size());
  }
  state.SetLabel(std::string(identity_name(id)));
}
BENCHMARK(BM_IdentitySweep)
    ->Arg(static_cast<int>(IdentityId::eq4))
    ->Arg(static_cast<int>(IdentityId::eq5))
    ->Unit(benchmark::kMillisecond);

static void BM_KappaLcm(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    DenominatorStats stats(TauEngine{}, 1);
    benchmark::DoNotOptimize(stats.kappa_lcm(g).value);
  }
}
BENCHMARK(BM_KappaLcm)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
