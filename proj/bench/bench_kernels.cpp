// Serial vs OpenMP drivers for the channel-constant search and fuzzing.
//
//   ./qdpi_bench --benchmark_filter=Qutrit

#include <benchmark/benchmark.h>

#include "qdpi/channel.hpp"
#include "qdpi/channel_constant.hpp"
#include "qdpi/fuzz.hpp"

namespace {

qdpi::Execution execution(const benchmark::State& state) {
  return state.range(0) == 0 ? qdpi::Execution::Serial : qdpi::Execution::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_ChannelConstantQubit(benchmark::State& state) {
  const qdpi::KrausChannel s = qdpi::random_channel(2, 2, 3, 11);
  qdpi::OptimizationBudget budget;
  budget.execution = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(qdpi::c_of_channel(s, budget).value);
  label(state);
}
BENCHMARK(BM_ChannelConstantQubit)->Arg(0)->Arg(1)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_ChannelConstantQutrit(benchmark::State& state) {
  const qdpi::KrausChannel s = qdpi::random_channel(3, 3, 3, 12);
  qdpi::OptimizationBudget budget;
  budget.starts = 256;
  budget.execution = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(qdpi::c_of_channel(s, budget).value);
  label(state);
}
BENCHMARK(BM_ChannelConstantQutrit)->Arg(0)->Arg(1)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_FuzzDpi(benchmark::State& state) {
  qdpi::FuzzSettings s;
  s.inequality = qdpi::InequalityKind::Dpi;
  s.trials = 400;
  s.dims = {2, 3};
  s.execution = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(qdpi::fuzz(s).summary.violations);
  label(state);
}
BENCHMARK(BM_FuzzDpi)->Arg(0)->Arg(1)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_FuzzStrengthenedDpi(benchmark::State& state) {
  qdpi::FuzzSettings s;
  s.inequality = qdpi::InequalityKind::StrengthenedDpi;
  s.trials = 64;
  s.dims = {2};
  s.execution = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(qdpi::fuzz(s).summary.violations);
  label(state);
}
BENCHMARK(BM_FuzzStrengthenedDpi)->Arg(0)->Arg(1)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
