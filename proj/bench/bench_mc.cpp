#include <benchmark/benchmark.h>

#include "masi/coherence.hpp"
#include "masi/correlation.hpp"
#include "masi/states.hpp"

using namespace masi;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::Serial : Execution::Parallel; }

void coherence_haar(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(1));
  const SkewContext ctx(random_mixed_state(d, 1, 0), MonotoneFunction::wigner_yanase());
  for (auto _ : state) benchmark::DoNotOptimize(average_coherence_haar_mc(ctx, 4096, 0, mode(state)));
  state.SetItemsProcessed(state.iterations() * 4096);
}

void correlation_haar(benchmark::State& state) {
  const std::size_t da = static_cast<std::size_t>(state.range(1));
  const BipartiteState bp(random_mixed_state(da * 2, 2, 0), da, 2);
  const CorrelationContext cc(bp, MonotoneFunction::sld());
  for (auto _ : state) benchmark::DoNotOptimize(average_correlation_haar_mc(cc, 2048, 0, mode(state)));
  state.SetItemsProcessed(state.iterations() * 2048);
}

void correlation_twirl(benchmark::State& state) {
  const std::size_t da = static_cast<std::size_t>(state.range(1));
  const BipartiteState bp(random_mixed_state(da * 2, 3, 0), da, 2);
  const CorrelationContext cc(bp, MonotoneFunction::wigner_yanase());
  for (auto _ : state) benchmark::DoNotOptimize(average_correlation_twirl_mc(cc, 2048, 0, mode(state)));
  state.SetItemsProcessed(state.iterations() * 2048);
}

void mc_kernel(benchmark::State& state) {
  const SampleFn fn = [](std::int64_t i) {
    const ComplexMatrix u = haar_unitary(4, 9, static_cast<std::uint64_t>(i));
    return std::norm(u(0, 0));
  };
  for (auto _ : state) {
    if (state.range(0) == 0) {
      benchmark::DoNotOptimize(mc_estimate_serial(8192, fn));
    } else {
      benchmark::DoNotOptimize(mc_estimate(8192, fn));
    }
  }
  state.SetItemsProcessed(state.iterations() * 8192);
}

}  // namespace

BENCHMARK(coherence_haar)->ArgsProduct({{0, 1}, {2, 3, 5}})->ArgNames({"parallel", "d"})->Unit(benchmark::kMillisecond);
BENCHMARK(correlation_haar)->ArgsProduct({{0, 1}, {2, 3, 5}})->ArgNames({"parallel", "dA"})->Unit(benchmark::kMillisecond);
BENCHMARK(correlation_twirl)->ArgsProduct({{0, 1}, {2, 3, 5}})->ArgNames({"parallel", "dA"})->Unit(benchmark::kMillisecond);
BENCHMARK(mc_kernel)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
