#include "moebius/closed_forms.hpp"
#include "moebius/graph.hpp"
#include "moebius/ladder.hpp"
#include "moebius/verify.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>

namespace {

using moebius::build_ladder;

void BM_BuildLadder(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_ladder({m, 3}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildLadder)->Range(64, 16384)->Complexity();

// The all-pairs sweep: one BFS per source, rows filled in parallel for
// larger graphs.
void BM_AllPairsDistances(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const auto ladder = build_ladder({m, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(moebius::distance_matrix(ladder));
  }
  state.SetComplexityN(3 * (state.range(0) - 1));
}
BENCHMARK(BM_AllPairsDistances)->RangeMultiplier(4)->Range(16, 1024)
    ->Unit(benchmark::kMicrosecond)->Complexity();

void BM_HosoyaPolynomial(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const auto ladder = build_ladder({m, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(moebius::hosoya_polynomial(ladder));
  }
  state.SetComplexityN(3 * (state.range(0) - 1));
}
BENCHMARK(BM_HosoyaPolynomial)->RangeMultiplier(4)->Range(16, 1024)
    ->Unit(benchmark::kMicrosecond)->Complexity();

void BM_BlockAssembly(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(moebius::assemble_block_distance_matrix(m));
  }
}
BENCHMARK(BM_BlockAssembly)->RangeMultiplier(4)->Range(16, 1024)
    ->Unit(benchmark::kMicrosecond);

void BM_ClosedFormCoefficients(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(moebius::hosoya_coeffs_closed(m));
  }
}
BENCHMARK(BM_ClosedFormCoefficients)->Range(16, 16384);

void BM_VerifySweep(benchmark::State& state) {
  const auto top = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(moebius::sweep(4, top));
  }
}
BENCHMARK(BM_VerifySweep)->Arg(16)->Arg(32)->Arg(61)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
