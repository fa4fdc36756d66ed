#include <benchmark/benchmark.h>

#include "bornsim/branch.hpp"

namespace {

using bornsim::BigRational;
using bornsim::BranchConfig;
using bornsim::BranchMode;

void ClosedFormExact(benchmark::State& state) {
  const int runs = static_cast<int>(state.range(0));
  const BranchConfig config{runs, 1.0 / 3.0, BranchMode::weighted,
                            BigRational(1, 3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bornsim::closed_form(config).counts.data());
  }
}
BENCHMARK(ClosedFormExact)->Arg(10)->Arg(40)->Arg(200);

void ClosedFormFloat(benchmark::State& state) {
  const int runs = static_cast<int>(state.range(0));
  const BranchConfig config{runs, 0.37, BranchMode::weighted, std::nullopt};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bornsim::closed_form(config).counts.data());
  }
}
BENCHMARK(ClosedFormFloat)->Arg(10)->Arg(40)->Arg(200);

void EnumerateExact(benchmark::State& state) {
  const int runs = static_cast<int>(state.range(0));
  const BranchConfig config{runs, 1.0 / 3.0, BranchMode::weighted,
                            BigRational(1, 3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bornsim::enumerate_tree(config).counts.data());
  }
  state.SetComplexityN(1LL << runs);
}
BENCHMARK(EnumerateExact)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void EnumerateFloat(benchmark::State& state) {
  const int runs = static_cast<int>(state.range(0));
  const BranchConfig config{runs, 0.37, BranchMode::weighted, std::nullopt};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bornsim::enumerate_tree(config).counts.data());
  }
}
BENCHMARK(EnumerateFloat)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void SampleHistories(benchmark::State& state) {
  const BranchConfig config{10, 0.75, BranchMode::weighted, std::nullopt};
  const auto count = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bornsim::sample_histories(config, count, 42).data());
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(SampleHistories)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
