#include <benchmark/benchmark.h>

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "bornsim/fft.hpp"
#include "bornsim/sg.hpp"
#include "bornsim/spin.hpp"

namespace {

void SpectralTransform(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  bornsim::Fft fft(n);
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::complex<double>> data(n);
  for (auto& x : data) x = {u(rng), u(rng)};
  for (auto _ : state) {
    fft.forward(data.data());
    fft.inverse(data.data());
    benchmark::DoNotOptimize(data.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SpectralTransform)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void SplitStepEvolution(benchmark::State& state) {
  bornsim::SgParams params;
  params.grid_points = static_cast<std::size_t>(state.range(0));
  params.grid_length = 64.0;
  const double dy =
      params.grid_length / static_cast<double>(params.grid_points);
  const double sigma0 = std::max(0.5, 8.0 * dy);  // resolution guard
  const bornsim::PacketState initial = bornsim::init_packet(
      bornsim::make_skew_state(1.5707963267948966), sigma0, params);
  const double chunk = 100.0 * params.dt;
  for (auto _ : state) {
    bornsim::PacketState packet = initial;
    packet = bornsim::evolve(std::move(packet), params, chunk);
    benchmark::DoNotOptimize(packet.plus().data());
  }
  state.SetItemsProcessed(state.iterations() * 100);  // steps per iteration
}
BENCHMARK(SplitStepEvolution)->Arg(512)->Arg(1024)->Arg(4096);

void FullDefaultRun(benchmark::State& state) {
  const bornsim::SgParams params;
  for (auto _ : state) {
    bornsim::PacketState packet = bornsim::init_packet(
        bornsim::make_skew_state(1.5707963267948966), 0.5, params);
    packet = bornsim::evolve(std::move(packet), params, params.t_final);
    benchmark::DoNotOptimize(bornsim::diagnostics(packet).pop_plus);
  }
}
BENCHMARK(FullDefaultRun)->Unit(benchmark::kMillisecond);

}  // namespace
