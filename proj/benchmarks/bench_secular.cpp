#include <benchmark/benchmark.h>

#include <diracrose/diracrose.hpp>

using namespace diracrose;

namespace {

struct Inputs {
  std::vector<double> lengths, angles;
};

Inputs inputs(std::size_t bonds) {
  return {sample_bond_lengths(bonds, RngStream(1, 0, StreamPurpose::bond_lengths)).values(),
          sample_spin_configuration(bonds, RngStream(1, 0, StreamPurpose::spins)).angles()};
}

void BM_SecularEval(benchmark::State& state) {
  const auto in = inputs(static_cast<std::size_t>(state.range(0)));
  double k = 1000.123;
  for (auto _ : state) {
    benchmark::DoNotOptimize(secular_eval(k, in.lengths, in.angles));
    k += 1e-7;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SecularEval)->Arg(3)->Arg(21)->Arg(101);

void BM_DiracRoseSpectrum(benchmark::State& state) {
  const auto in = inputs(static_cast<std::size_t>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(dirac_rose_spectrum(in.lengths, in.angles, n));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_DiracRoseSpectrum)->Args({21, 20000})->Args({101, 20000})->Unit(benchmark::kMillisecond);

void BM_NeumannStarSpectrum(benchmark::State& state) {
  const auto in = inputs(101);
  for (auto _ : state) benchmark::DoNotOptimize(neumann_star_spectrum(in.lengths, 20000));
  state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_NeumannStarSpectrum)->Unit(benchmark::kMillisecond);

}  // namespace
