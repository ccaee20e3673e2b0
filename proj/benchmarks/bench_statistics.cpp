#include <benchmark/benchmark.h>

#include <vector>

#include <diracrose/diracrose.hpp>

using namespace diracrose;

namespace {

UnfoldedSpectrum poisson(std::size_t n) {
  auto e = RngStream(9, 0, StreamPurpose::surrogate).engine();
  std::vector<double> x(n);
  double t = 0.0;
  for (auto& v : x) v = (t += -std::log(e.uniform_open()));
  return unfolded_points(std::move(x));
}

void BM_PairCorrelation(benchmark::State& state) {
  const auto s = poisson(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pair_correlation(s, 0.05, 10.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PairCorrelation)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_FormFactor(benchmark::State& state) {
  const auto s = poisson(20000);
  std::vector<double> tau;
  for (int i = 1; i <= 60; ++i) tau.push_back(0.05 * i);
  for (auto _ : state) benchmark::DoNotOptimize(empirical_form_factor(s, tau, 500.0));
}
BENCHMARK(BM_FormFactor)->Unit(benchmark::kMillisecond);

void BM_HaarSample(benchmark::State& state) {
  auto e = RngStream(2, 0, StreamPurpose::spins).engine();
  for (auto _ : state) benchmark::DoNotOptimize(sample_haar_su2(e));
}
BENCHMARK(BM_HaarSample);

}  // namespace
