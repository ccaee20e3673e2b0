#include <benchmark/benchmark.h>

#include <diracrose/diracrose.hpp>

using namespace diracrose;

namespace {

void BM_Hyp1f1(benchmark::State& state) {
  const double z = -static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyp1f1(1.5, 3.0, z));
}
BENCHMARK(BM_Hyp1f1)->Arg(1)->Arg(20)->Arg(200);

void BM_SmallXIntegrand(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(small_x_integrand(x));
    x = x > 30.0 ? 0.1 : x + 0.37;
  }
}
BENCHMARK(BM_SmallXIntegrand);

void BM_ConstantQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(small_x_constant_quadrature());
}
BENCHMARK(BM_ConstantQuadrature)->Unit(benchmark::kMillisecond);

}  // namespace
