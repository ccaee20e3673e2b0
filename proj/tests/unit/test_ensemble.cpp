#include <doctest.h>

#include <numbers>
#include <stdexcept>

#include <diracrose/diracrose.hpp>

using namespace diracrose;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.bonds = 7;
  c.eigenvalues = 3000;
  c.realisations = 6;
  c.master_seed = 12;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  auto c = small_config();
  CHECK_NOTHROW(c.validate());
  c.bonds = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = small_config();
  c.bin_width = 1.5;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = small_config();
  c.x_max = 0.5;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = small_config();
  c.fixed_lengths = {1.0, 1.0};
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = small_config();
  c.graph = GraphKind::neumann_star;
  c.fixed_angles = std::vector<double>(7, 1.0);
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("default skip scales with B^2") {
  auto c = small_config();
  CHECK(c.effective_skip() == kAutoSkipFactor * 49);
  c.skip = 0;
  CHECK(c.effective_skip() == 0);
}

TEST_CASE("realisation inputs follow the stream layout") {
  auto c = small_config();
  const auto a = realisation_inputs(c, 0);
  const auto b = realisation_inputs(c, 3);
  CHECK(a.lengths == b.lengths);  // lengths fixed per master seed
  CHECK(a.angles != b.angles);
  c.resample_lengths = true;
  CHECK(realisation_inputs(c, 0).lengths != realisation_inputs(c, 3).lengths);
  c = small_config();
  c.graph = GraphKind::neumann_star;
  CHECK(c.lengths_vary());
  CHECK(realisation_inputs(c, 1).angles.empty());
}

TEST_CASE("ensemble results do not depend on the thread count") {
  auto c = small_config();
  c.threads = 1;
  const auto h1 = ensemble_pair_correlation(c);
  c.threads = 4;
  const auto h4 = ensemble_pair_correlation(c);
  CHECK(h1.values == h4.values);
  CHECK(h1.realisation_count == 6);

  const std::vector<double> tau{0.1, 0.5};
  c.threads = 1;
  const auto k1 = ensemble_form_factor(c, tau, 200.0);
  c.threads = 3;
  const auto k3 = ensemble_form_factor(c, tau, 200.0);
  CHECK(k1.values == k3.values);
}

TEST_CASE("spectrum provenance and skip") {
  auto c = small_config();
  c.skip = 0;
  const auto full = realise_spectrum(c, 2);
  REQUIRE(full.provenance);
  CHECK(full.provenance->master_seed == 12);
  CHECK(full.provenance->stream_index == 2);
  c.skip = 100;
  const auto tail = realise_spectrum(c, 2);
  REQUIRE(tail.size() == c.eigenvalues);
  for (std::size_t i = 0; i + 100 < full.size(); ++i) CHECK(tail.roots[i] == full.roots[i + 100]);
}

TEST_CASE("parallel_map keeps order and rethrows the first failure") {
  const auto v = parallel_map(50, 4, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 50; ++i) CHECK(v[i] == i * i);
  CHECK_THROWS_WITH(parallel_map(20, 4,
                                 [](std::size_t i) -> int {
                                   if (i == 7 || i == 13) throw std::runtime_error("fail " + std::to_string(i));
                                   return 0;
                                 }),
                    "fail 7");
}

TEST_CASE("Poisson surrogate gives a flat pair correlation") {
  ExperimentConfig c;
  c.poisson_surrogate = true;
  c.eigenvalues = 100000;
  c.realisations = 4;
  c.threads = 4;
  const auto h = ensemble_pair_correlation(c);
  for (std::size_t b = 0; b < h.bins(); ++b) CHECK(std::abs(h.values[b] - 1.0) < 0.05);
}

TEST_CASE("describe records the protocol") {
  auto c = small_config();
  const auto kv = c.describe();
  bool has_skip = false;
  for (const auto& [k, v] : kv) has_skip |= k == "skip" && v == std::to_string(kAutoSkipFactor * 49);
  CHECK(has_skip);
}
