#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include <diracrose/diracrose.hpp>

#include "oracles.hpp"

using namespace diracrose;
using std::numbers::pi;

TEST_CASE("rng streams are reproducible and distinct") {
  const RngStream s(42, 7, StreamPurpose::spins);
  auto e1 = s.engine();
  auto e2 = s.engine();
  for (int i = 0; i < 100; ++i) CHECK(e1() == e2());

  auto other = RngStream(42, 8, StreamPurpose::spins).engine();
  auto purpose = RngStream(42, 7, StreamPurpose::bond_lengths).engine();
  auto e3 = s.engine();
  int same_index = 0, same_purpose = 0;
  for (int i = 0; i < 100; ++i) {
    const auto v = e3();
    same_index += v == other();
    same_purpose += v == purpose();
  }
  CHECK(same_index == 0);
  CHECK(same_purpose == 0);
  CHECK(s.substream(1).key() != s.substream(2).key());
}

TEST_CASE("uniform_open stays inside (0, 1) and has mean 1/2") {
  auto e = RngStream(3, 0, StreamPurpose::surrogate).engine();
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = e.uniform_open();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST_CASE("bond lengths lie in the admissible interval") {
  SUBCASE("B = 1") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto L = sample_bond_lengths(1, RngStream(seed, 0, StreamPurpose::bond_lengths));
      REQUIRE(L.size() == 1);
      CHECK(L[0] >= 0.5);
      CHECK(L[0] <= 1.5);
    }
  }
  SUBCASE("B = 10") {
    const auto L = sample_bond_lengths(10, RngStream(9, 3, StreamPurpose::bond_lengths));
    for (double l : L.values()) {
      CHECK(l >= 0.95);
      CHECK(l <= 1.05);
    }
    std::set<double> distinct(L.values().begin(), L.values().end());
    CHECK(distinct.size() == 10);
  }
  SUBCASE("deterministic") {
    const RngStream s(5, 2, StreamPurpose::bond_lengths);
    CHECK(sample_bond_lengths(101, s).values() == sample_bond_lengths(101, s).values());
  }
  SUBCASE("B = 0 is rejected") {
    CHECK_THROWS_AS(sample_bond_lengths(0, RngStream(1, 0, StreamPurpose::bond_lengths)),
                    InvalidArgument);
  }
}

TEST_CASE("BondLengths::checked enforces its invariants") {
  CHECK_NOTHROW(BondLengths::checked({0.99, 1.0, 1.01}));
  CHECK_THROWS_AS(BondLengths::checked({0.5, 1.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(BondLengths::checked({1.0, 1.0, 1.01}), InvalidArgument);
  CHECK_THROWS_AS(BondLengths::checked({}), InvalidArgument);
  const auto iv = BondLengths::interval(4);
  CHECK(iv[0] == doctest::Approx(0.875));
  CHECK(iv[1] == doctest::Approx(1.125));
}

TEST_CASE("spin angle map") {
  CHECK(spin_angle(Su2{1, 0, 0, 0}) == 0.0);
  // diag(i, -i)
  CHECK(spin_angle(Su2{0, 1, 0, 0}) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(spin_angle(Su2{-1, 0, 0, 0}) == doctest::Approx(pi));
  const Su2 w = Su2::from_matrix({{{0, 1}, {0, 0}, {0, 0}, {0, -1}}});
  CHECK(spin_angle(w) == doctest::Approx(pi / 2));
}

TEST_CASE("sampled SU(2) elements are unitary with unit determinant") {
  const auto cfg = sample_spin_configuration(200, RngStream(11, 0, StreamPurpose::spins));
  REQUIRE(cfg.size() == 200);
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const auto m = cfg.matrices()[i].matrix();
    const auto det = m[0] * m[3] - m[1] * m[2];
    CHECK(std::abs(det - 1.0) < 1e-12);
    // rows orthonormal
    CHECK(std::abs(std::norm(m[0]) + std::norm(m[1]) - 1.0) < 1e-12);
    CHECK(std::abs(m[0] * std::conj(m[2]) + m[1] * std::conj(m[3])) < 1e-12);
    const auto tr = m[0] + m[3];
    CHECK(std::abs(tr.imag()) < 1e-12);
    CHECK(std::abs(2.0 * std::cos(cfg.angles()[i]) - tr.real()) < 1e-12);
    CHECK(2.0 - std::abs(tr.real()) > kIdentityExclusion);
  }
}

TEST_CASE("E (Tr w)^2 = 1 under Haar measure") {
  auto e = RngStream(21, 0, StreamPurpose::spins).engine();
  const int n = 100000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = sample_haar_su2(e).trace().real();
    sum += t * t;
    sum2 += t * t * t * t;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / n);
  CHECK(std::abs(mean - 1.0) < 3.0 * se);
}

TEST_CASE("Haar angles follow the sine-squared law, traces the semicircle") {
  auto e = RngStream(77, 0, StreamPurpose::spins).engine();
  const std::size_t n = 100000;
  std::vector<double> theta(n), trace(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Su2 w = sample_haar_su2(e);
    theta[i] = spin_angle(w);
    trace[i] = w.trace().real();
  }
  const double d_theta = oracle::ks_statistic(theta, [](double x) { return (2 * x - std::sin(2 * x)) / (2 * pi); });
  const double d_trace = oracle::ks_statistic(trace, [](double x) {
    x = std::clamp(x, -2.0, 2.0);
    return 0.5 + x * std::sqrt(4 - x * x) / (4 * pi) + std::asin(x / 2) / pi;
  });
  CHECK(d_theta < oracle::ks_critical_1pct(n));
  CHECK(d_trace < oracle::ks_critical_1pct(n));
}
