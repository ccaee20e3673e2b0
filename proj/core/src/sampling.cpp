#include "diracrose/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "diracrose/errors.hpp"

namespace diracrose {

namespace {

bool has_close_pair(std::vector<double> lengths) {
  std::sort(lengths.begin(), lengths.end());
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    if (lengths[i] - lengths[i - 1] < kMinLengthSeparation) return true;
  }
  return false;
}

}  // namespace

std::array<double, 2> BondLengths::interval(std::size_t bonds) {
  if (bonds == 0) throw InvalidArgument("bond count must be positive");
  const double half_width = 1.0 / (2.0 * static_cast<double>(bonds));
  return {1.0 - half_width, 1.0 + half_width};
}

BondLengths BondLengths::checked(std::vector<double> lengths) {
  const auto [lo, hi] = interval(lengths.size());
  for (std::size_t b = 0; b < lengths.size(); ++b) {
    if (!(lengths[b] >= lo && lengths[b] <= hi)) {
      std::ostringstream msg;
      msg << "bond length " << b << " = " << lengths[b] << " outside [" << lo << ", " << hi
          << "]";
      throw InvalidArgument(msg.str());
    }
  }
  if (has_close_pair(lengths)) throw InvalidArgument("bond lengths are not pairwise distinct");
  return BondLengths(std::move(lengths));
}

double BondLengths::total() const noexcept {
  double sum = 0.0;
  for (double l : lengths_) sum += l;
  return sum;
}

std::array<std::complex<double>, 4> Su2::matrix() const {
  return {std::complex<double>(a, b), std::complex<double>(c, d),
          std::complex<double>(-c, d), std::complex<double>(a, -b)};
}

std::complex<double> Su2::determinant() const {
  const auto m = matrix();
  return m[0] * m[3] - m[1] * m[2];
}

Su2 Su2::from_matrix(const std::array<std::complex<double>, 4>& m) {
  return Su2{m[0].real(), m[0].imag(), m[1].real(), m[1].imag()};
}

double spin_angle(const Su2& w) {
  return std::acos(std::clamp(w.trace().real() / 2.0, -1.0, 1.0));
}

SpinConfiguration::SpinConfiguration(std::vector<Su2> matrices)
    : matrices_(std::move(matrices)) {
  angles_.reserve(matrices_.size());
  for (const auto& w : matrices_) angles_.push_back(spin_angle(w));
}

BondLengths sample_bond_lengths(std::size_t bonds, RngStream rng) {
  const auto [lo, hi] = BondLengths::interval(bonds);
  auto engine = rng.engine();
  std::vector<double> lengths(bonds);
  do {
    for (auto& l : lengths) l = lo + (hi - lo) * engine.uniform_open();
  } while (has_close_pair(lengths));
  return BondLengths::checked(std::move(lengths));
}

Su2 sample_haar_su2(CounterEngine& engine) {
  std::normal_distribution<double> normal;
  for (;;) {
    const double q0 = normal(engine), q1 = normal(engine);
    const double q2 = normal(engine), q3 = normal(engine);
    const double norm = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    if (norm > 1e-300) return Su2{q0 / norm, q1 / norm, q2 / norm, q3 / norm};
  }
}

SpinConfiguration sample_spin_configuration(std::size_t bonds, RngStream rng) {
  if (bonds == 0) throw InvalidArgument("bond count must be positive");
  auto engine = rng.engine();
  std::vector<Su2> matrices;
  matrices.reserve(bonds);
  while (matrices.size() < bonds) {
    const Su2 w = sample_haar_su2(engine);
    if (2.0 - std::abs(w.trace().real()) <= kIdentityExclusion) continue;
    matrices.push_back(w);
  }
  return SpinConfiguration(std::move(matrices));
}

}  // namespace diracrose
