#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "diracrose/rng.hpp"

namespace diracrose {

// Minimum separation between two sampled bond lengths. Stand-in for rational
// independence, which has no floating-point meaning.
inline constexpr double kMinLengthSeparation = 1e-9;

// Sampled draws with |Tr w| this close to 2 are redrawn.
inline constexpr double kIdentityExclusion = 1e-9;

// B positive bond lengths, each in [1 - 1/(2B), 1 + 1/(2B)], pairwise distinct.
class BondLengths {
 public:
  // Validates the interval and distinctness invariants.
  static BondLengths checked(std::vector<double> lengths);

  std::size_t size() const noexcept { return lengths_.size(); }
  const std::vector<double>& values() const noexcept { return lengths_; }
  std::span<const double> span() const noexcept { return lengths_; }
  double operator[](std::size_t b) const { return lengths_[b]; }
  double total() const noexcept;

  // Admissible interval [lo, hi] for a graph with `bonds` bonds.
  static std::array<double, 2> interval(std::size_t bonds);

 private:
  explicit BondLengths(std::vector<double> lengths) : lengths_(std::move(lengths)) {}
  std::vector<double> lengths_;
};

// Unit quaternion (a, b, c, d) standing for the SU(2) matrix
//   [ a + ib   c + id ]
//   [-c + id   a - ib ].
struct Su2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 0.0;

  std::array<std::complex<double>, 4> matrix() const;  // row-major
  std::complex<double> trace() const { return {2.0 * a, 0.0}; }
  std::complex<double> determinant() const;

  static Su2 from_matrix(const std::array<std::complex<double>, 4>& m);
};

// theta in [0, pi] with Tr w = 2 cos(theta).
double spin_angle(const Su2& w);

// Per-bond SU(2) matrices w_b and their angles theta_b.
class SpinConfiguration {
 public:
  explicit SpinConfiguration(std::vector<Su2> matrices);

  std::size_t size() const noexcept { return matrices_.size(); }
  const std::vector<Su2>& matrices() const noexcept { return matrices_; }
  const std::vector<double>& angles() const noexcept { return angles_; }

 private:
  std::vector<Su2> matrices_;
  std::vector<double> angles_;
};

// Independent uniform lengths on the admissible interval; redrawn until all
// pairs are at least kMinLengthSeparation apart.
BondLengths sample_bond_lengths(std::size_t bonds, RngStream rng);

// One Haar-distributed SU(2) element: four normal deviates projected onto S^3.
Su2 sample_haar_su2(CounterEngine& engine);

// Haar-random w_b for every bond, excluding draws near +-id.
SpinConfiguration sample_spin_configuration(std::size_t bonds, RngStream rng);

}  // namespace diracrose
