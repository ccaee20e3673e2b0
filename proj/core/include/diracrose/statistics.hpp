#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "diracrose/secular.hpp"

namespace diracrose {

// Spectrum rescaled to unit mean spacing.
struct UnfoldedSpectrum {
  std::vector<double> points;
  double scale = 1.0;       // x_n = scale * k_n
  bool rescaled = false;    // the empirical fallback replaced sum(L)/pi
  double mean_spacing() const;
};

// x_n = k_n * sum_b L_b / pi; falls back to x_n * N / x_N when the mean
// spacing misses 1 by more than 2%. Needs at least 100 roots.
UnfoldedSpectrum unfold(const Spectrum& spectrum);

// Wraps points that already have unit mean spacing (surrogates, lattices).
UnfoldedSpectrum unfolded_points(std::vector<double> points);

// Bin b covers [b * bin_width, (b + 1) * bin_width).
struct Histogram {
  double bin_width = 0.0;
  double x_max = 0.0;
  std::vector<double> values;
  std::size_t pair_count = 0;
  std::size_t level_count = 0;
  std::size_t realisation_count = 0;

  double centre(std::size_t bin) const { return (static_cast<double>(bin) + 0.5) * bin_width; }
  std::size_t bins() const { return values.size(); }
};

inline constexpr double kDefaultBinWidth = 0.05;
inline constexpr double kDefaultXMax = 10.0;

// R2 estimate for one unfolded spectrum. Reference levels are restricted to
// [x_first + x_max, x_last - x_max] so every partner within x_max exists;
// each bin holds (# partners at |x_n - x_m| in the bin) / (2 N_ref bin_width).
Histogram pair_correlation(const UnfoldedSpectrum& spectrum, double bin_width, double x_max);

// Per-realisation estimates averaged in input order.
Histogram pair_correlation(std::span<const UnfoldedSpectrum> ensemble, double bin_width,
                           double x_max);

// Averages per-realisation histograms (same binning) in order.
Histogram average_histograms(std::span<const Histogram> parts);

struct FormFactorCurve {
  std::vector<double> tau;
  std::vector<double> values;
  double window_half_width = 0.0;
  std::size_t segment_count = 0;
  std::size_t realisation_count = 0;
};

// Welch estimate of the form factor. Each realisation is cut into Hann-windowed
// segments of length 2 * window_half_width (hop window_half_width); for each
// segment K(tau) = |sum_n w(x_n) e^{2 pi i x_n tau} - W(tau)|^2 / sum_n w(x_n)^2
// with W the window transform at unit density, so uncorrelated points give 1.
FormFactorCurve empirical_form_factor(const UnfoldedSpectrum& spectrum,
                                      std::span<const double> tau, double window_half_width);

FormFactorCurve empirical_form_factor(std::span<const UnfoldedSpectrum> ensemble,
                                      std::span<const double> tau, double window_half_width);

FormFactorCurve average_form_factors(std::span<const FormFactorCurve> parts);

}  // namespace diracrose
