#include "diracrose/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "diracrose/errors.hpp"

namespace diracrose {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSpacingTolerance = 0.02;

void require_increasing(std::span<const double> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i] > points[i - 1])) throw InvalidArgument("points must be strictly increasing");
  }
}

std::size_t bin_count(double bin_width, double x_max) {
  return static_cast<std::size_t>(std::ceil(x_max / bin_width - 1e-9));
}

// Integral of e^{2 pi i f u} over [0, T].
std::complex<double> box_transform(double f, double length) {
  const double arg = 2.0 * kPi * f * length;
  if (std::abs(arg) < 1e-8) return {length, 0.0};
  const std::complex<double> numer(std::cos(arg) - 1.0, std::sin(arg));
  return numer / std::complex<double>(0.0, 2.0 * kPi * f);
}

// Transform of the Hann window sin^2(pi u / T) on [0, T] at unit density.
std::complex<double> hann_transform(double tau, double length) {
  const double shift = 1.0 / length;
  return 0.5 * box_transform(tau, length) - 0.25 * box_transform(tau + shift, length) -
         0.25 * box_transform(tau - shift, length);
}

}  // namespace

double UnfoldedSpectrum::mean_spacing() const {
  if (points.size() < 2) return 0.0;
  return (points.back() - points.front()) / static_cast<double>(points.size() - 1);
}

UnfoldedSpectrum unfold(const Spectrum& spectrum) {
  if (spectrum.roots.size() < 100) throw InvalidArgument("unfolding needs at least 100 roots");
  if (!(spectrum.total_length > 0.0)) throw InvalidArgument("spectrum has no total length");
  UnfoldedSpectrum out;
  out.scale = spectrum.total_length / kPi;
  out.points.reserve(spectrum.roots.size());
  for (double k : spectrum.roots) out.points.push_back(out.scale * k);
  if (std::abs(out.mean_spacing() - 1.0) > kSpacingTolerance) {
    const double factor = static_cast<double>(out.points.size()) / out.points.back();
    for (auto& x : out.points) x *= factor;
    out.scale *= factor;
    out.rescaled = true;
  }
  return out;
}

UnfoldedSpectrum unfolded_points(std::vector<double> points) {
  require_increasing(points);
  UnfoldedSpectrum out;
  out.points = std::move(points);
  return out;
}

Histogram pair_correlation(const UnfoldedSpectrum& spectrum, double bin_width, double x_max) {
  if (!(bin_width > 0.0)) throw InvalidArgument("bin width must be positive");
  if (!(x_max >= bin_width)) throw InvalidArgument("x_max must be at least the bin width");
  const auto& x = spectrum.points;
  if (x.size() < 1000) throw InvalidArgument("pair correlation needs at least 1000 levels");

  const double lo = x.front() + x_max;
  const double hi = x.back() - x_max;
  if (!(hi > lo)) throw InvalidArgument("spectrum too short for x_max");

  const std::size_t nbins = bin_count(bin_width, x_max);
  const double reach = static_cast<double>(nbins) * bin_width;
  std::vector<std::size_t> counts(nbins, 0);
  std::size_t references = 0;
  std::size_t pairs = 0;

  for (std::size_t m = 0; m < x.size(); ++m) {
    const bool m_ref = x[m] >= lo && x[m] <= hi;
    references += m_ref ? 1 : 0;
    for (std::size_t n = m + 1; n < x.size(); ++n) {
      const double d = x[n] - x[m];
      if (d >= reach) break;
      const bool n_ref = x[n] >= lo && x[n] <= hi;
      if (!m_ref && !n_ref) continue;
      const auto bin = static_cast<std::size_t>(d / bin_width);
      if (bin >= nbins) continue;
      const std::size_t weight = (m_ref ? 1 : 0) + (n_ref ? 1 : 0);
      counts[bin] += weight;
      pairs += weight;
    }
  }
  if (references == 0) throw InvalidArgument("no reference levels inside the window");

  Histogram h;
  h.bin_width = bin_width;
  h.x_max = x_max;
  h.values.resize(nbins);
  const double norm = 2.0 * static_cast<double>(references) * bin_width;
  for (std::size_t b = 0; b < nbins; ++b) h.values[b] = static_cast<double>(counts[b]) / norm;
  h.pair_count = pairs;
  h.level_count = references;
  h.realisation_count = 1;
  return h;
}

Histogram average_histograms(std::span<const Histogram> parts) {
  if (parts.empty()) throw InvalidArgument("empty ensemble");
  Histogram out;
  out.bin_width = parts.front().bin_width;
  out.x_max = parts.front().x_max;
  out.values.assign(parts.front().values.size(), 0.0);
  for (const auto& h : parts) {
    if (h.values.size() != out.values.size() || h.bin_width != out.bin_width) {
      throw InvalidArgument("histograms have different binning");
    }
    for (std::size_t b = 0; b < h.values.size(); ++b) out.values[b] += h.values[b];
    out.pair_count += h.pair_count;
    out.level_count += h.level_count;
    out.realisation_count += h.realisation_count;
  }
  for (auto& v : out.values) v /= static_cast<double>(parts.size());
  return out;
}

Histogram pair_correlation(std::span<const UnfoldedSpectrum> ensemble, double bin_width,
                           double x_max) {
  if (ensemble.empty()) throw InvalidArgument("empty ensemble");
  std::vector<Histogram> parts;
  parts.reserve(ensemble.size());
  for (const auto& s : ensemble) parts.push_back(pair_correlation(s, bin_width, x_max));
  return average_histograms(parts);
}

FormFactorCurve empirical_form_factor(const UnfoldedSpectrum& spectrum,
                                      std::span<const double> tau, double window_half_width) {
  if (!(window_half_width > 0.0)) throw InvalidArgument("window half-width must be positive");
  if (tau.empty()) throw InvalidArgument("empty tau grid");
  for (double t : tau) {
    if (!(t > 0.0)) throw InvalidArgument("tau grid must be positive");
  }
  const auto& x = spectrum.points;
  const double length = 2.0 * window_half_width;
  if (x.size() < 2 || x.back() - x.front() < length) {
    throw InvalidArgument("analysis window does not fit inside the spectrum");
  }

  std::vector<std::complex<double>> window_ft(tau.size());
  for (std::size_t t = 0; t < tau.size(); ++t) window_ft[t] = hann_transform(tau[t], length);

  FormFactorCurve out;
  out.tau.assign(tau.begin(), tau.end());
  out.values.assign(tau.size(), 0.0);
  out.window_half_width = window_half_width;
  out.realisation_count = 1;

  std::vector<std::complex<double>> sums(tau.size());
  std::size_t first = 0;
  for (double start = x.front(); start + length <= x.back(); start += window_half_width) {
    while (first < x.size() && x[first] < start) ++first;
    std::fill(sums.begin(), sums.end(), std::complex<double>{});
    double weight2 = 0.0;
    for (std::size_t n = first; n < x.size() && x[n] < start + length; ++n) {
      const double u = x[n] - start;
      const double s = std::sin(kPi * u / length);
      const double w = s * s;
      weight2 += w * w;
      for (std::size_t t = 0; t < tau.size(); ++t) {
        const double phase = 2.0 * kPi * tau[t] * u;
        sums[t] += w * std::complex<double>(std::cos(phase), std::sin(phase));
      }
    }
    if (weight2 <= 0.0) continue;
    for (std::size_t t = 0; t < tau.size(); ++t) {
      out.values[t] += std::norm(sums[t] - window_ft[t]) / weight2;
    }
    ++out.segment_count;
  }
  if (out.segment_count == 0) throw InvalidArgument("no populated analysis window");
  for (auto& v : out.values) v /= static_cast<double>(out.segment_count);
  return out;
}

FormFactorCurve average_form_factors(std::span<const FormFactorCurve> parts) {
  if (parts.empty()) throw InvalidArgument("empty ensemble");
  FormFactorCurve out;
  out.tau = parts.front().tau;
  out.window_half_width = parts.front().window_half_width;
  out.values.assign(out.tau.size(), 0.0);
  for (const auto& p : parts) {
    if (p.tau != out.tau) throw InvalidArgument("form factors use different tau grids");
    for (std::size_t t = 0; t < p.values.size(); ++t) out.values[t] += p.values[t];
    out.segment_count += p.segment_count;
    out.realisation_count += p.realisation_count;
  }
  for (auto& v : out.values) v /= static_cast<double>(parts.size());
  return out;
}

FormFactorCurve empirical_form_factor(std::span<const UnfoldedSpectrum> ensemble,
                                      std::span<const double> tau, double window_half_width) {
  if (ensemble.empty()) throw InvalidArgument("empty ensemble");
  std::vector<FormFactorCurve> parts;
  parts.reserve(ensemble.size());
  for (const auto& s : ensemble) parts.push_back(empirical_form_factor(s, tau, window_half_width));
  return average_form_factors(parts);
}

}  // namespace diracrose
