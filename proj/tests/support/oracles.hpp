#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include <diracrose/statistics.hpp>

namespace oracle {

// Two-sided Kolmogorov-Smirnov statistic of `samples` against `cdf`.
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

inline double ks_critical_1pct(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

// Roots of an increasing-between-poles function by scanning a fixed grid for
// - to + sign changes (a + to - change is a pole) and bisecting each to `tol`.
inline std::vector<double> grid_roots(const std::function<double(double)>& f, double start,
                                      double step, std::size_t wanted, double tol = 1e-12) {
  std::vector<double> roots;
  double x0 = start;
  double f0 = f(x0);
  while (roots.size() < wanted) {
    const double x1 = x0 + step;
    const double f1 = f(x1);
    if (f0 < 0.0 && f1 >= 0.0) {
      double lo = x0, hi = x1;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid; else hi = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

// Least-squares slope of y = s x (line through the origin) over bin centres in [lo, hi].
inline double origin_slope(const diracrose::Histogram& h, double lo, double hi) {
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t b = 0; b < h.bins(); ++b) {
    const double x = h.centre(b);
    if (x < lo || x > hi) continue;
    sxy += x * h.values[b];
    sxx += x * x;
  }
  return sxy / sxx;
}

inline double mean_over(const diracrose::Histogram& h, double lo, double hi,
                        const std::function<double(double, double)>& g) {
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t b = 0; b < h.bins(); ++b) {
    const double x = h.centre(b);
    if (x < lo || x > hi) continue;
    sum += g(x, h.values[b]);
    ++n;
  }
  return sum / static_cast<double>(n);
}

}  // namespace oracle
