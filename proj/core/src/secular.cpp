#include "diracrose/secular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "diracrose/errors.hpp"

namespace diracrose {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBisectionWidth = 1e-6;
constexpr double kPoleOffset = 1e-10;  // fraction of the interval width

double sum_of(std::span<const double> values) {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

void require_positive_lengths(std::span<const double> lengths) {
  if (lengths.empty()) throw InvalidArgument("at least one bond is required");
  for (double l : lengths) {
    if (!(l > 0.0) || !std::isfinite(l)) throw InvalidArgument("bond lengths must be positive");
  }
}

// Sum of the Dirac-rose terms without pole checks; used inside brackets.
class DiracSecular {
 public:
  DiracSecular(std::span<const double> lengths, std::span<const double> angles)
      : lengths_(lengths), cos_theta_(angles.size()) {
    for (std::size_t b = 0; b < angles.size(); ++b) cos_theta_[b] = std::cos(angles[b]);
  }

  SecularValue operator()(double k) const {
    double value = 0.0, derivative = 0.0;
    for (std::size_t b = 0; b < lengths_.size(); ++b) {
      const double x = k * lengths_[b];
      const double s = std::sin(x), c = std::cos(x);
      value += (cos_theta_[b] - c) / s;
      derivative += lengths_[b] * (1.0 - c * cos_theta_[b]) / (s * s);
    }
    return {value, derivative};
  }

 private:
  std::span<const double> lengths_;
  std::vector<double> cos_theta_;
};

// sum_b tan(k l_b) and its derivative.
class TanSum {
 public:
  explicit TanSum(std::span<const double> lengths) : lengths_(lengths) {}

  SecularValue operator()(double k) const {
    double value = 0.0, derivative = 0.0;
    for (double l : lengths_) {
      const double x = k * l;
      const double s = std::sin(x), c = std::cos(x);
      value += s / c;
      derivative += l / (c * c);
    }
    return {value, derivative};
  }

 private:
  std::span<const double> lengths_;
};

double effective_tolerance(double k) {
  const double ulp = std::nextafter(std::abs(k), INFINITY) - std::abs(k);
  return std::max(kRootTolerance, 4.0 * ulp);
}

// Root of an increasing function on (lo, hi) with f(lo) < 0 < f(hi):
// bisection down to kBisectionWidth, then Newton kept inside the bracket.
template <class F>
double refine_root(const F& f, double lo, double hi) {
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid).value < 0.0) lo = mid;
    else hi = mid;
  }
  const double tol = effective_tolerance(hi);
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 64 && hi - lo > tol; ++iter) {
    const auto [v, d] = f(x);
    if (v == 0.0) return x;
    if (v < 0.0) lo = x;
    else hi = x;
    double next = d > 0.0 ? x - v / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < 0.25 * tol) {
      // Newton has converged; close the bracket around the iterate.
      const double left = std::max(lo, next - 0.5 * tol);
      const double right = std::min(hi, next + 0.5 * tol);
      if (f(left).value < 0.0) lo = left;
      if (f(right).value > 0.0) hi = right;
      next = 0.5 * (lo + hi);
    }
    x = next;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid).value < 0.0) lo = mid;
    else hi = mid;
  }
  // final Newton polish, clamped to the bracket
  const double mid = 0.5 * (lo + hi);
  const auto [v, d] = f(mid);
  if (v == 0.0 || !(d > 0.0)) return mid;
  return std::clamp(mid - v / d, lo, hi);
}

// One root per open interval between consecutive entries of `poles`. The
// function must run from -inf just right of each pole to +inf just left of
// the next one.
template <class F>
void roots_between_poles(const F& f, std::span<const double> poles, std::size_t first,
                         std::size_t wanted, std::vector<double>& roots,
                         SolverDiagnostics& diag) {
  for (std::size_t i = first; i + 1 < poles.size() && roots.size() < wanted; ++i) {
    const double a = poles[i], b = poles[i + 1];
    const double width = b - a;
    if (width < kPoleCollision) {
      ++diag.skipped_intervals;
      continue;
    }
    double lo = a + kPoleOffset * width;
    double hi = b - kPoleOffset * width;
    if (lo <= a) lo = std::nextafter(a, b);
    if (hi >= b) hi = std::nextafter(b, a);
    if (f(lo).value >= 0.0) {
      ++diag.pole_adjacent_roots;
      roots.push_back(lo);
      continue;
    }
    if (f(hi).value <= 0.0) {
      ++diag.pole_adjacent_roots;
      roots.push_back(hi);
      continue;
    }
    roots.push_back(refine_root(f, lo, hi));
  }
}

// Sorted positions (m + offset) pi / l_b in (0, k_max] over all bonds, m >= 0.
std::vector<double> pole_positions(std::span<const double> lengths, double offset,
                                   double k_max) {
  std::vector<double> poles;
  for (double l : lengths) {
    for (std::int64_t m = 0;; ++m) {
      const double p = (static_cast<double>(m) + offset) * kPi / l;
      if (p > k_max) break;
      if (p > 0.0) poles.push_back(p);
    }
  }
  std::sort(poles.begin(), poles.end());
  return poles;
}

}  // namespace

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::dirac_rose: return "dirac-rose";
    case GraphKind::neumann_star: return "neumann-star";
    case GraphKind::neumann_rose: return "neumann-rose";
  }
  return "unknown";
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "dirac-rose") return GraphKind::dirac_rose;
  if (name == "neumann-star") return GraphKind::neumann_star;
  if (name == "neumann-rose") return GraphKind::neumann_rose;
  throw InvalidArgument("unknown graph kind '" + std::string(name) + "'");
}

double z_eval(double x, double theta) {
  const double m = std::nearbyint(x / kPi);
  if (std::abs(x - m * kPi) < 1e-13) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "z evaluated at pole x = " << x;
    throw PoleProximity(msg.str());
  }
  return (std::cos(theta) - std::cos(x)) / std::sin(x);
}

SecularValue secular_eval(double k, std::span<const double> lengths,
                          std::span<const double> angles) {
  if (lengths.size() != angles.size()) {
    throw InvalidArgument("lengths and angles differ in size");
  }
  for (double l : lengths) {
    const double x = k * l;
    const double m = std::nearbyint(x / kPi);
    if (std::abs(x - m * kPi) < 1e-13 * kPi) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "secular function evaluated at pole k = " << k;
      throw PoleProximity(msg.str());
    }
  }
  return DiracSecular(lengths, angles)(k);
}

std::vector<Pole> pole_stream(std::span<const double> lengths, double k_max) {
  if (!(k_max > 0.0)) throw InvalidArgument("k_max must be positive");
  require_positive_lengths(lengths);
  std::vector<Pole> poles;
  for (std::size_t b = 0; b < lengths.size(); ++b) {
    for (std::int64_t m = 1;; ++m) {
      const double p = static_cast<double>(m) * kPi / lengths[b];
      if (p > k_max) break;
      poles.push_back({p, b, m});
    }
  }
  std::sort(poles.begin(), poles.end(), [](const Pole& x, const Pole& y) {
    return x.position < y.position || (x.position == y.position && x.bond < y.bond);
  });
  return poles;
}

std::size_t pole_count(std::span<const double> lengths, double k) {
  std::size_t count = 0;
  // same pole arithmetic as pole_stream, so counts agree to the last ulp
  for (double l : lengths) {
    double m = std::floor(k * l / kPi);
    while (m > 0.0 && m * kPi / l > k) m -= 1.0;
    while ((m + 1.0) * kPi / l <= k) m += 1.0;
    count += static_cast<std::size_t>(m);
  }
  return count;
}

Spectrum dirac_rose_spectrum(std::span<const double> lengths, std::span<const double> angles,
                             std::size_t n_roots, std::size_t skip) {
  require_positive_lengths(lengths);
  if (lengths.size() != angles.size()) {
    throw InvalidArgument("lengths and angles differ in size");
  }
  if (n_roots == 0) throw InvalidArgument("n_roots must be at least 1");
  for (std::size_t b = 0; b < angles.size(); ++b) {
    if (!std::isfinite(angles[b]) || 1.0 - std::abs(std::cos(angles[b])) <= 0.0) {
      throw InvalidConfiguration("spin angle of bond " + std::to_string(b) +
                                 " is 0 or pi (w_b = +-id)");
    }
  }

  const double total = sum_of(lengths);
  const DiracSecular f(lengths, angles);
  const double bonds = static_cast<double>(lengths.size());

  Spectrum spec;
  spec.kind = GraphKind::dirac_rose;
  spec.bonds = lengths.size();
  spec.total_length = total;

  // Z -> -inf as k -> 0+, so (0, first pole) holds the first root.
  std::size_t margin = 0;
  for (;;) {
    const double k_max =
        (static_cast<double>(n_roots + skip + margin) + bonds + 2.0) * kPi / total;
    std::vector<double> poles = pole_positions(lengths, 0.0, k_max);
    poles.insert(poles.begin(), 0.0);
    spec.roots.clear();
    spec.diagnostics = {};
    roots_between_poles(f, poles, skip, n_roots, spec.roots, spec.diagnostics);
    spec.k_max = poles.back();
    if (spec.roots.size() >= n_roots) break;
    margin += spec.diagnostics.skipped_intervals + 16;
  }
  spec.origins.assign(spec.roots.size(), RootOrigin::secular);
  return spec;
}

Spectrum neumann_star_spectrum(std::span<const double> star_lengths, std::size_t n_roots,
                               std::size_t skip) {
  require_positive_lengths(star_lengths);
  if (n_roots == 0) throw InvalidArgument("n_roots must be at least 1");

  const double total = sum_of(star_lengths);
  const TanSum f(star_lengths);
  const double bonds = static_cast<double>(star_lengths.size());

  Spectrum spec;
  spec.kind = GraphKind::neumann_star;
  spec.bonds = star_lengths.size();
  spec.total_length = total;

  // The sum vanishes at k = 0 and increases up to the first pole, so the
  // positive roots start after it.
  std::size_t margin = 0;
  for (;;) {
    const double k_max =
        (static_cast<double>(n_roots + skip + margin) + bonds + 2.0) * kPi / total;
    const std::vector<double> poles = pole_positions(star_lengths, 0.5, k_max);
    spec.roots.clear();
    spec.diagnostics = {};
    roots_between_poles(f, poles, skip, n_roots, spec.roots, spec.diagnostics);
    spec.k_max = poles.empty() ? 0.0 : poles.back();
    if (spec.roots.size() >= n_roots) break;
    margin += spec.diagnostics.skipped_intervals + 16;
  }
  spec.origins.assign(spec.roots.size(), RootOrigin::secular);
  return spec;
}

Spectrum neumann_rose_spectrum(std::span<const double> lengths, std::size_t n_roots,
                               std::size_t skip) {
  require_positive_lengths(lengths);
  if (n_roots == 0) throw InvalidArgument("n_roots must be at least 1");

  std::vector<double> half(lengths.begin(), lengths.end());
  for (auto& l : half) l *= 0.5;
  const std::size_t wanted = n_roots + skip;
  const Spectrum secular = neumann_star_spectrum(half, wanted);
  const double last = secular.roots.back();

  std::vector<double> localised;
  for (double l : lengths) {
    for (std::int64_t m = 1;; ++m) {
      const double p = 2.0 * static_cast<double>(m) * kPi / l;
      if (p > last) break;
      localised.push_back(p);
    }
  }
  std::sort(localised.begin(), localised.end());

  Spectrum spec;
  spec.kind = GraphKind::neumann_rose;
  spec.bonds = lengths.size();
  spec.total_length = sum_of(lengths);
  spec.k_max = secular.k_max;
  spec.diagnostics = secular.diagnostics;

  // Merge; a secular root and a localised point closer than 1e-9 (relative)
  // are the same eigenvalue, which happens identically when B = 1.
  std::size_t i = 0, j = 0;
  const auto& a = secular.roots;
  while (spec.roots.size() < wanted && (i < a.size() || j < localised.size())) {
    if (i < a.size() && j < localised.size() &&
        std::abs(a[i] - localised[j]) <= 1e-9 * std::max(1.0, a[i])) {
      spec.roots.push_back(localised[j]);
      spec.origins.push_back(RootOrigin::coincident);
      ++i;
      ++j;
    } else if (j >= localised.size() || (i < a.size() && a[i] < localised[j])) {
      spec.roots.push_back(a[i++]);
      spec.origins.push_back(RootOrigin::secular);
    } else {
      spec.roots.push_back(localised[j++]);
      spec.origins.push_back(RootOrigin::bond_localised);
    }
  }
  const auto drop = static_cast<std::ptrdiff_t>(std::min(skip, spec.roots.size()));
  spec.roots.erase(spec.roots.begin(), spec.roots.begin() + drop);
  spec.origins.erase(spec.origins.begin(), spec.origins.begin() + drop);
  return spec;
}

}  // namespace diracrose
