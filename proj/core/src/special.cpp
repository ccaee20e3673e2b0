#include "diracrose/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "diracrose/errors.hpp"

namespace diracrose {

namespace {

constexpr std::size_t kSeriesCap = 100000;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Plain Maclaurin series of 1F1.
double hyp1f1_series(double a, double b, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (std::size_t n = 0; n < kSeriesCap; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) / (b + dn) * z / (dn + 1.0);
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) < 1e-16 * std::abs(sum) && dn > std::abs(z)) return sum;
    if (!std::isfinite(sum)) throw NumericalFailure("1F1 series overflowed");
  }
  throw NumericalFailure("1F1 series did not converge within the term cap");
}

// e^{-y} 1F1(c; b; y) for y > 0, each term carried as sign * exp(log|t_n| - y).
double scaled_kummer_series(double c, double b, double y) {
  const double log_y = std::log(y);
  double log_term = -y;
  double sign = 1.0;
  double sum = std::exp(log_term);
  for (std::size_t n = 0; n < kSeriesCap; ++n) {
    const double dn = static_cast<double>(n);
    const double ratio = (c + dn) / (b + dn);
    if (ratio == 0.0) return sum;
    if (ratio < 0.0) sign = -sign;
    log_term += std::log(std::abs(ratio)) + log_y - std::log(dn + 1.0);
    const double term = sign * std::exp(log_term);
    sum += term;
    if (dn > y && std::abs(term) < 1e-17 * std::abs(sum)) return sum;
  }
  throw NumericalFailure("Kummer-transformed 1F1 series did not converge within the term cap");
}

// 15-point Kronrod nodes/weights on [-1, 1] with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  std::size_t order;  // creation order, for deterministic tie-breaks
};

struct WorseFirst {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.order > y.order;
  }
};

Segment kronrod15(const std::function<double(double)>& f, double a, double b,
                  std::size_t order) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(kronrod);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx), f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double value = kronrod * half;
  // Raw |K15 - G7| is pessimistic on purpose; the floor covers round-off
  // when both rules are exact.
  const double error = std::max(std::abs((kronrod - gauss) * half),
                                50.0 * std::numeric_limits<double>::epsilon() *
                                    std::abs(abs_sum * half));
  if (!std::isfinite(value)) throw NumericalFailure("integrand is not finite on the interval");
  return {a, b, value, error, order};
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("gamma_fn needs a positive argument");
  if (x < 0.5) return gamma_fn(x + 1.0) / x;
  const double xm = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (xm + static_cast<double>(i));
  }
  const double t = xm + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, xm + 0.5) * std::exp(-t) * series;
}

double hyp1f1(double a, double b, double z) {
  if (is_nonpositive_integer(b)) throw InvalidArgument("1F1: b is a non-positive integer");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z)) {
    throw InvalidArgument("1F1: non-finite argument");
  }
  if (std::abs(z) > 1e4) throw InvalidArgument("1F1: |z| exceeds 1e4");
  if (z == 0.0 || a == 0.0) return 1.0;
  if (z > 0.0) return hyp1f1_series(a, b, z);
  return scaled_kummer_series(b - a, b, -z);
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double tol, std::size_t max_intervals) {
  if (!(tol > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("finite limits required");
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  std::size_t order = 0;
  std::priority_queue<Segment, std::vector<Segment>, WorseFirst> queue;
  queue.push(kronrod15(f, a, b, order++));
  result.evaluations = 15;
  double total = queue.top().value;
  double error = queue.top().error;

  while (error > tol && queue.size() < max_intervals) {
    const Segment worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // cannot split further
    queue.pop();
    const Segment left = kronrod15(f, worst.a, mid, order++);
    const Segment right = kronrod15(f, mid, worst.b, order++);
    result.evaluations += 30;
    queue.push(left);
    queue.push(right);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }

  // Final sums from the live segments, in a fixed order.
  std::vector<Segment> live;
  live.reserve(queue.size());
  while (!queue.empty()) {
    live.push_back(queue.top());
    queue.pop();
  }
  std::sort(live.begin(), live.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  total = 0.0;
  error = 0.0;
  for (const auto& s : live) {
    total += s.value;
    error += s.error;
  }
  result.value = total;
  result.error_estimate = error;
  result.converged = error <= tol;
  return result;
}

}  // namespace diracrose
