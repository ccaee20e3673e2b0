#include "diracrose/predictions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>

#include "diracrose/errors.hpp"
#include "diracrose/special.hpp"

namespace diracrose {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMonteCarloChunk = 1u << 16;

struct ChunkSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t count = 0;
};

ChunkSums run_chunk(RngStream rng, std::size_t count) {
  auto engine = rng.engine();
  ChunkSums s;
  for (std::size_t i = 0; i < count; ++i) {
    const double a1 = sample_amplitude(engine);
    const double a2 = sample_amplitude(engine);
    const double a3 = sample_amplitude(engine);
    const double v = amplitude_statistic(a1, a2, a3);
    s.sum += v;
    s.sum_sq += v * v;
  }
  s.count = count;
  return s;
}

}  // namespace

std::string_view to_string(PredictionFamily family) {
  switch (family) {
    case PredictionFamily::rose_small: return "rose-small";
    case PredictionFamily::rose_large: return "rose-large";
    case PredictionFamily::star_small: return "star-small";
    case PredictionFamily::star_large: return "star-large";
    case PredictionFamily::form_factor: return "formfactor";
  }
  return "unknown";
}

PredictionFamily parse_prediction_family(std::string_view name) {
  if (name == "rose-small") return PredictionFamily::rose_small;
  if (name == "rose-large") return PredictionFamily::rose_large;
  if (name == "star-small") return PredictionFamily::star_small;
  if (name == "star-large") return PredictionFamily::star_large;
  if (name == "formfactor") return PredictionFamily::form_factor;
  throw InvalidArgument("unknown prediction family '" + std::string(name) + "'");
}

double amplitude_moment(double nu, double x) {
  if (!(nu >= -0.5)) throw InvalidArgument("amplitude moment diverges for nu < -1/2");
  const double prefactor = std::pow(2.0, nu + 2.0) / std::sqrt(kPi) * gamma_fn(nu + 1.5) /
                           gamma_fn(nu + 3.0);
  return prefactor * hyp1f1(nu + 1.5, nu + 3.0, -2.0 * x * x);
}

double small_x_integrand(double x) {
  const double im = amplitude_moment(-0.5, x);
  const double ih = amplitude_moment(0.5, x);
  const double i3 = amplitude_moment(1.5, x);
  return i3 * im * im + 2.0 * ih * ih * im;
}

ConstantEstimate small_x_constant_quadrature(double tolerance) {
  if (!(tolerance >= 1e-10)) throw InvalidArgument("tolerance must be at least 1e-10");
  const double prefactor = 6.0 / std::sqrt(kPi);  // (3 / sqrt(pi)) * 2 for the half line
  const double truncation = std::max(20.0, std::pow(1.0 / tolerance, 1.0 / 9.0));

  // Leading asymptotics I_nu ~ (2 sqrt(2) / pi) Gamma(nu + 3/2) x^{-2 nu - 3}
  // give integrand ~ 4 (2 sqrt(2) / pi)^3 x^{-10}.
  const double lead = 2.0 * std::sqrt(2.0) / kPi;
  const double tail = prefactor * 4.0 * lead * lead * lead / (9.0 * std::pow(truncation, 9.0));

  const double quad_tol = 0.5 * tolerance / prefactor;
  const auto q = integrate_adaptive(small_x_integrand, 0.0, truncation, quad_tol);
  if (!q.converged) {
    std::ostringstream msg;
    msg << "small-x constant quadrature did not converge: error estimate "
        << q.error_estimate * prefactor << " after " << q.evaluations << " evaluations";
    throw NumericalFailure(msg.str());
  }
  ConstantEstimate c;
  c.value = prefactor * q.value;
  c.error_estimate = prefactor * q.error_estimate + tail;
  c.truncation = truncation;
  c.evaluations = q.evaluations;
  return c;
}

double small_x_constant() {
  static const double c = small_x_constant_quadrature(1e-10).value;
  return c;
}

double amplitude_statistic(double a1, double a2, double a3) {
  const double s = a1 + a2 + a3;
  return s * std::sqrt(s) / std::sqrt(a1 * a2 * a3);
}

double sine_squared_quantile(double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw InvalidArgument("quantile level outside [0, 1]");
  if (u == 0.0) return 0.0;
  if (u == 1.0) return kPi;
  const double target = 2.0 * kPi * u;
  double lo = 0.0, hi = kPi;
  // Near the ends g(phi) = 2 phi - sin 2 phi behaves like (4/3) phi^3.
  double phi = u < 0.5 ? std::cbrt(1.5 * kPi * u) : kPi - std::cbrt(1.5 * kPi * (1.0 - u));
  phi = std::clamp(phi, 1e-300, kPi - 1e-16);
  for (int iter = 0; iter < 100; ++iter) {
    const double g = 2.0 * phi - std::sin(2.0 * phi) - target;
    if (g < 0.0) lo = phi;
    else hi = phi;
    const double s = std::sin(phi);
    const double dg = 4.0 * s * s;
    double next = dg > 0.0 ? phi - g / dg : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - phi) <= 1e-15 * std::max(1.0, phi)) return next;
    phi = next;
  }
  return phi;
}

double sample_amplitude(CounterEngine& engine) {
  return 1.0 - std::cos(sine_squared_quantile(engine.uniform_open()));
}

MonteCarloEstimate small_x_constant_montecarlo(std::size_t samples, RngStream rng,
                                               unsigned threads) {
  if (samples < 1000) throw InvalidArgument("Monte Carlo needs at least 1000 samples");
  const std::size_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<ChunkSums> partial(chunks);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t c = first; c < chunks; c += stride) {
      const std::size_t count = std::min(kMonteCarloChunk, samples - c * kMonteCarloChunk);
      partial[c] = run_chunk(rng.substream(c), count);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  double sum = 0.0, sum_sq = 0.0;
  for (const auto& p : partial) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double variance = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(variance / n), samples};
}

double small_x_slope(GraphFamily family) {
  if (family == GraphFamily::rose) return kPi * small_x_constant() / 6.0;
  return kPi * std::sqrt(3.0) / 2.0;
}

double predict_r2_small(double x, GraphFamily family) {
  if (!(x >= 0.0)) throw OutOfDomain("small-x prediction needs x >= 0");
  return small_x_slope(family) * x;
}

double predict_r2_large(double x, GraphFamily family) {
  if (!(x > 0.5)) throw OutOfDomain("large-x series is only meaningful for x > 0.5");
  const double u = 1.0 / (kPi * kPi * x * x);  // 1 / (pi x)^2
  if (family == GraphFamily::rose) return 1.0 + 2.0 * u - 13.0 / 8.0 * u * u;
  return 1.0 + u * (2.0 + u * (76.0 + u * (-1088.0 + u * (9280.0 - 64000.0 * u))));
}

double form_factor_prediction(double tau) {
  if (!(tau >= 0.0)) throw InvalidArgument("form factor needs tau >= 0");
  return (1.0 - tau - 4.0 * tau * tau) * std::exp(-4.0 * tau) + tau * std::exp(tau);
}

double form_factor_term(int j, double tau) {
  if (j < 1) throw InvalidArgument("form factor term index must be at least 1");
  if (!(tau >= 0.0)) throw InvalidArgument("form factor needs tau >= 0");
  const double damping = std::exp(-4.0 * tau);
  if (j == 1) return (1.0 + tau * tau) * damping;
  double product = 1.0;  // (5 tau)^j / j!
  for (int i = 1; i <= j; ++i) product *= 5.0 * tau / static_cast<double>(i);
  return tau * damping * product;
}

std::vector<double> form_factor_maclaurin(std::size_t order) {
  // [tau^n] of (1 - tau - 4 tau^2) e^{-4 tau} + tau e^{tau}.
  auto exp_coeff = [](double rate, long n) {
    if (n < 0) return 0.0;
    double c = 1.0;
    for (long i = 1; i <= n; ++i) c *= rate / static_cast<double>(i);
    return c;
  };
  std::vector<double> a(order);
  for (std::size_t k = 1; k <= order; ++k) {
    const long n = static_cast<long>(k);
    a[k - 1] = exp_coeff(-4.0, n) - exp_coeff(-4.0, n - 1) - 4.0 * exp_coeff(-4.0, n - 2) +
               exp_coeff(1.0, n - 1);
  }
  return a;
}

std::vector<double> form_factor_to_r2_tail(std::span<const double> a, std::size_t order) {
  if (order > a.size()) throw InvalidArgument("order exceeds the number of coefficients");
  std::vector<double> tail(order);
  double factorial = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    factorial *= static_cast<double>(k);
    // Re[(-i)^{k+1}] cycles 1, 0, -1, 0 for k + 1 = 0, 1, 2, 3 (mod 4).
    static constexpr double kRealPart[4] = {1.0, 0.0, -1.0, 0.0};
    const double re = kRealPart[(k + 1) % 4];
    if (re == 0.0) {
      tail[k - 1] = 0.0;
      continue;
    }
    tail[k - 1] = 2.0 * re * a[k - 1] * factorial / std::pow(2.0 * kPi, static_cast<double>(k + 1));
  }
  return tail;
}

PredictionCurve predict_curve(PredictionFamily family, std::span<const double> grid) {
  PredictionCurve curve;
  curve.family = family;
  curve.grid.assign(grid.begin(), grid.end());
  curve.values.reserve(grid.size());
  for (double x : grid) {
    switch (family) {
      case PredictionFamily::rose_small:
        curve.values.push_back(predict_r2_small(x, GraphFamily::rose));
        break;
      case PredictionFamily::star_small:
        curve.values.push_back(predict_r2_small(x, GraphFamily::star));
        break;
      case PredictionFamily::rose_large:
        curve.values.push_back(predict_r2_large(x, GraphFamily::rose));
        break;
      case PredictionFamily::star_large:
        curve.values.push_back(predict_r2_large(x, GraphFamily::star));
        break;
      case PredictionFamily::form_factor:
        curve.values.push_back(form_factor_prediction(x));
        break;
    }
  }
  return curve;
}

}  // namespace diracrose
