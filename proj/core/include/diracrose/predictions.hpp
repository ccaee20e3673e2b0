#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "diracrose/rng.hpp"

namespace diracrose {

enum class GraphFamily { rose, star };

enum class PredictionFamily { rose_small, rose_large, star_small, star_large, form_factor };

std::string_view to_string(PredictionFamily family);
PredictionFamily parse_prediction_family(std::string_view name);  // throws InvalidArgument

// Amplitude moment E{A^nu e^{-A x^2}} for A with density (2/pi) sqrt(y (2 - y))
// on [0, 2], in closed form:
//   2^{nu+2} / sqrt(pi) * Gamma(nu + 3/2) / Gamma(nu + 3) * 1F1(nu + 3/2; nu + 3; -2 x^2).
// Requires nu >= -1/2.
double amplitude_moment(double nu, double x);

// I_{3/2} I_{-1/2}^2 + 2 I_{1/2}^2 I_{-1/2}; even in x, decays like x^{-10}.
double small_x_integrand(double x);

struct ConstantEstimate {
  double value = 0.0;
  double error_estimate = 0.0;  // quadrature error plus tail bound
  double truncation = 0.0;      // upper integration limit X
  std::size_t evaluations = 0;
};

// c = (3 / sqrt(pi)) * 2 * int_0^X small_x_integrand, X = max(20, tol^{-1/9}).
// Throws NumericalFailure if the quadrature does not reach the tolerance.
ConstantEstimate small_x_constant_quadrature(double tolerance = 1e-10);

// c from quadrature at the default tolerance, computed once per process.
double small_x_constant();

// (A1 + A2 + A3)^{3/2} / sqrt(A1 A2 A3).
double amplitude_statistic(double a1, double a2, double a3);

// Inverse CDF of the sine-squared law P(theta < x) = (2x - sin 2x) / (2 pi).
double sine_squared_quantile(double u);

// A = 1 - cos(theta), theta sine-squared distributed.
double sample_amplitude(CounterEngine& engine);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

// Sample mean of amplitude_statistic over i.i.d. triples. Work is split into
// fixed-size chunks on independent substreams and combined in chunk order, so
// the result does not depend on `threads`.
MonteCarloEstimate small_x_constant_montecarlo(std::size_t samples, RngStream rng,
                                               unsigned threads = 1);

// Slope of R2 at the origin: pi c / 6 (rose) or pi sqrt(3) / 2 (star).
double small_x_slope(GraphFamily family);

double predict_r2_small(double x, GraphFamily family);

// Large-x series. Throws OutOfDomain for x <= 0.5.
double predict_r2_large(double x, GraphFamily family);

// (1 - tau - 4 tau^2) e^{-4 tau} + tau e^{tau}.
double form_factor_prediction(double tau);

// Contribution of orbits confined to j bonds: (1 + tau^2) e^{-4 tau} for j = 1,
// tau^{j+1} e^{-4 tau} 5^j / j! for j >= 2.
double form_factor_term(int j, double tau);

// Exact Maclaurin coefficients a_1..a_order of form_factor_prediction.
std::vector<double> form_factor_maclaurin(std::size_t order);

// Entry k-1 is the coefficient of x^{-(k+1)} in r(x) ~ 1 + sum_k c_k x^{-(k+1)},
// c_k = 2 Re[(-i / 2 pi)^{k+1}] a_k k!, for k = 1..order (a[k-1] holds a_k).
std::vector<double> form_factor_to_r2_tail(std::span<const double> a, std::size_t order);

struct PredictionCurve {
  PredictionFamily family = PredictionFamily::rose_large;
  std::vector<double> grid;
  std::vector<double> values;
};

PredictionCurve predict_curve(PredictionFamily family, std::span<const double> grid);

}  // namespace diracrose
