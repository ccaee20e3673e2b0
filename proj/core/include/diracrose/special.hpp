#pragma once

#include <cstddef>
#include <functional>

namespace diracrose {

// Gamma function for x > 0 (Lanczos, g = 7, nine coefficients).
double gamma_fn(double x);

// Confluent hypergeometric 1F1(a; b; z) for real arguments, |z| <= 1e4.
// Negative z goes through Kummer's transformation e^z 1F1(b - a; b; -z),
// summed with the exponential folded into each term so nothing overflows.
double hyp1f1(double a, double b, double z);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b] to absolute
// tolerance `tol`. The interval with the largest error estimate is bisected
// first; ties go to the leftmost interval, so the subdivision is reproducible.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double tol, std::size_t max_intervals = 20000);

}  // namespace diracrose
