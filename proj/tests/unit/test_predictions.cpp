#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <diracrose/diracrose.hpp>

using namespace diracrose;
using std::numbers::pi;

TEST_CASE("prediction family names") {
  for (auto f : {PredictionFamily::rose_small, PredictionFamily::rose_large, PredictionFamily::star_small,
                 PredictionFamily::star_large, PredictionFamily::form_factor}) {
    CHECK(parse_prediction_family(to_string(f)) == f);
  }
  CHECK_THROWS_AS(parse_prediction_family("tulip"), InvalidArgument);
}

TEST_CASE("amplitude moments") {
  CHECK(amplitude_moment(0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(amplitude_moment(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(amplitude_moment(1.5, 1.0) == doctest::Approx(0.3151845252154469).epsilon(1e-12));
  CHECK_THROWS_AS(amplitude_moment(-0.6, 1.0), InvalidArgument);
  for (double nu : {-0.5, 0.5, 1.5}) {
    for (double x : {0.0, 0.5, 1.0, 2.0, 5.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      // substitute y = 1 - cos t to remove the endpoint singularities
      const auto f = [&](double t) {
        const double y = 2.0 * std::sin(t / 2) * std::sin(t / 2);
        return (2.0 / pi) * std::pow(y, nu) * std::exp(-y * x * x) * std::sin(t) * std::sin(t);
      };
      const auto r = integrate_adaptive(f, 0.0, pi, 1e-14);
      const double closed = amplitude_moment(nu, x);
      CHECK(std::abs(r.value - closed) <= 1e-8 * std::abs(closed));
    }
  }
}

TEST_CASE("small-x constant by quadrature") {
  const auto c = small_x_constant_quadrature();
  CHECK(std::abs(c.value - 6.781) < 0.005);
  CHECK(std::abs(c.value - 6.780684018846732) < 1e-8);
  CHECK(std::abs(pi * c.value / 6 - 3.550) < 0.003);
  CHECK(c.error_estimate < 1e-9);
  CHECK(small_x_constant() == c.value);
  CHECK_THROWS_AS(small_x_constant_quadrature(1e-11), InvalidArgument);
  // x^-10 decay
  CHECK(small_x_integrand(2.5) / small_x_integrand(5.0) >= 512.0);
}

TEST_CASE("small-x integrand is consistent with plain quadrature") {
  const auto r = integrate_adaptive(small_x_integrand, 0.0, 60.0, 1e-11);
  CHECK(std::abs(6.0 / std::sqrt(pi) * r.value - small_x_constant()) < 1e-8);
}

TEST_CASE("Monte Carlo estimate of c") {
  CHECK(amplitude_statistic(1, 1, 1) == doctest::Approx(std::pow(3.0, 1.5)).epsilon(1e-14));
  const auto mc = small_x_constant_montecarlo(1000000, RngStream(1, 0, StreamPurpose::monte_carlo), 4);
  CHECK(mc.samples == 1000000);
  CHECK(std::abs(mc.mean - small_x_constant()) < 4 * mc.standard_error);
  CHECK(mc.standard_error == doctest::Approx(3.3e-3).epsilon(0.1));
  CHECK_THROWS_AS(small_x_constant_montecarlo(999, RngStream(1, 0, StreamPurpose::monte_carlo)), InvalidArgument);
}

TEST_CASE("Monte Carlo does not depend on the thread count") {
  const RngStream s(3, 0, StreamPurpose::monte_carlo);
  const auto a = small_x_constant_montecarlo(200000, s, 1);
  const auto b = small_x_constant_montecarlo(200000, s, 3);
  CHECK(a.mean == b.mean);
  CHECK(a.standard_error == b.standard_error);
}

TEST_CASE("amplitude samples have mean 1 and the sine-squared angle law") {
  auto e = RngStream(5, 0, StreamPurpose::monte_carlo).engine();
  const int n = 100000;
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    const double a = sample_amplitude(e);
    REQUIRE(a > 0.0);
    REQUIRE(a <= 2.0);
    s += a;
    s2 += a * a;
  }
  const double mean = s / n;
  CHECK(std::abs(mean - 1.0) < 3 * std::sqrt((s2 / n - mean * mean) / n));
  for (double u : {1e-6, 0.1, 0.5, 0.9, 1 - 1e-6}) {
    const double t = sine_squared_quantile(u);
    CHECK(std::abs((2 * t - std::sin(2 * t)) / (2 * pi) - u) < 1e-12);
  }
}

TEST_CASE("small-x predictions") {
  CHECK(predict_r2_small(0.32, GraphFamily::rose) == doctest::Approx(1.1361).epsilon(1e-4));
  CHECK(predict_r2_small(0.4, GraphFamily::star) == doctest::Approx(1.088279619).epsilon(1e-9));
  CHECK(predict_r2_small(0.0, GraphFamily::rose) == 0.0);
  CHECK(predict_r2_small(0.0, GraphFamily::star) == 0.0);
  CHECK(small_x_slope(GraphFamily::star) == doctest::Approx(pi * std::sqrt(3.0) / 2));
}

TEST_CASE("large-x predictions") {
  CHECK(std::abs(predict_r2_large(100, GraphFamily::rose) - (1 + 2 / (pi * pi * 1e4) - 13 / (8 * std::pow(pi, 4) * 1e8))) < 1e-8);
  CHECK(predict_r2_large(2, GraphFamily::rose) == doctest::Approx(1.04962).epsilon(1e-5));
  const double x = 7.0;
  const double rose2 = (predict_r2_large(x, GraphFamily::rose) - 1) * x * x;
  const double star2 = (predict_r2_large(x, GraphFamily::star) - 1) * x * x;
  CHECK(rose2 == doctest::Approx(2 / (pi * pi)).epsilon(1e-3));
  CHECK(star2 == doctest::Approx(2 / (pi * pi)).epsilon(0.05));
  CHECK_THROWS_AS(predict_r2_large(0.5, GraphFamily::rose), OutOfDomain);
  CHECK_THROWS_AS(predict_r2_large(0.3, GraphFamily::star), OutOfDomain);
  CHECK(std::abs(predict_r2_large(30, GraphFamily::star) - 1) < 1e-3);
}

TEST_CASE("form factor closed form and terms") {
  CHECK(form_factor_prediction(0.0) == 1.0);
  CHECK(form_factor_term(1, 0.0) == 1.0);
  CHECK(form_factor_term(2, 0.2) == doctest::Approx(12.5 * 0.008 * std::exp(-0.8)).epsilon(1e-14));
  for (double tau : {0.3, 1.0}) {
    double sum = 0.0;
    for (int j = 1; j <= 60; ++j) sum += form_factor_term(j, tau);
    CHECK(std::abs(sum - form_factor_prediction(tau)) < 1e-12);
  }
  // Maclaurin coefficients from the polynomial through K at tau = 0, h, ..., 6h
  const int n = 7;
  const double h = 0.005;
  double A[n][n + 1];
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) A[r][c] = std::pow(r * h, c);
    A[r][n] = form_factor_prediction(r * h);
  }
  for (int c = 0; c < n; ++c) {
    for (int r = c + 1; r < n; ++r) {
      const double f = A[r][c] / A[c][c];
      for (int k = c; k <= n; ++k) A[r][k] -= f * A[c][k];
    }
  }
  double coef[n];
  for (int r = n - 1; r >= 0; --r) {
    double v = A[r][n];
    for (int k = r + 1; k < n; ++k) v -= A[r][k] * coef[k];
    coef[r] = v / A[r][r];
  }
  CHECK(std::abs(coef[0] - 1) < 1e-10);
  CHECK(std::abs(coef[1] + 4) < 1e-4);
  CHECK(std::abs(coef[2] - 9) < 1e-4);
  CHECK(std::abs(coef[3] + 13.0 / 6) < 1e-4);
  const auto a = form_factor_maclaurin(3);
  CHECK(a[0] == -4.0);
  CHECK(a[1] == 9.0);
  CHECK(a[2] == doctest::Approx(-13.0 / 6).epsilon(1e-15));
}

TEST_CASE("form factor tail transform") {
  const std::vector<double> a{-4.0, 9.0, -13.0 / 6};
  const auto c = form_factor_to_r2_tail(a, 3);
  CHECK(std::abs(c[0] - 2 / (pi * pi)) < 1e-12);
  CHECK(c[1] == 0.0);
  CHECK(std::abs(c[2] + 13 / (8 * std::pow(pi, 4))) < 1e-12);
  CHECK_THROWS_AS(form_factor_to_r2_tail(a, 4), InvalidArgument);
}

TEST_CASE("prediction curves") {
  std::vector<double> g;
  for (double x = 1.0; x <= 10.0 + 1e-9; x += 0.05) g.push_back(x);
  const auto c = predict_curve(PredictionFamily::rose_large, g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g[i];
    CHECK(std::abs(c.values[i] - (1 + 2 / (pi * pi * x * x) - 13 / (8 * std::pow(pi, 4) * std::pow(x, 4)))) < 1e-12);
  }
  const std::vector<double> bad{0.2, 1.0};
  CHECK_THROWS_AS(predict_curve(PredictionFamily::rose_large, bad), OutOfDomain);
}
