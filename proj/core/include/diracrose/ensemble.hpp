#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "diracrose/secular.hpp"
#include "diracrose/statistics.hpp"

namespace diracrose {

inline constexpr std::size_t kAutoSkipFactor = 4;

struct ExperimentConfig {
  GraphKind graph = GraphKind::dirac_rose;
  std::size_t bonds = 101;
  std::size_t eigenvalues = 20000;
  // Lowest eigenvalues left out of each realisation. Unset means
  // kAutoSkipFactor * B^2: below k ~ B pi the poles m pi / L_b of different
  // bonds have not yet spread apart and the levels come in tight clusters.
  std::optional<std::size_t> skip;
  std::size_t realisations = 20;
  std::uint64_t master_seed = 1;
  // Fresh bond lengths per realisation. Graphs without spin data (star,
  // Neumann rose) always resample, since nothing else varies.
  bool resample_lengths = false;
  double bin_width = kDefaultBinWidth;
  double x_max = kDefaultXMax;
  unsigned threads = 1;

  // Debug overrides: fixed lengths / angles instead of sampled ones, or
  // uniform i.i.d. points on [0, N] in place of a spectrum.
  std::vector<double> fixed_lengths;
  std::vector<double> fixed_angles;
  bool poisson_surrogate = false;

  // Counts positive, bin width in (0, 1], x_max >= 1. Throws InvalidArgument.
  void validate() const;

  bool lengths_vary() const;
  std::size_t effective_skip() const;

  // "key = value" pairs describing the run, for file headers.
  std::vector<std::pair<std::string, std::string>> describe() const;
};

struct RealisationInputs {
  std::vector<double> lengths;
  std::vector<double> angles;  // empty for Neumann graphs
};

RealisationInputs realisation_inputs(const ExperimentConfig& config, std::size_t realisation);

Spectrum realise_spectrum(const ExperimentConfig& config, std::size_t realisation);

// Unfolded spectrum of one realisation (or the Poisson surrogate).
UnfoldedSpectrum realise_unfolded(const ExperimentConfig& config, std::size_t realisation);

// Runs fn(0..count-1) on up to `threads` workers; results come back in index
// order. The first exception (by index) is rethrown.
template <class F>
auto parallel_map(std::size_t count, unsigned threads, F&& fn)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

Histogram ensemble_pair_correlation(const ExperimentConfig& config);

FormFactorCurve ensemble_form_factor(const ExperimentConfig& config, std::span<const double> tau,
                                     double window_half_width);

}  // namespace diracrose
