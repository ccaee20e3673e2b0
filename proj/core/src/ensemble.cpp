#include "diracrose/ensemble.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "diracrose/datafile.hpp"
#include "diracrose/errors.hpp"
#include "diracrose/rng.hpp"
#include "diracrose/sampling.hpp"

namespace diracrose {

namespace {

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_number(values[i]);
  }
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (bonds == 0) throw InvalidArgument("--bonds must be positive");
  if (eigenvalues == 0) throw InvalidArgument("--eigenvalues must be positive");
  if (realisations == 0) throw InvalidArgument("--realisations must be positive");
  if (!(bin_width > 0.0 && bin_width <= 1.0)) throw InvalidArgument("--bin-width must lie in (0, 1]");
  if (!(x_max >= 1.0)) throw InvalidArgument("--x-max must be at least 1");
  if (!fixed_lengths.empty() && fixed_lengths.size() != bonds) {
    throw InvalidArgument("--lengths must list exactly --bonds values");
  }
  if (!fixed_angles.empty() && fixed_angles.size() != bonds) {
    throw InvalidArgument("--angles must list exactly --bonds values");
  }
  if (!fixed_angles.empty() && graph != GraphKind::dirac_rose) {
    throw InvalidArgument("--angles only applies to dirac-rose");
  }
}

bool ExperimentConfig::lengths_vary() const {
  if (!fixed_lengths.empty()) return false;
  return resample_lengths || graph != GraphKind::dirac_rose;
}

std::size_t ExperimentConfig::effective_skip() const {
  return skip.value_or(kAutoSkipFactor * bonds * bonds);
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::describe() const {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("graph", std::string(to_string(graph)));
  kv.emplace_back("bonds", std::to_string(bonds));
  kv.emplace_back("eigenvalues", std::to_string(eigenvalues));
  kv.emplace_back("skip", std::to_string(effective_skip()));
  kv.emplace_back("realisations", std::to_string(realisations));
  kv.emplace_back("seed", std::to_string(master_seed));
  kv.emplace_back("resample_lengths", lengths_vary() ? "true" : "false");
  kv.emplace_back("bin_width", format_number(bin_width));
  kv.emplace_back("x_max", format_number(x_max));
  kv.emplace_back("unfolding", "x = k * sum(L) / pi");
  if (!fixed_lengths.empty()) kv.emplace_back("lengths", join(fixed_lengths));
  if (!fixed_angles.empty()) kv.emplace_back("angles", join(fixed_angles));
  if (poisson_surrogate) kv.emplace_back("surrogate", "poisson");
  return kv;
}

RealisationInputs realisation_inputs(const ExperimentConfig& config, std::size_t realisation) {
  RealisationInputs in;
  if (!config.fixed_lengths.empty()) {
    in.lengths = config.fixed_lengths;
  } else {
    const std::uint64_t stream = config.lengths_vary() ? realisation : 0;
    in.lengths = sample_bond_lengths(
                     config.bonds,
                     RngStream(config.master_seed, stream, StreamPurpose::bond_lengths))
                     .values();
  }
  if (config.graph == GraphKind::dirac_rose) {
    if (!config.fixed_angles.empty()) {
      in.angles = config.fixed_angles;
    } else {
      in.angles = sample_spin_configuration(
                      config.bonds,
                      RngStream(config.master_seed, realisation, StreamPurpose::spins))
                      .angles();
    }
  }
  return in;
}

Spectrum realise_spectrum(const ExperimentConfig& config, std::size_t realisation) {
  const auto in = realisation_inputs(config, realisation);
  Spectrum spec;
  switch (config.graph) {
    case GraphKind::dirac_rose:
      spec = dirac_rose_spectrum(in.lengths, in.angles, config.eigenvalues, config.effective_skip());
      break;
    case GraphKind::neumann_star:
      spec = neumann_star_spectrum(in.lengths, config.eigenvalues, config.effective_skip());
      break;
    case GraphKind::neumann_rose:
      spec = neumann_rose_spectrum(in.lengths, config.eigenvalues, config.effective_skip());
      break;
  }
  spec.provenance = Provenance{config.master_seed, realisation};
  return spec;
}

UnfoldedSpectrum realise_unfolded(const ExperimentConfig& config, std::size_t realisation) {
  if (!config.poisson_surrogate) return unfold(realise_spectrum(config, realisation));
  auto engine = RngStream(config.master_seed, realisation, StreamPurpose::surrogate).engine();
  const double n = static_cast<double>(config.eigenvalues);
  std::vector<double> points(config.eigenvalues);
  for (auto& x : points) x = n * engine.uniform_open();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return unfolded_points(std::move(points));
}

Histogram ensemble_pair_correlation(const ExperimentConfig& config) {
  config.validate();
  const auto parts = parallel_map(config.realisations, config.threads, [&](std::size_t r) {
    return pair_correlation(realise_unfolded(config, r), config.bin_width, config.x_max);
  });
  return average_histograms(parts);
}

FormFactorCurve ensemble_form_factor(const ExperimentConfig& config, std::span<const double> tau,
                                     double window_half_width) {
  config.validate();
  const auto parts = parallel_map(config.realisations, config.threads, [&](std::size_t r) {
    return empirical_form_factor(realise_unfolded(config, r), tau, window_half_width);
  });
  return average_form_factors(parts);
}

}  // namespace diracrose
