#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <diracrose/diracrose.hpp>

namespace dr = diracrose;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumerical = 3, kIo = 4 };

struct Common {
  std::string graph = "dirac-rose";
  std::string out = "diracrose";
  dr::ExperimentConfig config;
};

std::string numbered(const std::string& prefix, const std::string& what, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04zu", index);
  return prefix + "-" + what + "-" + buf + ".dat";
}

dr::DataFile headed(const dr::ExperimentConfig& config, const std::string& command) {
  dr::DataFile file;
  file.add("command", command);
  file.add("provenance", std::string(dr::provenance()));
  for (auto& [k, v] : config.describe()) file.add(k, v);
  return file;
}

std::vector<double> grid(double from, double to, double step) {
  if (!(step > 0.0) || !(to >= from)) throw dr::InvalidArgument("range needs from <= to and step > 0");
  const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = from + static_cast<double>(i) * step;
  return g;
}

void finalise(Common& c) {
  c.config.graph = dr::parse_graph_kind(c.graph);
  if (c.config.threads == 0) c.config.threads = std::max(1u, std::thread::hardware_concurrency());
  c.config.validate();
}

int run_spectrum(Common& c) {
  finalise(c);
  if (c.config.poisson_surrogate) throw dr::InvalidArgument("--poisson does not apply to spectrum");
  const auto& cfg = c.config;
  auto spectra = dr::parallel_map(cfg.realisations, cfg.threads,
                                  [&](std::size_t r) { return dr::realise_spectrum(cfg, r); });
  dr::DataFile manifest = headed(cfg, "spectrum");
  manifest.add("columns", "realisation length_stream spin_stream roots skipped_intervals pole_adjacent_roots");
  for (std::size_t r = 0; r < spectra.size(); ++r) {
    const auto& s = spectra[r];
    dr::DataFile file = headed(cfg, "spectrum");
    file.add("realisation", std::to_string(r));
    file.add("total_length", dr::format_number(s.total_length));
    file.add("skipped_intervals", std::to_string(s.diagnostics.skipped_intervals));
    file.add("pole_adjacent_roots", std::to_string(s.diagnostics.pole_adjacent_roots));
    file.add("columns", "n k");
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
      file.rows.push_back({static_cast<double>(cfg.effective_skip() + i + 1), s.roots[i]});
    }
    file.write(numbered(c.out, "spectrum", r));
    const double length_stream = cfg.lengths_vary() ? static_cast<double>(r) : 0.0;
    const double spin_stream = cfg.graph == dr::GraphKind::dirac_rose ? static_cast<double>(r) : -1.0;
    manifest.rows.push_back({static_cast<double>(r), length_stream, spin_stream,
                             static_cast<double>(s.roots.size()),
                             static_cast<double>(s.diagnostics.skipped_intervals),
                             static_cast<double>(s.diagnostics.pole_adjacent_roots)});
  }
  manifest.write(c.out + "-manifest.dat");
  return kOk;
}

int run_paircorr(Common& c) {
  finalise(c);
  const dr::Histogram h = dr::ensemble_pair_correlation(c.config);
  dr::DataFile file = headed(c.config, "paircorr");
  file.add("reference_levels", std::to_string(h.level_count));
  file.add("columns", "x R2");
  for (std::size_t b = 0; b < h.bins(); ++b) file.rows.push_back({h.centre(b), h.values[b]});
  file.write(c.out + "-paircorr.dat");
  return kOk;
}

struct TauRange {
  double from = 0.05, to = 3.0, step = 0.05, window = 500.0;
};

int run_formfactor(Common& c, const TauRange& t) {
  finalise(c);
  const auto tau = grid(t.from, t.to, t.step);
  if (tau.front() <= 0.0) throw dr::InvalidArgument("tau grid must be positive");
  const dr::FormFactorCurve k = dr::ensemble_form_factor(c.config, tau, t.window);
  dr::DataFile file = headed(c.config, "formfactor");
  file.add("window_half_width", dr::format_number(t.window));
  file.add("segments", std::to_string(k.segment_count));
  file.add("columns", "tau K_empirical K_predicted");
  for (std::size_t i = 0; i < tau.size(); ++i) {
    file.rows.push_back({tau[i], k.values[i], dr::form_factor_prediction(tau[i])});
  }
  file.write(c.out + "-formfactor.dat");
  return kOk;
}

int run_predict(const std::string& out, const std::string& family_name, double from, double to,
                double step) {
  const auto family = dr::parse_prediction_family(family_name);
  const auto g = grid(from, to, step);
  const dr::PredictionCurve curve = dr::predict_curve(family, g);
  dr::DataFile file;
  file.add("command", "predict");
  file.add("provenance", std::string(dr::provenance()));
  file.add("family", std::string(dr::to_string(family)));
  if (family == dr::PredictionFamily::rose_small) {
    const auto c = dr::small_x_constant_quadrature();
    file.add("c", dr::format_number(c.value));
    file.add("c_error_estimate", dr::format_number(c.error_estimate));
  }
  file.add("columns", family == dr::PredictionFamily::form_factor ? "tau K" : "x R2");
  for (std::size_t i = 0; i < g.size(); ++i) file.rows.push_back({curve.grid[i], curve.values[i]});
  file.write(out + "-predict-" + std::string(dr::to_string(family)) + ".dat");
  return kOk;
}

int run_constant_c(std::size_t samples, double tolerance, std::uint64_t seed, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto q = dr::small_x_constant_quadrature(tolerance);
  const auto mc = dr::small_x_constant_montecarlo(
      samples, dr::RngStream(seed, 0, dr::StreamPurpose::monte_carlo), threads);
  const bool pass = std::abs(q.value - mc.mean) < 4.0 * mc.standard_error;
  std::printf("quadrature  c = %.12f  (error estimate %.3g, X = %g)\n", q.value, q.error_estimate,
              q.truncation);
  std::printf("monte-carlo c = %.6f +- %.6g  (%zu samples)\n", mc.mean, mc.standard_error, mc.samples);
  std::printf("slope pi c / 6 = %.9f\n", M_PI * q.value / 6.0);
  std::printf("verdict: %s\n", pass ? "PASS" : "FAIL");
  return kOk;
}

double mean_large_deviation(const dr::Histogram& h, double lo, double hi) {
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t b = 0; b < h.bins(); ++b) {
    const double x = h.centre(b);
    if (x < lo || x > hi) continue;
    sum += std::abs(h.values[b] - dr::predict_r2_large(x, dr::GraphFamily::rose));
    ++n;
  }
  return n ? sum / static_cast<double>(n) : 0.0;
}

int run_compare(Common& c, std::vector<std::size_t> bond_list) {
  finalise(c);
  if (bond_list.empty()) bond_list = {21, 61, 101};
  std::vector<dr::Histogram> hists;
  for (std::size_t b : bond_list) {
    dr::ExperimentConfig cfg = c.config;
    cfg.graph = dr::GraphKind::dirac_rose;
    cfg.bonds = b;
    cfg.fixed_lengths.clear();
    cfg.fixed_angles.clear();
    cfg.validate();
    hists.push_back(dr::ensemble_pair_correlation(cfg));
  }
  dr::DataFile diff = headed(c.config, "compare");
  std::string cols = "x";
  std::string means;
  bool decreasing = true;
  double previous = INFINITY;
  for (std::size_t i = 0; i < bond_list.size(); ++i) {
    cols += " B" + std::to_string(bond_list[i]);
    const double m = mean_large_deviation(hists[i], 2.0, 10.0);
    means += (i ? "," : "") + dr::format_number(m);
    decreasing = decreasing && m < previous;
    previous = m;
  }
  diff.add("bond_list", [&] {
    std::string s;
    for (std::size_t i = 0; i < bond_list.size(); ++i) s += (i ? "," : "") + std::to_string(bond_list[i]);
    return s;
  }());
  diff.add("mean_abs_deviation_2_10", means);
  diff.add("trend", decreasing ? "decreasing" : "not-decreasing");
  diff.add("columns", cols);
  for (std::size_t b = 0; b < hists.front().bins(); ++b) {
    const double x = hists.front().centre(b);
    if (x <= 0.5) continue;
    std::vector<double> row{x};
    for (const auto& h : hists) row.push_back(std::abs(h.values[b] - dr::predict_r2_large(x, dr::GraphFamily::rose)));
    diff.rows.push_back(std::move(row));
  }
  diff.write(c.out + "-compare.dat");

  dr::ExperimentConfig rose = c.config;
  rose.graph = dr::GraphKind::dirac_rose;
  dr::ExperimentConfig star = rose;
  star.graph = dr::GraphKind::neumann_star;
  star.fixed_angles.clear();
  const dr::Histogram hr = dr::ensemble_pair_correlation(rose);
  const dr::Histogram hs = dr::ensemble_pair_correlation(star);
  dr::DataFile sr = headed(rose, "compare");
  sr.add("columns", "x R2_dirac_rose R2_neumann_star");
  for (std::size_t b = 0; b < hr.bins(); ++b) sr.rows.push_back({hr.centre(b), hr.values[b], hs.values[b]});
  sr.write(c.out + "-compare-star-rose.dat");
  return kOk;
}

void add_common(CLI::App* sub, Common& c) {
  auto& cfg = c.config;
  sub->add_option("--graph", c.graph, "dirac-rose | neumann-star | neumann-rose")->capture_default_str();
  sub->add_option("--bonds", cfg.bonds, "number of bonds B")->capture_default_str();
  sub->add_option("--eigenvalues", cfg.eigenvalues, "eigenvalues per realisation")->capture_default_str();
  sub->add_option("--skip", cfg.skip, "lowest eigenvalues left out of each realisation (default 4 B^2)");
  sub->add_option("--realisations", cfg.realisations, "number of realisations")->capture_default_str();
  sub->add_option("--seed", cfg.master_seed, "master seed")->capture_default_str();
  sub->add_option("--bin-width", cfg.bin_width, "histogram bin width")->capture_default_str();
  sub->add_option("--x-max", cfg.x_max, "largest separation binned")->capture_default_str();
  sub->add_option("--out", c.out, "output path prefix")->capture_default_str();
  sub->add_flag("--resample-lengths", cfg.resample_lengths, "fresh bond lengths per realisation");
  sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)")->capture_default_str();
  sub->add_option("--lengths", cfg.fixed_lengths, "debug: fixed bond lengths")->delimiter(',');
  sub->add_option("--angles", cfg.fixed_angles, "debug: fixed spin angles")->delimiter(',');
  sub->add_flag("--poisson", cfg.poisson_surrogate, "debug: uniform i.i.d. surrogate spectra");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral statistics of Dirac rose and Neumann quantum graphs"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file; flags take precedence");
  app.set_version_flag("--version", std::string(dr::provenance()));

  Common common;
  common.config.threads = 0;
  TauRange tau;
  std::string family = "rose-large";
  double from = 1.0, to = 10.0, step = 0.05;
  std::size_t samples = 1000000;
  double tolerance = 1e-10;
  std::vector<std::size_t> bond_list;

  auto* spectrum = app.add_subcommand("spectrum", "write eigenvalues per realisation and a manifest");
  auto* paircorr = app.add_subcommand("paircorr", "ensemble pair-correlation function");
  auto* formfactor = app.add_subcommand("formfactor", "empirical and predicted form factor");
  auto* predict = app.add_subcommand("predict", "sample an analytic prediction");
  auto* constant = app.add_subcommand("constant-c", "small-x constant by quadrature and Monte Carlo");
  auto* compare = app.add_subcommand("compare", "deviation from the large-x series across B; star vs rose");

  // Shared flags live on the root app so config-file keys apply to every subcommand.
  add_common(&app, common);
  for (auto* sub : {spectrum, paircorr, formfactor, predict, constant, compare}) sub->fallthrough();

  formfactor->add_option("--tau-min", tau.from)->capture_default_str();
  formfactor->add_option("--tau-max", tau.to)->capture_default_str();
  formfactor->add_option("--tau-step", tau.step)->capture_default_str();
  formfactor->add_option("--window", tau.window, "Welch segment half-width")->capture_default_str();

  predict->add_option("--family", family, "rose-small | rose-large | star-small | star-large | formfactor")
      ->capture_default_str();
  predict->add_option("--from", from)->capture_default_str();
  predict->add_option("--to", to)->capture_default_str();
  predict->add_option("--step", step)->capture_default_str();

  constant->add_option("--samples", samples)->capture_default_str();
  constant->add_option("--tolerance", tolerance)->capture_default_str();

  compare->add_option("--bond-list", bond_list, "B values (default 21,61,101)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) return run_spectrum(common);
    if (*paircorr) return run_paircorr(common);
    if (*formfactor) return run_formfactor(common, tau);
    if (*predict) return run_predict(common.out, family, from, to, step);
    if (*constant) return run_constant_c(samples, tolerance, common.config.master_seed, common.config.threads);
    if (*compare) return run_compare(common, bond_list);
  } catch (const dr::InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const dr::OutOfDomain& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const dr::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}
