#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace diracrose {

enum class GraphKind { dirac_rose, neumann_star, neumann_rose };

std::string_view to_string(GraphKind kind);
GraphKind parse_graph_kind(std::string_view name);  // throws InvalidArgument

// Where a Neumann-rose eigenvalue comes from: a root of sum tan(k L_b / 2),
// a bond-localised point 2 m pi / L_b, or both at once (B = 1).
enum class RootOrigin : std::uint8_t { secular, bond_localised, coincident };

// Closer than this (absolute, in k) two poles are treated as one and the
// interval between them is skipped.
inline constexpr double kPoleCollision = 1e-13;

// Target bracket width for refined roots (absolute in k). Widened to a few
// ulps when k is so large that 1e-12 is below double resolution.
inline constexpr double kRootTolerance = 1e-12;

struct Pole {
  double position;
  std::size_t bond;
  std::int64_t index;  // position == index * pi / L[bond]
};

struct SecularValue {
  double value;
  double derivative;
};

struct SolverDiagnostics {
  std::size_t skipped_intervals = 0;    // pole pairs closer than kPoleCollision
  std::size_t pole_adjacent_roots = 0;  // root sits within the pole offset
};

struct Provenance {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

// Distinct positive eigenvalues in increasing order. Kramers partners of the
// Dirac rose are not duplicated.
struct Spectrum {
  GraphKind kind = GraphKind::dirac_rose;
  std::size_t bonds = 0;
  double total_length = 0.0;  // sum_b L_b of the graph that was solved
  double k_max = 0.0;         // largest pole position generated
  std::vector<double> roots;
  std::vector<RootOrigin> origins;  // parallel to roots
  SolverDiagnostics diagnostics;
  std::optional<Provenance> provenance;

  std::size_t size() const noexcept { return roots.size(); }
};

// z(x, theta) = (cos theta - cos x) / sin x. Throws PoleProximity within
// 1e-13 of a multiple of pi.
double z_eval(double x, double theta);

// Z(k) = sum_b z(k L_b, theta_b) and Z'(k) = sum_b L_b (1 - cos(kL_b) cos theta_b) / sin^2(kL_b).
SecularValue secular_eval(double k, std::span<const double> lengths,
                          std::span<const double> angles);

// All poles m pi / L_b in (0, k_max], ascending (ties broken by bond index).
std::vector<Pole> pole_stream(std::span<const double> lengths, double k_max);

// Number of poles m pi / L_b of Z in (0, k], in the same double arithmetic as pole_stream.
std::size_t pole_count(std::span<const double> lengths, double k);

// Positive roots of Z, one per inter-pole interval, in increasing order. The
// `skip` lowest roots are not computed and n_roots are returned after them.
Spectrum dirac_rose_spectrum(std::span<const double> lengths, std::span<const double> angles,
                             std::size_t n_roots, std::size_t skip = 0);

// Positive roots of sum_b tan(k l_b) = 0 for a star with bond lengths l_b.
Spectrum neumann_star_spectrum(std::span<const double> star_lengths, std::size_t n_roots,
                               std::size_t skip = 0);

// Neumann rose spectrum: roots of sum_b tan(k L_b / 2) = 0 merged with the
// bond-localised points 2 m pi / L_b.
Spectrum neumann_rose_spectrum(std::span<const double> lengths, std::size_t n_roots,
                               std::size_t skip = 0);

}  // namespace diracrose
