#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "fsgraph/fs_graph.hpp"

namespace fsg {

struct ExactDecision {
  int cap = kDefaultDecomposeCap;
};

/// One-sided decisions. Anything not certified is reported as unknown.
struct CertificateDecision {
  /// connectivity_by_exchange is attempted only when n <= exchange_cap.
  int exchange_cap = 7;
  /// Local search steps tried before the exact packing search.
  std::uint64_t packing_steps = 20'000;
  std::uint64_t packing_nodes = 200'000;
};

using DecisionMode = std::variant<ExactDecision, CertificateDecision>;

struct SweepConfig {
  int n = 0;
  std::vector<std::pair<double, double>> grid;  // (p1, p2)
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  DecisionMode mode = ExactDecision{};
};

struct SweepCell {
  double p1 = 0;
  double p2 = 0;
  std::uint64_t trials = 0;
  std::uint64_t connected = 0;
  std::uint64_t disconnected = 0;
  std::uint64_t unknown = 0;
  /// Disconnected because a packing (isolated vertex) was found.
  std::uint64_t iso_cert = 0;
  /// X or Y itself was disconnected.
  std::uint64_t xy_disc = 0;

  double frac_connected() const;
  double frac_disconnected() const;
  double frac_unknown() const;
  /// sqrt(f (1 - f) / trials) for f = frac_connected().
  double stderr_connected() const;
};

struct SweepResult {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<SweepCell> cells;
};

enum class TrialOutcome { kConnected, kDisconnected, kUnknown };

struct TrialDecision {
  TrialOutcome outcome = TrialOutcome::kUnknown;
  bool xy_disconnected = false;
  bool isolated_certificate = false;
};

/// Decides a single pair the way run_sweep does. The seed only drives the
/// local packing search in certificate mode.
TrialDecision decide_pair(const Graph& x, const Graph& y, const DecisionMode& mode,
                          std::uint64_t seed = 0);

/// Per-trial seed is derive_seed(seed, cell, trial); X and Y draw from
/// streams 1 and 2 of it.
SweepResult run_sweep(const SweepConfig& cfg);

/// Sampled pair for a given cell and trial, as used by run_sweep.
std::pair<Graph, Graph> sweep_sample(int n, double p1, double p2, std::uint64_t seed,
                                     std::uint64_t cell, std::uint64_t trial);

struct RegimeMarkers {
  double n = 0;
  double epsilon = 0;
  double p0 = 0;
  /// p1 p2 = p0^2
  double connectivity_product = 0;
  /// p1 p2 = (1 - eps) / (2n)
  double disconnection_product = 0;
  /// p = log n / n
  double floor_log = 0;
  /// p = 2 p0 / (log n)^{1/3}
  double floor_continuous = 0;
  /// Floored variant: m = floor((log n)^{2/3}), ell = floor(floor(sqrt m) / 2),
  /// p = p0 / ell. Absent when ell = 0.
  int m = 0;
  int ell = 0;
  std::optional<double> floor_discrete;
  /// p0 >= 1: the asymptotic statements say nothing at this n.
  bool vacuous = false;
};

/// Natural log throughout. n >= 3 and 0 < epsilon < 1.
RegimeMarkers regime_markers(double n, double epsilon = 0.1);

/// Holds p1 p2 = product and varies r = p1 / p2: p1 = sqrt(product r),
/// p2 = sqrt(product / r).
SweepResult asymmetry_slice(int n, double product, std::span<const double> ratios,
                            std::uint64_t trials, std::uint64_t seed,
                            const DecisionMode& mode = ExactDecision{});

}  // namespace fsg
