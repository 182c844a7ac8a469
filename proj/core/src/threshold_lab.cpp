#include "fsgraph/threshold_lab.hpp"

#include <cmath>
#include <limits>

#include "fsgraph/errors.hpp"
#include "fsgraph/exchange.hpp"
#include "fsgraph/gadgets.hpp"
#include "fsgraph/embed.hpp"
#include "fsgraph/packing.hpp"
#include "fsgraph/rng.hpp"

namespace fsg {

double SweepCell::frac_connected() const {
  return trials == 0 ? 0.0 : static_cast<double>(connected) / static_cast<double>(trials);
}

double SweepCell::frac_disconnected() const {
  return trials == 0 ? 0.0
                     : static_cast<double>(disconnected) / static_cast<double>(trials);
}

double SweepCell::frac_unknown() const {
  return trials == 0 ? 0.0 : static_cast<double>(unknown) / static_cast<double>(trials);
}

double SweepCell::stderr_connected() const {
  if (trials == 0) return 0.0;
  const double f = frac_connected();
  return std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
}

namespace {

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError(std::string(what) + " must lie in [0,1]");
  }
}

}  // namespace

TrialDecision decide_pair(const Graph& x, const Graph& y, const DecisionMode& mode,
                          std::uint64_t seed) {
  TrialDecision d;
  const int n = x.size();
  d.xy_disconnected = n >= 2 && !(is_connected(x) && is_connected(y));
  const FsInstance inst(x, y);

  if (const auto* exact = std::get_if<ExactDecision>(&mode)) {
    d.outcome = is_fs_connected(inst, exact->cap) ? TrialOutcome::kConnected
                                                  : TrialOutcome::kDisconnected;
    return d;
  }
  const auto& cert = std::get<CertificateDecision>(mode);
  if (d.xy_disconnected) {
    d.outcome = TrialOutcome::kDisconnected;
    return d;
  }
  if (n <= 1) {
    d.outcome = TrialOutcome::kConnected;
    return d;
  }
  PackingResult pack = find_packing(
      x, y, LocalSearchPacking{cert.packing_steps, seed});
  if (pack.status != PackingStatus::kFound && cert.packing_nodes > 0) {
    pack = find_packing(x, y, ExactPacking{cert.packing_nodes});
  }
  if (pack.status == PackingStatus::kFound) {
    d.isolated_certificate = true;
    d.outcome = TrialOutcome::kDisconnected;
    return d;
  }
  // Both X and Y are connected here. FS(K_n, Y) is connected iff Y is, and
  // FS(X, Y) is isomorphic to FS(Y, X).
  if (is_complete(x) || is_complete(y)) {
    d.outcome = TrialOutcome::kConnected;
    return d;
  }
  if (n <= cert.exchange_cap &&
      connectivity_by_exchange(inst, cert.exchange_cap).verdict ==
          ExchangeConnectivity::kConnected) {
    d.outcome = TrialOutcome::kConnected;
    return d;
  }
  d.outcome = TrialOutcome::kUnknown;
  return d;
}

std::pair<Graph, Graph> sweep_sample(int n, double p1, double p2, std::uint64_t seed,
                                     std::uint64_t cell, std::uint64_t trial) {
  const std::uint64_t trial_seed = derive_seed(seed, cell, trial);
  return {gnp(n, p1, derive_seed(trial_seed, 1)), gnp(n, p2, derive_seed(trial_seed, 2))};
}

SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.n < 1) throw ParameterError("sweep needs n >= 1");
  if (cfg.trials < 1) throw ParameterError("sweep needs trials >= 1");
  if (cfg.grid.empty()) throw ParameterError("sweep grid is empty");
  for (const auto& [p1, p2] : cfg.grid) {
    check_probability(p1, "p1");
    check_probability(p2, "p2");
  }
  if (const auto* exact = std::get_if<ExactDecision>(&cfg.mode)) {
    if (exact->cap > kHardDecomposeCap) {
      throw ParameterError("decompose cap above the hard limit");
    }
    if (cfg.n > exact->cap) throw SizeError("exact mode requires n <= cap");
  }

  SweepResult result;
  result.n = cfg.n;
  result.seed = cfg.seed;
  result.cells.reserve(cfg.grid.size());
  for (std::size_t c = 0; c < cfg.grid.size(); ++c) {
    SweepCell cell;
    cell.p1 = cfg.grid[c].first;
    cell.p2 = cfg.grid[c].second;
    cell.trials = cfg.trials;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      const auto [x, y] = sweep_sample(cfg.n, cell.p1, cell.p2, cfg.seed, c, t);
      const TrialDecision d =
          decide_pair(x, y, cfg.mode, derive_seed(cfg.seed, c, t) ^ 0x5eedu);
      cell.xy_disc += d.xy_disconnected;
      cell.iso_cert += d.isolated_certificate;
      switch (d.outcome) {
        case TrialOutcome::kConnected:
          ++cell.connected;
          break;
        case TrialOutcome::kDisconnected:
          ++cell.disconnected;
          break;
        case TrialOutcome::kUnknown:
          ++cell.unknown;
          break;
      }
    }
    result.cells.push_back(cell);
  }
  return result;
}

RegimeMarkers regime_markers(double n, double epsilon) {
  if (!(n >= 3)) throw ParameterError("markers need n >= 3");
  if (!(epsilon > 0 && epsilon < 1)) throw ParameterError("epsilon must lie in (0,1)");
  RegimeMarkers mk;
  mk.n = n;
  mk.epsilon = epsilon;
  const double ln = std::log(n);
  mk.p0 = threshold_p0(n);
  mk.connectivity_product = mk.p0 * mk.p0;
  mk.disconnection_product = (1.0 - epsilon) / (2.0 * n);
  mk.floor_log = ln / n;
  mk.floor_continuous = 2.0 * mk.p0 / std::cbrt(ln);
  mk.m = gadget_m_for_n(n);
  mk.ell = gadget_ell(mk.m);
  if (mk.ell > 0) mk.floor_discrete = mk.p0 / mk.ell;
  mk.vacuous = mk.p0 >= 1.0;
  return mk;
}

SweepResult asymmetry_slice(int n, double product, std::span<const double> ratios,
                            std::uint64_t trials, std::uint64_t seed,
                            const DecisionMode& mode) {
  if (!(product >= 0 && product <= 1)) throw ParameterError("product must lie in [0,1]");
  SweepConfig cfg;
  cfg.n = n;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.mode = mode;
  for (double r : ratios) {
    if (!(r > 0) || !std::isfinite(r)) throw ParameterError("ratio must be positive");
    const double p1 = std::sqrt(product * r);
    const double p2 = std::sqrt(product / r);
    if (p1 > 1.0 || p2 > 1.0) {
      throw ParameterError("ratio pushes a probability above 1");
    }
    cfg.grid.emplace_back(p1, p2);
  }
  return run_sweep(cfg);
}

}  // namespace fsg
