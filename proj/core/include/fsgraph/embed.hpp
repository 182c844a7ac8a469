#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsgraph/gadgets.hpp"
#include "fsgraph/graph.hpp"
#include "fsgraph/permutation.hpp"

namespace fsg {

/// A small pair (G,H) on [m] and a large pair (X,Y) on n vertices.
struct EmbedPair {
  const Graph& g;
  const Graph& h;
  const Graph& x;
  const Graph& y;
};

using SetList = std::vector<std::vector<int>>;

/// Looks for v_i in sets[i] with {i,j} in E(H) => {v_i,v_j} in E(Y) and
/// {i,j} in E(G) => {sigma^-1(v_i), sigma^-1(v_j)} in E(X). The search is
/// exhaustive, so nullopt means no such tuple exists. Throws ParameterError
/// on overlapping or out-of-range sets.
std::optional<std::vector<int>> find_embedding(const EmbedPair& pair,
                                               std::span<const std::vector<int>> sets,
                                               const Permutation& sigma);

/// Direct check of both edge implications for a candidate tuple.
bool is_embedding_witness(const EmbedPair& pair,
                          std::span<const std::vector<int>> sets,
                          const Permutation& sigma, std::span<const int> witness);

struct QVector {
  std::vector<std::uint64_t> q;
  /// Index set Gamma (may be empty for hand-made vectors).
  std::vector<int> gamma;

  std::uint64_t total() const;
};

struct QEmbedResult {
  bool counterexample = false;
  std::uint64_t trials_run = 0;
  /// Failing trial only: the sampled sets, a greedily shrunk failing
  /// sub-list, and the bijection.
  SetList sets;
  SetList minimized_sets;
  std::optional<Permutation> sigma;
};

/// Samples `trials` random disjoint set lists with |V_i| = q_i and random
/// bijections. A failure is a genuine counterexample to
/// (q_1..q_m)-embeddability; all-pass is evidence only.
QEmbedResult check_q_embeddable(const EmbedPair& pair, const QVector& q,
                                std::uint64_t trials, std::uint64_t seed);

struct JansonRow {
  std::uint32_t mask = 0;  // bit i set iff vertex i is in J
  int edges_g = 0;
  int edges_h = 0;
  double lhs_log = 0;
  double rhs_log = 0;
  bool passed = false;
};

struct JansonReport {
  /// Logarithms are natural; recorded so every consumer sees the convention.
  std::string log_base = "e";
  std::uint64_t subsets_checked = 0;
  std::uint64_t qualifying_subsets = 0;
  std::vector<JansonRow> rows;  // failing rows, or all qualifying rows
  bool passed = true;
  double q_total = 0;
  /// Q <= n; the inequality is still evaluated when this fails.
  bool q_within_n = true;
  double rhs_log = 0;
  /// 1 - n^{-Q}, present when every qualifying subset passes and Q <= n.
  std::optional<double> embed_probability_bound;
};

inline constexpr int kMaxJansonVertices = 25;

/// Evaluates p1^{|E(G|_J)|} p2^{|E(H|_J)|} prod_{j in J} q_j
///   >= 3 * 2^{m+1} * Q * log n
/// in log space for every J with at least one G or H edge. Throws SizeError
/// for m > 25.
JansonReport janson_hypothesis(const Graph& g, const Graph& h,
                               std::span<const std::uint64_t> q, double p1,
                               double p2, double n, bool record_all = false);

/// exp(2 (log n)^{2/3}) / sqrt(n).
double threshold_p0(double n);

struct ThresholdQVector {
  QVector qvector;
  double p0 = 0;
  std::uint64_t gamma_q = 0;  // floor(p0 n / (5 ell))
  std::uint64_t other_q = 0;  // floor(n / (2m))
  std::uint64_t q_total = 0;
  /// n/3 <= Q <= n; false flags that n is too small for the regime.
  bool q_range_ok = false;
  bool saturated = false;
};

/// q_i = floor(p0 n/(5 ell)) on Gamma and floor(n/(2m)) elsewhere, with
/// Gamma taken from the gadget labels.
ThresholdQVector threshold_qvector(std::uint64_t n, const GadgetSpec& spec);

struct WitnessSets {
  bool feasible = false;
  SetList sets;  // indexed by gadget label 0..m-1
  std::string failure;
};

/// Chooses pairwise disjoint V_1..V_m in V(Y) \ {u,v} with |V_i| = q_i such
/// that sigma^-1(V_z3), sigma^-1(V_z11) lie in N_X(sigma^-1(u)),
/// sigma^-1(V_z5), sigma^-1(V_z9) in N_X(sigma^-1(v)), V_x. in N_Y(u) and
/// V_y. in N_Y(v). Greedy, most constrained label first.
WitnessSets select_witness_sets(const Graph& x, const Graph& y,
                                const Permutation& sigma, int u, int v,
                                const GadgetSpec& spec, const QVector& q,
                                std::uint64_t seed);

}  // namespace fsg
