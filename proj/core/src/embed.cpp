#include "fsgraph/embed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "fsgraph/errors.hpp"
#include "fsgraph/rng.hpp"

namespace fsg {

namespace {

void check_pair(const EmbedPair& pair) {
  if (pair.g.size() != pair.h.size()) {
    throw ParameterError("G and H must share the vertex set [m]");
  }
  if (pair.x.size() != pair.y.size()) {
    throw ParameterError("X and Y must have the same number of vertices");
  }
}

void check_sets(const EmbedPair& pair, std::span<const std::vector<int>> sets,
                const Permutation& sigma) {
  check_pair(pair);
  if (static_cast<int>(sets.size()) != pair.g.size()) {
    throw ParameterError("need one target set per vertex of G");
  }
  if (sigma.size() != pair.y.size()) {
    throw ParameterError("bijection size does not match n");
  }
  std::vector<char> used(static_cast<std::size_t>(pair.y.size()), 0);
  for (const auto& s : sets) {
    for (int t : s) {
      if (t < 0 || t >= pair.y.size()) {
        throw ParameterError("target set vertex " + std::to_string(t) +
                             " out of range");
      }
      if (used[t]) {
        throw ParameterError("target sets overlap at vertex " + std::to_string(t));
      }
      used[t] = 1;
    }
  }
}

}  // namespace

bool is_embedding_witness(const EmbedPair& pair,
                          std::span<const std::vector<int>> sets,
                          const Permutation& sigma, std::span<const int> witness) {
  const int m = pair.g.size();
  if (static_cast<int>(witness.size()) != m) return false;
  for (int i = 0; i < m; ++i) {
    if (std::find(sets[i].begin(), sets[i].end(), witness[i]) == sets[i].end()) {
      return false;
    }
  }
  const Permutation inv = inverse(sigma);
  for (const Edge& e : pair.h.edges()) {
    if (!pair.y.has_edge(witness[e.u], witness[e.v])) return false;
  }
  for (const Edge& e : pair.g.edges()) {
    if (!pair.x.has_edge(inv[witness[e.u]], inv[witness[e.v]])) return false;
  }
  return true;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const EmbedPair& pair, std::span<const std::vector<int>> sets,
                  const Permutation& sigma)
      : pair_(pair), inv_(inverse(sigma)), m_(pair.g.size()) {
    order_.resize(static_cast<std::size_t>(m_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return pair.g.degree(a) + pair.h.degree(a) >
             pair.g.degree(b) + pair.h.degree(b);
    });
    domains_.assign(sets.begin(), sets.end());
    assignment_.assign(static_cast<std::size_t>(m_), -1);
  }

  std::optional<std::vector<int>> run() {
    for (const auto& d : domains_) {
      if (d.empty()) return std::nullopt;
    }
    if (search(0, domains_)) return assignment_;
    return std::nullopt;
  }

 private:
  bool compatible(int i, int vi, int j, int vj) const {
    if (pair_.h.has_edge(i, j) && !pair_.y.has_edge(vi, vj)) return false;
    if (pair_.g.has_edge(i, j) && !pair_.x.has_edge(inv_[vi], inv_[vj])) {
      return false;
    }
    return true;
  }

  bool search(int depth, const SetList& domains) {
    if (depth == m_) return true;
    const int var = order_[depth];
    for (int value : domains[var]) {
      assignment_[var] = value;
      // Forward checking: prune the domains of later variables constrained
      // by this one; an emptied domain cuts the branch.
      SetList next = domains;
      bool alive = true;
      for (int k = depth + 1; k < m_ && alive; ++k) {
        const int other = order_[k];
        if (!pair_.g.has_edge(var, other) && !pair_.h.has_edge(var, other)) {
          continue;
        }
        auto& dom = next[other];
        std::erase_if(dom, [&](int t) { return !compatible(var, value, other, t); });
        alive = !dom.empty();
      }
      if (alive && search(depth + 1, next)) return true;
    }
    assignment_[var] = -1;
    return false;
  }

  const EmbedPair& pair_;
  Permutation inv_;
  int m_;
  std::vector<int> order_;
  SetList domains_;
  std::vector<int> assignment_;
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const EmbedPair& pair,
                                               std::span<const std::vector<int>> sets,
                                               const Permutation& sigma) {
  check_sets(pair, sets, sigma);
  return EmbeddingSearch(pair, sets, sigma).run();
}

std::uint64_t QVector::total() const {
  return std::accumulate(q.begin(), q.end(), std::uint64_t{0});
}

QEmbedResult check_q_embeddable(const EmbedPair& pair, const QVector& q,
                                std::uint64_t trials, std::uint64_t seed) {
  check_pair(pair);
  const int m = pair.g.size();
  const int n = pair.y.size();
  if (static_cast<int>(q.q.size()) != m) {
    throw ParameterError("q-vector length must equal m");
  }
  if (q.total() > static_cast<std::uint64_t>(n)) {
    throw ParameterError("sum of q_i exceeds n");
  }
  QEmbedResult result;
  std::vector<int> people(static_cast<std::size_t>(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    std::iota(people.begin(), people.end(), 0);
    rng.shuffle(std::span<int>(people));
    SetList sets(static_cast<std::size_t>(m));
    std::size_t at = 0;
    for (int i = 0; i < m; ++i) {
      sets[i].assign(people.begin() + static_cast<std::ptrdiff_t>(at),
                     people.begin() + static_cast<std::ptrdiff_t>(at + q.q[i]));
      at += q.q[i];
    }
    std::iota(images.begin(), images.end(), 0);
    rng.shuffle(std::span<int>(images));
    Permutation sigma(images);
    ++result.trials_run;
    if (find_embedding(pair, sets, sigma)) continue;

    // Shrinking a set can only remove options, so each accepted removal
    // keeps the list failing.
    SetList small = sets;
    for (auto& s : small) {
      for (std::size_t k = 0; k < s.size() && s.size() > 1;) {
        const int dropped = s[k];
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(k));
        if (find_embedding(pair, small, sigma)) {
          s.insert(s.begin() + static_cast<std::ptrdiff_t>(k), dropped);
          ++k;
        }
      }
    }
    result.counterexample = true;
    result.sets = std::move(sets);
    result.minimized_sets = std::move(small);
    result.sigma = std::move(sigma);
    return result;
  }
  return result;
}

JansonReport janson_hypothesis(const Graph& g, const Graph& h,
                               std::span<const std::uint64_t> q, double p1,
                               double p2, double n, bool record_all) {
  const int m = g.size();
  if (h.size() != m) throw ParameterError("G and H must share the vertex set");
  if (m > kMaxJansonVertices) {
    throw SizeError("subset scan limited to m <= " +
                    std::to_string(kMaxJansonVertices) + " (m=" +
                    std::to_string(m) + ")");
  }
  if (static_cast<int>(q.size()) != m) {
    throw ParameterError("q-vector length must equal m");
  }
  if (!(p1 >= 0 && p1 <= 1 && p2 >= 0 && p2 <= 1)) {
    throw ParameterError("p1, p2 must lie in [0,1]");
  }
  if (!(n > 0)) throw ParameterError("n must be positive");

  JansonReport report;
  std::uint64_t total = 0;
  for (auto v : q) total += v;
  report.q_total = static_cast<double>(total);
  report.q_within_n = report.q_total <= n;

  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  const double log_n = std::log(n);
  // log(3 * 2^{m+1} * Q * log n); a non-positive right side is -inf.
  report.rhs_log = (total == 0 || log_n <= 0)
                       ? kNegInf
                       : std::log(3.0) + (m + 1) * std::log(2.0) +
                             std::log(report.q_total) + std::log(log_n);
  const double log_p1 = p1 > 0 ? std::log(p1) : kNegInf;
  const double log_p2 = p2 > 0 ? std::log(p2) : kNegInf;
  std::vector<double> log_q(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    log_q[i] = q[i] > 0 ? std::log(static_cast<double>(q[i])) : kNegInf;
  }
  std::vector<std::uint32_t> g_rows(static_cast<std::size_t>(m));
  std::vector<std::uint32_t> h_rows(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (g.has_edge(i, j)) g_rows[i] |= 1U << j;
      if (h.has_edge(i, j)) h_rows[i] |= 1U << j;
    }
  }

  // 0 * log(0) terms: an empty exponent contributes a factor of 1.
  auto term = [](int count, double log_p) {
    return count == 0 ? 0.0 : count * log_p;
  };
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    ++report.subsets_checked;
    const auto J = static_cast<std::uint32_t>(mask);
    int eg = 0;
    int eh = 0;
    double lq = 0;
    for (std::uint32_t rest = J; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      eg += std::popcount(g_rows[i] & J);
      eh += std::popcount(h_rows[i] & J);
      lq += log_q[i];
    }
    eg /= 2;
    eh /= 2;
    if (eg + eh == 0) continue;
    ++report.qualifying_subsets;
    const double lhs = term(eg, log_p1) + term(eh, log_p2) + lq;
    const bool ok = lhs >= report.rhs_log;
    if (!ok) report.passed = false;
    if (!ok || record_all) {
      report.rows.push_back({J, eg, eh, lhs, report.rhs_log, ok});
    }
  }
  if (report.passed && report.q_within_n) {
    report.embed_probability_bound = -std::expm1(-report.q_total * log_n);
  }
  return report;
}

double threshold_p0(double n) {
  if (!(n > 1)) throw ParameterError("p0 needs n > 1");
  const double log_n = std::log(n);
  return std::exp(2.0 * std::pow(log_n, 2.0 / 3.0) - 0.5 * log_n);
}

ThresholdQVector threshold_qvector(std::uint64_t n, const GadgetSpec& spec) {
  if (n < 2) throw ParameterError("threshold_qvector needs n >= 2");
  if (spec.m < 1 || spec.ell < 1) {
    throw ParameterError("gadget spec needs m >= 1 and ell >= 1");
  }
  ThresholdQVector out;
  const auto nd = static_cast<long double>(n);
  out.p0 = threshold_p0(static_cast<double>(n));
  auto floor_to_u64 = [&](long double v) {
    constexpr auto kMax = static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 1024);
    if (v >= kMax) {
      out.saturated = true;
      return static_cast<std::uint64_t>(kMax);
    }
    return static_cast<std::uint64_t>(std::floor(v));
  };
  out.gamma_q = floor_to_u64(static_cast<long double>(out.p0) * nd / (5.0L * spec.ell));
  out.other_q = n / (2 * static_cast<std::uint64_t>(spec.m));
  out.qvector.gamma = spec.gamma();
  out.qvector.q.assign(static_cast<std::size_t>(spec.m), out.other_q);
  for (int i : out.qvector.gamma) out.qvector.q[i] = out.gamma_q;
  long double total = 0;
  for (auto v : out.qvector.q) total += static_cast<long double>(v);
  out.q_total = floor_to_u64(total);
  out.q_range_ok = !out.saturated && 3.0L * total >= nd && total <= nd;
  return out;
}

WitnessSets select_witness_sets(const Graph& x, const Graph& y,
                                const Permutation& sigma, int u, int v,
                                const GadgetSpec& spec, const QVector& q,
                                std::uint64_t seed) {
  const int n = y.size();
  if (x.size() != n || sigma.size() != n) {
    throw ParameterError("X, Y and sigma must agree on n");
  }
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
    throw ParameterError("u, v must be distinct vertices of Y");
  }
  if (static_cast<int>(q.q.size()) != spec.m) {
    throw ParameterError("q-vector length must equal m");
  }
  const Permutation inv = inverse(sigma);
  const int xu = inv[u];
  const int xv = inv[v];
  if (!x.has_edge(xu, xv)) {
    throw ParameterError("precondition: {sigma^-1(u), sigma^-1(v)} must be an X-edge");
  }

  // Eligible pool per label.
  std::vector<std::vector<int>> pools(static_cast<std::size_t>(spec.m));
  std::vector<char> constrained(static_cast<std::size_t>(spec.m), 0);
  auto fill = [&](int label, auto&& pred) {
    constrained[label] = 1;
    auto& pool = pools[label];
    for (int t = 0; t < n; ++t) {
      if (t != u && t != v && pred(t)) pool.push_back(t);
    }
  };
  for (int k : {3, 11}) {
    fill(spec.z_label(k), [&](int t) { return x.has_edge(inv[t], xu); });
  }
  for (int k : {5, 9}) {
    fill(spec.z_label(k), [&](int t) { return x.has_edge(inv[t], xv); });
  }
  for (int label : spec.x) fill(label, [&](int t) { return y.has_edge(t, u); });
  for (int label : spec.y) fill(label, [&](int t) { return y.has_edge(t, v); });
  for (int label = 0; label < spec.m; ++label) {
    if (!constrained[label]) fill(label, [](int) { return true; });
  }

  Rng rng(seed);
  for (auto& pool : pools) rng.shuffle(std::span<int>(pool));

  std::vector<int> order(static_cast<std::size_t>(spec.m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (constrained[a] != constrained[b]) return constrained[a] > constrained[b];
    return pools[a].size() < pools[b].size();
  });

  WitnessSets out;
  out.sets.resize(static_cast<std::size_t>(spec.m));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int label : order) {
    auto& chosen = out.sets[label];
    for (int t : pools[label]) {
      if (chosen.size() == q.q[label]) break;
      if (!used[t]) {
        used[t] = 1;
        chosen.push_back(t);
      }
    }
    if (chosen.size() < q.q[label]) {
      out.feasible = false;
      out.failure = "label " + std::to_string(label) + " needs " +
                    std::to_string(q.q[label]) + " vertices, only " +
                    std::to_string(chosen.size()) + " eligible and unused";
      out.sets.clear();
      return out;
    }
  }
  out.feasible = true;
  return out;
}

}  // namespace fsg
