#include "fsgraph/exchange.hpp"

#include <algorithm>
#include <string>

#include "fsgraph/errors.hpp"
#include "lehmer.hpp"

namespace fsg {

const char* to_string(ExchangeStatus status) {
  switch (status) {
    case ExchangeStatus::kExchangeable:
      return "exchangeable";
    case ExchangeStatus::kNotExchangeable:
      return "not_exchangeable";
    case ExchangeStatus::kIndeterminate:
      return "indeterminate";
  }
  return "unknown";
}

namespace {

void check_query(const FsInstance& inst, const ExchangeQuery& q) {
  const int n = inst.n();
  if (q.sigma.size() != n) {
    throw ParameterError("exchange query: bijection size does not match n");
  }
  if (q.u < 0 || q.v < 0 || q.u >= n || q.v >= n) {
    throw ParameterError("exchange query: vertex out of range");
  }
  if (q.u == q.v) throw ParameterError("exchange query needs u != v");
}

}  // namespace

ExchangeVerdict exchangeable(const FsInstance& inst, const FsComponents& table,
                             const ExchangeQuery& q, bool want_witness) {
  check_query(inst, q);
  if (table.n() != inst.n()) {
    throw ParameterError("component table built for a different n");
  }
  const Permutation target = apply_transposition(q.sigma, q.u, q.v);
  ExchangeVerdict verdict;
  verdict.explored = table.vertex_count();
  if (!table.same_component(q.sigma, target)) {
    verdict.status = ExchangeStatus::kNotExchangeable;
    return verdict;
  }
  verdict.status = ExchangeStatus::kExchangeable;
  if (want_witness) {
    // Same component, so an unbounded search is guaranteed to succeed.
    auto path = find_path(inst, q.sigma, target, table.vertex_count() + 1);
    verdict.witness = std::move(path.path);
  }
  return verdict;
}

ExchangeVerdict exchangeable(const FsInstance& inst, const ExchangeQuery& q,
                             const ExchangeMode& mode) {
  check_query(inst, q);
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    const FsComponents table(inst, exact->cap);
    return exchangeable(inst, table, q, exact->want_witness);
  }
  const auto& bounded = std::get<BoundedMode>(mode);
  const Permutation target = apply_transposition(q.sigma, q.u, q.v);
  auto search = find_path(inst, q.sigma, target, bounded.budget);
  ExchangeVerdict verdict;
  verdict.explored = search.explored;
  switch (search.status) {
    case PathStatus::kFound:
      verdict.status = ExchangeStatus::kExchangeable;
      verdict.witness = std::move(search.path);
      break;
    case PathStatus::kNoPath:
      verdict.status = ExchangeStatus::kNotExchangeable;
      break;
    case PathStatus::kBudgetExhausted:
      verdict.status = ExchangeStatus::kIndeterminate;
      break;
  }
  return verdict;
}

ExchangeConnectivityReport connectivity_by_exchange(const FsInstance& inst,
                                                    int cap) {
  ExchangeConnectivityReport report;
  const FsComponents table(inst, cap);
  report.x_connected = is_connected(inst.x());
  if (!report.x_connected) return report;
  if (inst.n() < 2) {
    report.verdict = ExchangeConnectivity::kConnected;
    return report;
  }

  // sigma^{-1}(u), sigma^{-1}(v) adjacent in X means (u,v) = (sigma(a),
  // sigma(b)) for an X-edge {a,b}, and tau_{uv} o sigma is sigma with the
  // images at a and b exchanged.
  const int n = inst.n();
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) weight[i] = factorial(n - 1 - i);
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  std::uint64_t r = 0;
  do {
    const auto home = table.component_of(r);
    for (const Edge& e : inst.x_edges()) {
      ++report.pairs_checked;
      const std::uint64_t offset = detail::swap_rank_offset(p, e.u, e.v, weight);
      const std::uint64_t swapped = p[e.u] < p[e.v] ? r + offset : r - offset;
      if (table.component_of(swapped) != home) {
        report.failure = ExchangeQuery{Permutation(p), p[e.u], p[e.v]};
        return report;
      }
    }
    ++r;
  } while (std::next_permutation(p.begin(), p.end()));
  report.verdict = ExchangeConnectivity::kConnected;
  return report;
}

bool TransferCertificate::fully_verified() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const HypothesisCheck& c) { return c.verified; });
}

namespace {

void check_embedding(const Graph& small, std::span<const int> map,
                     const Graph& big, const std::string& name) {
  if (map.size() != static_cast<std::size_t>(small.size())) {
    throw HypothesisError(name + " must map all " +
                          std::to_string(small.size()) + " vertices");
  }
  std::vector<char> used(static_cast<std::size_t>(big.size()), 0);
  for (std::size_t i = 0; i < map.size(); ++i) {
    const int image = map[i];
    if (image < 0 || image >= big.size()) {
      throw HypothesisError(name + "(" + std::to_string(i) + ") = " +
                            std::to_string(image) + " is out of range");
    }
    if (used[image]) {
      throw HypothesisError(name + " is not injective: vertex " +
                            std::to_string(image) + " hit twice");
    }
    used[image] = 1;
  }
  for (const Edge& e : small.edges()) {
    if (!big.has_edge(map[e.u], map[e.v])) {
      throw HypothesisError(name + " is not edge-preserving: edge {" +
                            std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} maps to non-edge {" + std::to_string(map[e.u]) +
                            "," + std::to_string(map[e.v]) + "}");
    }
  }
}

}  // namespace

TransferCertificate transfer_exchangeability(
    const Graph& g, const Graph& h, std::span<const int> phi,
    std::span<const int> psi, const FsInstance& target,
    const Permutation& sigma, const TransferOptions& options) {
  if (g.size() != h.size() || g.size() < 2) {
    throw ParameterError("small pair must share a vertex set of size >= 2");
  }
  if (sigma.size() != target.n()) {
    throw ParameterError("bijection size does not match the target instance");
  }
  const int small_n = g.size();
  TransferCertificate cert;

  check_embedding(g, phi, target.x(), "phi");
  cert.checks.push_back({"phi embeds G into X", true, ""});
  check_embedding(h, psi, target.y(), "psi");
  cert.checks.push_back({"psi embeds H into Y", true, ""});
  for (int i = 0; i < small_n; ++i) {
    if (sigma[phi[i]] != psi[i]) {
      throw HypothesisError("sigma o phi != psi at vertex " + std::to_string(i) +
                            ": sigma(phi) = " + std::to_string(sigma[phi[i]]) +
                            ", psi = " + std::to_string(psi[i]));
    }
  }
  cert.checks.push_back({"sigma o phi = psi", true, ""});

  const int a = small_n - 2;
  const int b = small_n - 1;
  const std::string pair_name = "small pair: vertices " + std::to_string(a) +
                                "," + std::to_string(b) +
                                " exchangeable from identity";
  const FsInstance small(g, h);
  const ExchangeQuery q{Permutation::identity(small_n), a, b};
  switch (options.small_pair) {
    case SmallPairCheck::kAssume:
      cert.checks.push_back({pair_name, false, "assumed by caller"});
      break;
    case SmallPairCheck::kExact: {
      const auto verdict =
          exchangeable(small, q, ExactMode{options.cap, false});
      if (verdict.status != ExchangeStatus::kExchangeable) {
        throw HypothesisError(pair_name + " is false (exact decomposition)");
      }
      cert.checks.push_back({pair_name, true, "exact decomposition"});
      break;
    }
    case SmallPairCheck::kBounded: {
      const auto verdict = exchangeable(small, q, BoundedMode{options.budget});
      if (verdict.status == ExchangeStatus::kNotExchangeable) {
        throw HypothesisError(pair_name + " is false (search exhausted)");
      }
      if (verdict.status == ExchangeStatus::kExchangeable) {
        cert.checks.push_back({pair_name, true,
                               "witness path of length " +
                                   std::to_string(verdict.witness.size() - 1)});
      } else {
        cert.checks.push_back(
            {pair_name, false,
             "bounded search indeterminate after " +
                 std::to_string(verdict.explored) + " nodes"});
      }
      break;
    }
  }
  cert.u = psi[a];
  cert.v = psi[b];
  return cert;
}

}  // namespace fsg
