#include "fsgraph/packing.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "fsgraph/errors.hpp"
#include "fsgraph/rng.hpp"

namespace fsg {

const char* to_string(PackingStatus status) {
  switch (status) {
    case PackingStatus::kFound:
      return "found";
    case PackingStatus::kNoneExists:
      return "none_exists";
    case PackingStatus::kIndeterminate:
      return "indeterminate";
  }
  return "unknown";
}

std::uint64_t packing_conflicts(const Graph& x, const Graph& y,
                                const Permutation& sigma) {
  std::uint64_t conflicts = 0;
  for (const Edge& e : x.edges()) conflicts += y.has_edge(sigma[e.u], sigma[e.v]);
  return conflicts;
}

namespace {

using Row = std::vector<std::uint64_t>;

class ExactPacker {
 public:
  ExactPacker(const Graph& x, const Graph& y, std::uint64_t budget)
      : x_(x), y_(y), n_(x.size()), words_((x.size() + 63) / 64), budget_(budget) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return x.degree(a) > x.degree(b); });
    image_.assign(static_cast<std::size_t>(n_), -1);
  }

  PackingResult run() {
    PackingResult result;
    std::vector<Row> domains(static_cast<std::size_t>(n_), Row(words_, 0));
    for (auto& d : domains) {
      for (int t = 0; t < n_; ++t) d[t >> 6] |= std::uint64_t{1} << (t & 63);
    }
    const bool found = search(0, domains);
    result.stats.nodes = nodes_;
    if (found) {
      result.status = PackingStatus::kFound;
      result.sigma = Permutation(image_);
    } else {
      result.status = out_of_budget_ ? PackingStatus::kIndeterminate
                                     : PackingStatus::kNoneExists;
    }
    return result;
  }

 private:
  bool search(int depth, const std::vector<Row>& domains) {
    if (depth == n_) return true;
    const int a = order_[depth];
    const Row& dom = domains[a];
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = dom[w]; bits != 0; bits &= bits - 1) {
        if (++nodes_ > budget_) {
          out_of_budget_ = true;
          return false;
        }
        const int t = static_cast<int>(w * 64 + std::countr_zero(bits));
        image_[a] = t;
        std::vector<Row> next = domains;
        bool alive = true;
        const auto yrow = y_.row(t);
        for (int k = depth + 1; k < n_ && alive; ++k) {
          const int c = order_[k];
          Row& dc = next[c];
          dc[t >> 6] &= ~(std::uint64_t{1} << (t & 63));
          if (x_.has_edge(a, c)) {
            // c's image must avoid N_Y(t).
            for (std::size_t i = 0; i < words_; ++i) dc[i] &= ~yrow[i];
          }
          alive = std::any_of(dc.begin(), dc.end(),
                              [](std::uint64_t word) { return word != 0; });
        }
        if (alive && search(depth + 1, next)) return true;
        if (out_of_budget_) return false;
      }
    }
    image_[a] = -1;
    return false;
  }

  const Graph& x_;
  const Graph& y_;
  int n_;
  std::size_t words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<int> order_;
  std::vector<int> image_;
};

PackingResult local_search(const Graph& x, const Graph& y,
                           const LocalSearchPacking& opts) {
  const int n = x.size();
  PackingResult result;
  result.stats.best_conflicts = std::numeric_limits<std::uint64_t>::max();
  if (n == 0) {
    result.status = PackingStatus::kFound;
    result.sigma = Permutation::identity(0);
    result.stats.best_conflicts = 0;
    return result;
  }
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) nbrs[a] = x.neighbors(a);
  const auto edges = x.edges();

  std::vector<int> img(static_cast<std::size_t>(n));
  std::uint64_t steps = 0;
  for (std::uint64_t restart = 0; steps < opts.max_steps; ++restart) {
    result.stats.restarts = restart;
    Rng rng(derive_seed(opts.seed, restart));
    std::iota(img.begin(), img.end(), 0);
    rng.shuffle(std::span<int>(img));
    auto conflict = [&](int a, int b) { return y.has_edge(img[a], img[b]); };
    std::uint64_t conflicts = 0;
    for (const Edge& e : edges) conflicts += conflict(e.u, e.v);
    std::uint64_t sideways = 0;

    while (true) {
      result.stats.best_conflicts = std::min(result.stats.best_conflicts, conflicts);
      if (conflicts == 0) {
        result.status = PackingStatus::kFound;
        result.sigma = Permutation(img);
        result.stats.steps = steps;
        return result;
      }
      if (steps >= opts.max_steps) break;
      ++steps;
      std::vector<int> hot;
      for (const Edge& e : edges) {
        if (conflict(e.u, e.v)) {
          hot.push_back(e.u);
          hot.push_back(e.v);
        }
      }
      const int a = hot[rng.below(hot.size())];
      // Best partner b for exchanging images with a.
      long best_delta = std::numeric_limits<long>::max();
      std::vector<int> best;
      for (int b = 0; b < n; ++b) {
        if (b == a) continue;
        long delta = 0;
        for (int c : nbrs[a]) {
          if (c == b) continue;
          delta += static_cast<long>(y.has_edge(img[b], img[c])) -
                   static_cast<long>(y.has_edge(img[a], img[c]));
        }
        for (int c : nbrs[b]) {
          if (c == a) continue;
          delta += static_cast<long>(y.has_edge(img[a], img[c])) -
                   static_cast<long>(y.has_edge(img[b], img[c]));
        }
        if (delta < best_delta) {
          best_delta = delta;
          best.clear();
        }
        if (delta == best_delta) best.push_back(b);
      }
      if (best_delta > 0 || (best_delta == 0 && ++sideways > opts.plateau)) break;
      if (best_delta < 0) sideways = 0;
      const int b = best[rng.below(best.size())];
      std::swap(img[a], img[b]);
      conflicts = static_cast<std::uint64_t>(static_cast<long>(conflicts) + best_delta);
    }
  }
  result.status = PackingStatus::kIndeterminate;
  result.stats.steps = steps;
  return result;
}

}  // namespace

PackingResult find_packing(const Graph& x, const Graph& y, const PackingMode& mode) {
  if (x.size() != y.size()) {
    throw ParameterError("packing needs |V(X)| = |V(Y)|");
  }
  PackingResult result;
  if (const auto* exact = std::get_if<ExactPacking>(&mode)) {
    if (exact->node_budget == 0) throw ParameterError("node budget must be positive");
    result = ExactPacker(x, y, exact->node_budget).run();
  } else {
    const auto& local = std::get<LocalSearchPacking>(mode);
    result = local_search(x, y, local);
  }
  if (result.sigma && packing_conflicts(x, y, *result.sigma) != 0) {
    // Defect guard: never report an unverified packing.
    throw std::logic_error("packing search returned a conflicting bijection");
  }
  return result;
}

DisconnectionCertificate certify_disconnected(const Graph& x, const Graph& y,
                                              const PackingMode& mode) {
  DisconnectionCertificate cert;
  cert.packing = find_packing(x, y, mode);
  if (cert.packing.status == PackingStatus::kFound && x.size() >= 2) {
    cert.status = DisconnectionStatus::kDisconnected;
    cert.isolated = cert.packing.sigma;
  }
  return cert;
}

}  // namespace fsg
