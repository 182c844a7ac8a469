#include "fsgraph/fs_graph.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>

#include "fsgraph/errors.hpp"
#include "fsgraph/rng.hpp"
#include "lehmer.hpp"

namespace fsg {

FsInstance::FsInstance(Graph x, Graph y)
    : x_(std::move(x)), y_(std::move(y)), x_edges_(x_.edges()) {
  if (x_.size() != y_.size()) {
    throw ParameterError("FS(X,Y) needs |V(X)| = |V(Y)|, got " +
                         std::to_string(x_.size()) + " and " +
                         std::to_string(y_.size()));
  }
}

namespace {

void check_sigma(const FsInstance& inst, const Permutation& sigma) {
  if (sigma.size() != inst.n()) {
    throw ParameterError("bijection has size " + std::to_string(sigma.size()) +
                         ", instance has n=" + std::to_string(inst.n()));
  }
}

}  // namespace

std::vector<Permutation> fs_neighbors(const FsInstance& inst,
                                      const Permutation& sigma) {
  check_sigma(inst, sigma);
  std::vector<Permutation> out;
  for (const Edge& e : inst.x_edges()) {
    if (is_friendly_swap(inst, sigma, e)) {
      out.push_back(sigma);
      out.back().swap_positions(e.u, e.v);
    }
  }
  return out;
}

int fs_degree(const FsInstance& inst, const Permutation& sigma) {
  check_sigma(inst, sigma);
  int d = 0;
  for (const Edge& e : inst.x_edges()) d += is_friendly_swap(inst, sigma, e);
  return d;
}

bool fs_adjacent(const FsInstance& inst, const Permutation& a,
                 const Permutation& b) {
  if (a.size() != inst.n() || b.size() != inst.n()) return false;
  int first = -1;
  int second = -1;
  for (int i = 0; i < inst.n(); ++i) {
    if (a[i] == b[i]) continue;
    if (first < 0) {
      first = i;
    } else if (second < 0) {
      second = i;
    } else {
      return false;
    }
  }
  if (second < 0) return false;
  return a[first] == b[second] && a[second] == b[first] &&
         inst.x().has_edge(first, second) &&
         inst.y().has_edge(a[first], a[second]);
}

bool is_fs_walk(const FsInstance& inst, std::span<const Permutation> path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!fs_adjacent(inst, path[i], path[i + 1])) return false;
  }
  return true;
}

std::uint64_t ComponentSummary::total_vertices() const {
  std::uint64_t total = 0;
  for (const auto& [size, count] : size_histogram) total += size * count;
  return total;
}

namespace {

int checked_cap(int n, int cap) {
  if (cap > kHardDecomposeCap) {
    throw ParameterError("decompose cap " + std::to_string(cap) +
                    " exceeds the hard limit " +
                    std::to_string(kHardDecomposeCap));
  }
  if (n > cap) {
    throw SizeError("exact decomposition needs n <= cap (n=" +
                    std::to_string(n) + ", cap=" + std::to_string(cap) + ")");
  }
  return n;
}

// Builds the union-find over ranks. Permutations are visited in
// lexicographic order so the running counter is the rank; each friendly swap
// that moves the smaller value forward is translated into a rank offset from
// the Lehmer-code digits that change, avoiding a full O(n^2) re-rank.
UnionFind build_table(const FsInstance& inst) {
  const int n = inst.n();
  const std::uint64_t total = factorial(n);
  UnionFind uf(static_cast<std::uint32_t>(total));
  if (n < 2) return uf;

  std::array<std::uint64_t, kHardDecomposeCap + 1> weight{};
  for (int i = 0; i < n; ++i) weight[i] = factorial(n - 1 - i);

  // Only X-edges are iterated, Y adjacency is tested through bit rows.
  const auto edges = inst.x_edges();
  const Graph& y = inst.y();

  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  std::uint64_t r = 0;
  do {
    for (const Edge& e : edges) {
      const int a = e.u;
      const int b = e.v;
      const int va = p[a];
      const int vb = p[b];
      // Each FS edge is seen from both endpoints; keep the one where the
      // swap increases the rank.
      if (va > vb || !y.has_edge(va, vb)) continue;
      const std::uint64_t delta = detail::swap_rank_offset(
          p, a, b, std::span<const std::uint64_t>(weight.data(), n));
      uf.unite(static_cast<std::uint32_t>(r),
               static_cast<std::uint32_t>(r + delta));
    }
    ++r;
  } while (std::next_permutation(p.begin(), p.end()));
  uf.flatten();
  return uf;
}

ComponentSummary summarize(const UnionFind& uf) {
  ComponentSummary s;
  for (std::uint32_t v = 0; v < uf.size(); ++v) {
    if (!uf.is_root(v)) continue;
    ++s.component_count;
    ++s.size_histogram[uf.set_size(v)];
  }
  if (auto it = s.size_histogram.find(1); it != s.size_histogram.end()) {
    s.isolated_count = it->second;
  }
  return s;
}

}  // namespace

FsComponents::FsComponents(const FsInstance& inst, int cap)
    : n_(checked_cap(inst.n(), cap)),
      uf_(build_table(inst)),
      summary_(summarize(uf_)) {}

bool FsComponents::same_component(const Permutation& a,
                                  const Permutation& b) const {
  if (a.size() != n_ || b.size() != n_) {
    throw ParameterError("permutation size does not match the table");
  }
  return component_of(rank(a)) == component_of(rank(b));
}

std::uint64_t FsComponents::component_size(const Permutation& p) const {
  return uf_.set_size(static_cast<std::uint32_t>(rank(p)));
}

ComponentSummary decompose(const FsInstance& inst, int cap) {
  return FsComponents(inst, cap).summary();
}

bool is_fs_connected(const FsInstance& inst, int cap) {
  return decompose(inst, cap).component_count == 1;
}

const char* to_string(PathStatus status) {
  switch (status) {
    case PathStatus::kFound:
      return "found";
    case PathStatus::kNoPath:
      return "no_path";
    case PathStatus::kBudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

namespace {

struct StateKey {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    return static_cast<std::size_t>(mix64(k.lo ^ mix64(k.hi)));
  }
};

// Up to n = 20 states are keyed by their exact rank. Beyond that a 128-bit
// Zobrist fingerprint is used; a found path is replayed before it is
// returned, so a fingerprint collision can never produce a wrong witness.
class StateKeyer {
 public:
  explicit StateKeyer(int n) : n_(n), exact_(n <= kMaxRankableSize) {
    if (exact_) return;
    const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    table_.resize(2 * cells);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      table_[i] = mix64(0x5eed0f2b1a7c3d11ULL + i);
    }
  }

  StateKey key(std::span<const std::uint16_t> state) const {
    if (exact_) {
      std::uint64_t r = 0;
      for (int i = 0; i < n_; ++i) {
        std::uint64_t smaller = 0;
        for (int j = i + 1; j < n_; ++j) smaller += state[j] < state[i];
        r = r * static_cast<std::uint64_t>(n_ - i) + smaller;
      }
      return {0, r};
    }
    StateKey k;
    for (int i = 0; i < n_; ++i) {
      k.hi ^= cell(0, i, state[i]);
      k.lo ^= cell(1, i, state[i]);
    }
    return k;
  }

  /// Key of `state` with positions a and b exchanged.
  StateKey swapped_key(const StateKey& base,
                       std::span<std::uint16_t> state, int a, int b) const {
    if (exact_) {
      std::swap(state[a], state[b]);
      StateKey k = key(state);
      std::swap(state[a], state[b]);
      return k;
    }
    const int va = state[a];
    const int vb = state[b];
    StateKey k = base;
    k.hi ^= cell(0, a, va) ^ cell(0, b, vb) ^ cell(0, a, vb) ^ cell(0, b, va);
    k.lo ^= cell(1, a, va) ^ cell(1, b, vb) ^ cell(1, a, vb) ^ cell(1, b, va);
    return k;
  }

 private:
  std::uint64_t cell(int plane, int pos, int value) const {
    const auto n = static_cast<std::size_t>(n_);
    return table_[static_cast<std::size_t>(plane) * n * n +
                  static_cast<std::size_t>(pos) * n +
                  static_cast<std::size_t>(value)];
  }

  int n_;
  bool exact_;
  std::vector<std::uint64_t> table_;
};

struct SearchNode {
  std::uint32_t parent;
  std::uint16_t a;
  std::uint16_t b;
};

inline constexpr std::uint32_t kRoot = 0xffffffffU;

struct SearchSide {
  std::unordered_map<StateKey, std::uint32_t, StateKeyHash> index;
  std::vector<SearchNode> nodes;
  // Current BFS layer: node ids plus their states stored back to back.
  std::vector<std::uint32_t> layer_ids;
  std::vector<std::uint16_t> layer_states;
  std::vector<StateKey> layer_keys;
};

// Moves from the root of `side` down to node `id`.
std::vector<std::pair<int, int>> moves_from_root(const SearchSide& side,
                                                 std::uint32_t id) {
  std::vector<std::pair<int, int>> moves;
  while (side.nodes[id].parent != kRoot) {
    moves.emplace_back(side.nodes[id].a, side.nodes[id].b);
    id = side.nodes[id].parent;
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

}  // namespace

PathSearchResult find_path(const FsInstance& inst, const Permutation& from,
                           const Permutation& to, std::uint64_t node_budget) {
  check_sigma(inst, from);
  check_sigma(inst, to);
  if (node_budget == 0) throw ParameterError("node budget must be positive");
  const int n = inst.n();
  if (n > 0xffff) throw SizeError("find_path supports n <= 65535");

  PathSearchResult result;
  if (from == to) {
    result.status = PathStatus::kFound;
    result.path = {from};
    result.explored = 1;
    return result;
  }

  const StateKeyer keyer(n);
  const auto nn = static_cast<std::size_t>(n);
  std::array<SearchSide, 2> sides;
  const std::array<const Permutation*, 2> roots{&from, &to};
  for (int s = 0; s < 2; ++s) {
    std::vector<std::uint16_t> state(roots[s]->images().begin(),
                                     roots[s]->images().end());
    const StateKey k = keyer.key(state);
    sides[s].index.emplace(k, 0);
    sides[s].nodes.push_back({kRoot, 0, 0});
    sides[s].layer_ids.push_back(0);
    sides[s].layer_states = state;
    sides[s].layer_keys.push_back(k);
  }
  std::uint64_t stored = 2;
  if (node_budget < stored) {
    result.status = PathStatus::kBudgetExhausted;
    result.explored = stored;
    return result;
  }

  const Graph& y = inst.y();
  const auto edges = inst.x_edges();

  auto finish = [&](int side, std::uint32_t inner_id, int a, int b,
                    std::uint32_t other_id) {
    // Moves from roots[side] to the meeting point, then on to the other root.
    auto moves = moves_from_root(sides[side], inner_id);
    moves.emplace_back(a, b);
    auto tail = moves_from_root(sides[1 - side], other_id);
    moves.insert(moves.end(), tail.rbegin(), tail.rend());
    if (side == 1) std::reverse(moves.begin(), moves.end());
    std::vector<Permutation> path{from};
    for (const auto& [pa, pb] : moves) {
      path.push_back(path.back());
      path.back().swap_positions(pa, pb);
    }
    if (path.back() == to && is_fs_walk(inst, path)) {
      result.status = PathStatus::kFound;
      result.path = std::move(path);
    } else {
      // Only reachable through a fingerprint collision.
      result.status = PathStatus::kBudgetExhausted;
    }
  };

  for (;;) {
    // Grow the side with the smaller frontier.
    const int s = sides[0].layer_ids.size() <= sides[1].layer_ids.size() ? 0 : 1;
    SearchSide& side = sides[s];
    const SearchSide& other = sides[1 - s];
    std::vector<std::uint32_t> next_ids;
    std::vector<std::uint16_t> next_states;
    std::vector<StateKey> next_keys;

    for (std::size_t li = 0; li < side.layer_ids.size(); ++li) {
      std::span<std::uint16_t> state(side.layer_states.data() + li * nn, nn);
      const StateKey& base = side.layer_keys[li];
      for (const Edge& e : edges) {
        if (!y.has_edge(state[e.u], state[e.v])) continue;
        const StateKey k = keyer.swapped_key(base, state, e.u, e.v);
        if (side.index.contains(k)) continue;
        if (auto hit = other.index.find(k); hit != other.index.end()) {
          result.explored = stored;
          finish(s, side.layer_ids[li], e.u, e.v, hit->second);
          return result;
        }
        if (stored >= node_budget) {
          result.status = PathStatus::kBudgetExhausted;
          result.explored = stored;
          return result;
        }
        const auto id = static_cast<std::uint32_t>(side.nodes.size());
        side.nodes.push_back({side.layer_ids[li], static_cast<std::uint16_t>(e.u),
                              static_cast<std::uint16_t>(e.v)});
        side.index.emplace(k, id);
        ++stored;
        next_ids.push_back(id);
        next_keys.push_back(k);
        const std::size_t at = next_states.size();
        next_states.insert(next_states.end(), state.begin(), state.end());
        std::swap(next_states[at + e.u], next_states[at + e.v]);
      }
    }
    if (next_ids.empty()) {
      result.status = PathStatus::kNoPath;
      result.explored = stored;
      return result;
    }
    side.layer_ids = std::move(next_ids);
    side.layer_states = std::move(next_states);
    side.layer_keys = std::move(next_keys);
  }
}

}  // namespace fsg
