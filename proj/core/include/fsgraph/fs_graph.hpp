#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fsgraph/graph.hpp"
#include "fsgraph/permutation.hpp"
#include "fsgraph/union_find.hpp"

namespace fsg {

/// The pair (X, Y) defining FS(X,Y). X is the positions graph, Y the people
/// graph; a vertex of FS(X,Y) is a bijection V(X) -> V(Y).
class FsInstance {
 public:
  FsInstance(Graph x, Graph y);

  const Graph& x() const { return x_; }
  const Graph& y() const { return y_; }
  int n() const { return x_.size(); }
  /// Edges of X in lexicographic order; every enumeration uses this order.
  std::span<const Edge> x_edges() const { return x_edges_; }

  /// The instance FS(Y, X).
  FsInstance swapped() const { return FsInstance(y_, x_); }

 private:
  Graph x_;
  Graph y_;
  std::vector<Edge> x_edges_;
};

/// A friendly swap of sigma: exchange the images at X-adjacent positions a, b
/// whose images are Y-adjacent.
inline bool is_friendly_swap(const FsInstance& inst, const Permutation& sigma,
                             const Edge& e) {
  return inst.y().has_edge(sigma[e.u], sigma[e.v]);
}

/// Neighbors of sigma in FS(X,Y), one per friendly X-edge, in X-edge order.
std::vector<Permutation> fs_neighbors(const FsInstance& inst,
                                      const Permutation& sigma);
int fs_degree(const FsInstance& inst, const Permutation& sigma);

/// True if a and b differ by exactly one friendly swap.
bool fs_adjacent(const FsInstance& inst, const Permutation& a,
                 const Permutation& b);

/// True if consecutive entries of `path` are FS-adjacent.
bool is_fs_walk(const FsInstance& inst, std::span<const Permutation> path);

struct ComponentSummary {
  std::uint64_t component_count = 0;
  /// Component size -> number of components of that size.
  std::map<std::uint64_t, std::uint64_t> size_histogram;
  std::uint64_t isolated_count = 0;

  std::uint64_t total_vertices() const;
  friend bool operator==(const ComponentSummary&,
                         const ComponentSummary&) = default;
};

inline constexpr int kDefaultDecomposeCap = 10;
/// 13! overflows the 32-bit union-find index.
inline constexpr int kHardDecomposeCap = 12;

/// Exact component table of FS(X,Y), indexed by permutation rank.
class FsComponents {
 public:
  FsComponents(const FsInstance& inst, int cap = kDefaultDecomposeCap);

  int n() const { return n_; }
  std::uint64_t vertex_count() const { return uf_.size(); }
  std::uint32_t component_of(std::uint64_t rank) const {
    return uf_.find(static_cast<std::uint32_t>(rank));
  }
  bool same_component(const Permutation& a, const Permutation& b) const;
  std::uint64_t component_size(const Permutation& p) const;
  const ComponentSummary& summary() const { return summary_; }

 private:
  int n_;
  UnionFind uf_;
  ComponentSummary summary_;
};

/// Component structure of FS(X,Y). Throws SizeError when n exceeds cap.
ComponentSummary decompose(const FsInstance& inst,
                           int cap = kDefaultDecomposeCap);
bool is_fs_connected(const FsInstance& inst, int cap = kDefaultDecomposeCap);

enum class PathStatus {
  kFound,
  /// One search side exhausted its whole component without meeting the other.
  kNoPath,
  /// Node budget reached first. Says nothing about connectivity.
  kBudgetExhausted,
};

struct PathSearchResult {
  PathStatus status = PathStatus::kBudgetExhausted;
  /// from ... to, consecutive entries differ by a friendly swap.
  std::vector<Permutation> path;
  std::uint64_t explored = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 5'000'000;

/// Bidirectional BFS between two bijections in the implicit FS graph. The
/// budget bounds the number of distinct nodes stored across both sides.
PathSearchResult find_path(const FsInstance& inst, const Permutation& from,
                           const Permutation& to,
                           std::uint64_t node_budget = kDefaultNodeBudget);

const char* to_string(PathStatus status);

}  // namespace fsg
