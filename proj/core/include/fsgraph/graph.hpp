#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace fsg {

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Each vertex owns a row of
/// 64-bit words holding its neighborhood, so edge queries are O(1).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int size() const { return n_; }
  bool has_edge(int u, int v) const {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U;
  }

  /// Adds {u,v}; no-op if present. Throws ParameterError on loops or
  /// out-of-range indices.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int u) const;
  std::vector<int> neighbors(int u) const;
  /// Edges {u,v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  /// Raw neighborhood words of u; bit v of word v/64 is set iff {u,v} is an
  /// edge.
  std::span<const std::uint64_t> row(int u) const {
    return {bits_.data() + row_offset(u), words_};
  }
  std::size_t words_per_row() const { return words_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t row_offset(int u) const {
    return static_cast<std::size_t>(u) * words_;
  }
  void check_vertex(int u) const;

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class GraphKind {
  kComplete,
  kStar,
  kPath,
  kCycle,
  kCompleteBipartite,
  kGrid,
  kEmpty,
};

std::optional<GraphKind> parse_graph_kind(std::string_view name);

/// Standard families. `shape` carries (s,t) for complete bipartite and
/// (rows, cols) for grids; it is ignored otherwise. Star center is vertex 0.
Graph named_graph(GraphKind kind, int n, std::pair<int, int> shape = {0, 0});

Graph complete_graph(int n);
Graph star_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite_graph(int s, int t);
Graph grid_graph(int rows, int cols);
Graph empty_graph(int n);

/// Erdos-Renyi G(n,p). Pairs are visited in lexicographic order with one
/// uniform draw each, so the result depends only on (n, p, seed).
Graph gnp(int n, double p, std::uint64_t seed);

/// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph complement(const Graph& g);
int max_degree(const Graph& g);
bool is_connected(const Graph& g);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

inline constexpr int kUnreachable = -1;
/// BFS distances from `source`, kUnreachable where no path exists.
std::vector<int> bfs_distances(const Graph& g, int source);
std::optional<int> distance(const Graph& g, int u, int v);

/// Edge-list text format: "n m" then m lines "u v" with u < v in
/// lexicographic order. Lines starting with '#' before the header are
/// skipped. Throws ParameterError on duplicates, loops, bad indices or a
/// wrong edge count.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace fsg
