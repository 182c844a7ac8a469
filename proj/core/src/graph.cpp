#include "fsgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "fsgraph/errors.hpp"
#include "fsgraph/rng.hpp"

namespace fsg {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw ParameterError("graph size must be non-negative");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (g.has_edge(e.u, e.v)) {
      throw ParameterError("duplicate edge {" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + "}");
    }
    g.add_edge(e.u, e.v);
  }
  return g;
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    throw ParameterError("vertex " + std::to_string(u) + " out of range for n=" +
                         std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
  bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  bits_[row_offset(u) + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[row_offset(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int u) const {
  int d = 0;
  for (std::uint64_t w : row(u)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int u) const {
  std::vector<int> out;
  const auto r = row(u);
  for (std::size_t k = 0; k < r.size(); ++k) {
    std::uint64_t w = r[k];
    while (w != 0) {
      out.push_back(static_cast<int>(k * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint64_t w : bits_) twice += std::popcount(w);
  return twice / 2;
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  if (name == "complete") return GraphKind::kComplete;
  if (name == "star") return GraphKind::kStar;
  if (name == "path") return GraphKind::kPath;
  if (name == "cycle") return GraphKind::kCycle;
  if (name == "complete_bipartite" || name == "bipartite") {
    return GraphKind::kCompleteBipartite;
  }
  if (name == "grid") return GraphKind::kGrid;
  if (name == "empty") return GraphKind::kEmpty;
  return std::nullopt;
}

Graph named_graph(GraphKind kind, int n, std::pair<int, int> shape) {
  if (n < 1) throw ParameterError("named graphs need n >= 1");
  switch (kind) {
    case GraphKind::kComplete:
      return complete_graph(n);
    case GraphKind::kStar:
      return star_graph(n);
    case GraphKind::kPath:
      return path_graph(n);
    case GraphKind::kCycle:
      return cycle_graph(n);
    case GraphKind::kCompleteBipartite:
      if (shape.first < 0 || shape.second < 0 ||
          shape.first + shape.second != n) {
        throw ParameterError("complete_bipartite(s,t) requires s+t = n");
      }
      return complete_bipartite_graph(shape.first, shape.second);
    case GraphKind::kGrid:
      if (shape.first < 1 || shape.second < 1 ||
          shape.first * shape.second != n) {
        throw ParameterError("grid(r,c) requires r*c = n");
      }
      return grid_graph(shape.first, shape.second);
    case GraphKind::kEmpty:
      return empty_graph(n);
  }
  throw ParameterError("unknown graph kind");
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_bipartite_graph(int s, int t) {
  Graph g(s + t);
  for (int u = 0; u < s; ++u)
    for (int v = s; v < s + t; ++v) g.add_edge(u, v);
  return g;
}

Graph grid_graph(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0,1]");
  }
  Graph g(n);
  Rng rng(seed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.size()) {
      throw ParameterError("induced_subgraph: vertex " + std::to_string(v) +
                           " out of range");
    }
    if (seen[v]) {
      throw ParameterError("induced_subgraph: vertex " + std::to_string(v) +
                           " listed twice");
    }
    seen[v] = 1;
  }
  const int k = static_cast<int>(vertices.size());
  Graph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.size());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int u = 0; u < g.size(); ++u) best = std::max(best, g.degree(u));
  return best;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), kUnreachable);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.size() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

std::optional<int> girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  for (int s = 0; s < g.size(); ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::deque<int> queue{s};
    dist[s] = 0;
    parent[s] = -1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (int v : g.neighbors(u)) {
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.size() || v < 0 || v >= g.size()) {
    throw ParameterError("distance: vertex out of range");
  }
  const int d = bfs_distances(g, u)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

namespace {

bool next_data_line(std::istream& in, std::string& line, bool allow_comment) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (allow_comment && !line.empty() && line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line, true)) {
    throw ParameterError("edge list: missing 'n m' header");
  }
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0) {
      throw ParameterError("edge list: malformed header '" + line + "'");
    }
  }
  if (n > std::numeric_limits<int>::max()) {
    throw ParameterError("edge list: n too large");
  }
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, false)) {
      throw ParameterError("edge list: expected " + std::to_string(m) +
                           " edges, found " + std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      throw ParameterError("edge list: malformed edge line '" + line + "'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParameterError("edge list: index out of range in '" + line + "'");
    }
    if (u == v) throw ParameterError("edge list: self-loop in '" + line + "'");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) {
      throw ParameterError("edge list: duplicate edge '" + line + "'");
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_data_line(in, line, false)) {
    throw ParameterError("edge list: trailing data after " + std::to_string(m) +
                         " edges");
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.size() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

}  // namespace fsg
