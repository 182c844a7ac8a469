#pragma once

// Brute-force reference implementations for tests. They work on plain edge
// lists and vectors and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "fsgraph/graph.hpp"
#include "fsgraph/permutation.hpp"

namespace oracle {

using Perm = std::vector<int>;
using EdgeSet = std::set<std::pair<int, int>>;

inline Perm images(const fsg::Permutation& p) {
  return Perm(p.images().begin(), p.images().end());
}

inline EdgeSet edge_set(const fsg::Graph& g) {
  EdgeSet s;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.has_edge(u, v)) s.insert({u, v});
  return s;
}

inline bool has(const EdgeSet& s, int a, int b) {
  return s.count({std::min(a, b), std::max(a, b)}) > 0;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Friendly-swap neighbors straight from the definition.
inline std::vector<Perm> neighbors(const EdgeSet& x, const EdgeSet& y, const Perm& s) {
  std::vector<Perm> out;
  for (const auto& [a, b] : x) {
    if (has(y, s[a], s[b])) {
      Perm t = s;
      std::swap(t[a], t[b]);
      out.push_back(t);
    }
  }
  return out;
}

struct Components {
  std::map<Perm, int> label;
  std::vector<std::uint64_t> sizes;

  std::map<std::uint64_t, std::uint64_t> histogram() const {
    std::map<std::uint64_t, std::uint64_t> h;
    for (auto s : sizes) ++h[s];
    return h;
  }
};

/// Depth-first flood fill over all n! bijections.
inline Components components(const fsg::Graph& gx, const fsg::Graph& gy) {
  const EdgeSet x = edge_set(gx), y = edge_set(gy);
  Components c;
  for (const Perm& start : all_perms(gx.size())) {
    if (c.label.count(start)) continue;
    const int id = static_cast<int>(c.sizes.size());
    c.sizes.push_back(0);
    std::vector<Perm> stack{start};
    c.label[start] = id;
    while (!stack.empty()) {
      Perm s = stack.back();
      stack.pop_back();
      ++c.sizes[id];
      for (Perm& t : neighbors(x, y, s)) {
        if (c.label.emplace(t, id).second) stack.push_back(std::move(t));
      }
    }
  }
  return c;
}

/// Lexicographic position of p among all permutations of its size.
inline std::uint64_t rank_by_enumeration(const Perm& p) {
  std::uint64_t r = 0;
  for (const Perm& q : all_perms(static_cast<int>(p.size()))) {
    if (q == p) return r;
    ++r;
  }
  return r;
}

/// Some sigma with no X-edge mapped onto a Y-edge, by trying all n!.
inline bool packing_exists(const fsg::Graph& gx, const fsg::Graph& gy) {
  const EdgeSet x = edge_set(gx), y = edge_set(gy);
  for (const Perm& s : all_perms(gx.size())) {
    bool ok = true;
    for (const auto& [a, b] : x) {
      if (has(y, s[a], s[b])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Tries every tuple (v_0..v_{m-1}) in V_0 x ... x V_{m-1}.
inline bool embedding_exists(const fsg::Graph& g, const fsg::Graph& h, const fsg::Graph& x,
                             const fsg::Graph& y, const std::vector<std::vector<int>>& sets,
                             const Perm& sigma) {
  const int m = g.size();
  Perm inv(sigma.size());
  for (std::size_t a = 0; a < sigma.size(); ++a) inv[sigma[a]] = static_cast<int>(a);
  const EdgeSet eg = edge_set(g), eh = edge_set(h), ex = edge_set(x), ey = edge_set(y);
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  for (const auto& s : sets)
    if (s.empty()) return false;
  while (true) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      for (int j = i + 1; j < m && ok; ++j) {
        const int vi = sets[i][idx[i]], vj = sets[j][idx[j]];
        if (has(eh, i, j) && !has(ey, vi, vj)) ok = false;
        if (has(eg, i, j) && !has(ex, inv[vi], inv[vj])) ok = false;
      }
    }
    if (ok) return true;
    int k = 0;
    while (k < m && ++idx[k] == sets[k].size()) idx[k++] = 0;
    if (k == m) return false;
  }
}

/// Breadth-first distances in an edge list.
inline std::vector<int> bfs(const fsg::Graph& g, int src) {
  std::vector<int> d(static_cast<std::size_t>(g.size()), -1);
  std::vector<int> queue{src};
  d[src] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int u = queue[i];
    for (int v = 0; v < g.size(); ++v) {
      if (g.has_edge(u, v) && d[v] < 0) {
        d[v] = d[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return d;
}

/// Shortest cycle length via removing each edge and measuring the detour;
/// -1 for forests.
inline int girth(const fsg::Graph& g) {
  int best = -1;
  for (const auto& [u, v] : edge_set(g)) {
    fsg::Graph h = g;
    h.remove_edge(u, v);
    const int d = bfs(h, u)[v];
    if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
  }
  return best;
}

}  // namespace oracle
