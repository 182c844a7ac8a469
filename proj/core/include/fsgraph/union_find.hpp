#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace fsg {

/// Disjoint sets over 0..size-1 with union by size and path halving.
/// 32-bit storage keeps the n! = 3 628 800 element table for n = 10 at
/// about 29 MB.
class UnionFind {
 public:
  explicit UnionFind(std::uint32_t size) : parent_(size), size_(size, 1) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// Root lookup without compression, usable on a const table.
  std::uint32_t find(std::uint32_t v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  /// Returns true if the sets were distinct.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::uint32_t set_size(std::uint32_t v) const { return size_[find(v)]; }
  bool is_root(std::uint32_t v) const { return parent_[v] == v; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(parent_.size()); }

  /// Points every element directly at its root.
  void flatten() {
    for (std::uint32_t v = 0; v < size(); ++v) parent_[v] = find(v);
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace fsg
