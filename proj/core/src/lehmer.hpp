#pragma once

#include <cstdint>
#include <span>

namespace fsg::detail {

/// |rank(p with positions a<b exchanged) - rank(p)| for lexicographic Lehmer
/// ranks, where weight[i] = (n-1-i)!. Only the digits at positions a..b
/// change, so this is O(n) instead of a full re-rank. The rank increases iff
/// p[a] < p[b].
inline std::uint64_t swap_rank_offset(std::span<const int> p, int a, int b,
                                      std::span<const std::uint64_t> weight) {
  const int n = static_cast<int>(p.size());
  const int lo = p[a] < p[b] ? p[a] : p[b];
  const int hi = p[a] < p[b] ? p[b] : p[a];
  std::uint64_t mid_weight = 0;
  std::uint64_t mid_count = 0;
  for (int i = a + 1; i < b; ++i) {
    if (p[i] > lo && p[i] < hi) {
      mid_weight += weight[i];
      ++mid_count;
    }
  }
  std::uint64_t after_count = 0;
  for (int j = b + 1; j < n; ++j) after_count += p[j] > lo && p[j] < hi;
  return weight[a] * (1 + mid_count + after_count) + mid_weight -
         weight[b] * after_count;
}

}  // namespace fsg::detail
