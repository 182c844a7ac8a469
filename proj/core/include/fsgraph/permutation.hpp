#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fsg {

/// Bijection sigma: V(X) -> V(Y) stored as its image array, map[a] = sigma(a).
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `images` is a bijection on 0..n-1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator[](int a) const { return map_[static_cast<std::size_t>(a)]; }
  std::span<const int> images() const { return map_; }

  /// Exchanges the images at positions a and b in place.
  void swap_positions(int a, int b) {
    std::swap(map_[static_cast<std::size_t>(a)],
              map_[static_cast<std::size_t>(b)]);
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

/// Largest n for which n! fits in 64 bits.
inline constexpr int kMaxRankableSize = 20;

/// n! as a 64-bit integer; throws SizeError for n > 20.
std::uint64_t factorial(int n);

/// Lexicographic Lehmer-code rank in [0, n!).
std::uint64_t rank(const Permutation& p);
Permutation unrank(std::uint64_t r, int n);

/// compose(f, g)[a] = f(g(a)).
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& p);

/// tau_{uv} o p: the values u and v are exchanged wherever they occur.
Permutation apply_transposition(const Permutation& p, int u, int v);

/// One-line format "s(0) s(1) ... s(n-1)". The parser also accepts commas.
std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);
std::ostream& operator<<(std::ostream& out, const Permutation& p);

}  // namespace fsg
