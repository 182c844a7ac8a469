#include "fsgraph/permutation.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "fsgraph/errors.hpp"

namespace fsg {

Permutation::Permutation(std::vector<int> images) : map_(std::move(images)) {
  std::vector<char> seen(map_.size(), 0);
  for (int v : map_) {
    if (v < 0 || static_cast<std::size_t>(v) >= map_.size() || seen[v]) {
      throw ParameterError("not a permutation of 0..n-1");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw ParameterError("permutation size must be non-negative");
  Permutation p;
  p.map_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.map_[i] = i;
  return p;
}

std::uint64_t factorial(int n) {
  if (n < 0) throw ParameterError("factorial of a negative number");
  if (n > kMaxRankableSize) {
    throw SizeError("n! overflows 64 bits for n=" + std::to_string(n) +
                    " (limit " + std::to_string(kMaxRankableSize) + ")");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  if (n > kMaxRankableSize) {
    throw SizeError("rank: n=" + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxRankableSize));
  }
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller_after = 0;
    for (int j = i + 1; j < n; ++j) smaller_after += p[j] < p[i];
    r = r * static_cast<std::uint64_t>(n - i) + smaller_after;
  }
  return r;
}

Permutation unrank(std::uint64_t r, int n) {
  const std::uint64_t total = factorial(n);
  if (r >= total) {
    throw ParameterError("unrank: rank " + std::to_string(r) +
                         " out of range for n=" + std::to_string(n));
  }
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::vector<int> images;
  images.reserve(pool.size());
  for (int i = 0; i < n; ++i) {
    images.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw ParameterError("compose: size mismatch");
  std::vector<int> images(static_cast<std::size_t>(f.size()));
  for (int a = 0; a < f.size(); ++a) images[a] = f[g[a]];
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int a = 0; a < p.size(); ++a) images[p[a]] = a;
  return Permutation(std::move(images));
}

Permutation apply_transposition(const Permutation& p, int u, int v) {
  if (u == v) throw ParameterError("transposition needs u != v");
  if (u < 0 || v < 0 || u >= p.size() || v >= p.size()) {
    throw ParameterError("transposition vertex out of range");
  }
  std::vector<int> images(p.images().begin(), p.images().end());
  for (int& x : images) {
    if (x == u) {
      x = v;
    } else if (x == v) {
      x = u;
    }
  }
  return Permutation(std::move(images));
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

Permutation parse_permutation(std::string_view text) {
  std::string buffer(text);
  std::replace(buffer.begin(), buffer.end(), ',', ' ');
  std::istringstream in{buffer};
  std::vector<int> images;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw ParameterError("permutation: bad token '" + token + "'");
    }
    images.push_back(value);
  }
  return Permutation(std::move(images));
}

std::ostream& operator<<(std::ostream& out, const Permutation& p) {
  for (int a = 0; a < p.size(); ++a) {
    if (a > 0) out << ' ';
    out << p[a];
  }
  return out;
}

}  // namespace fsg
