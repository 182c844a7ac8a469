#pragma once

#include <stdexcept>
#include <string>

namespace fsg {

/// Invalid argument values: probabilities out of range, bad sizes, malformed
/// permutations or edge lists.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured size cap (exact decomposition, subset scans).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A required hypothesis does not hold for the supplied objects.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructive search exhausted its space without finding an object.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fsg
