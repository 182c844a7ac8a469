#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "fsgraph/graph.hpp"
#include "fsgraph/permutation.hpp"

namespace fsg {

/// Backtracking over bijections; exhaustive unless the node budget runs out.
struct ExactPacking {
  std::uint64_t node_budget = 50'000'000;
};

/// Min-conflicts swaps from random starts.
struct LocalSearchPacking {
  std::uint64_t max_steps = 100'000;
  std::uint64_t seed = 0;
  /// Consecutive non-improving (sideways) moves allowed before a restart.
  std::uint64_t plateau = 200;
};

using PackingMode = std::variant<ExactPacking, LocalSearchPacking>;

enum class PackingStatus { kFound, kNoneExists, kIndeterminate };
const char* to_string(PackingStatus status);

struct PackingStats {
  std::uint64_t nodes = 0;     // exact: search nodes visited
  std::uint64_t steps = 0;     // local search: moves made
  std::uint64_t restarts = 0;
  std::uint64_t best_conflicts = 0;
};

struct PackingResult {
  PackingStatus status = PackingStatus::kIndeterminate;
  /// When found: every X-edge maps onto a Y-non-edge.
  std::optional<Permutation> sigma;
  PackingStats stats;
};

/// Number of X-edges {a,b} whose image {sigma(a), sigma(b)} is a Y-edge.
std::uint64_t packing_conflicts(const Graph& x, const Graph& y,
                                const Permutation& sigma);

PackingResult find_packing(const Graph& x, const Graph& y, const PackingMode& mode);

enum class DisconnectionStatus { kDisconnected, kUnknown };

struct DisconnectionCertificate {
  DisconnectionStatus status = DisconnectionStatus::kUnknown;
  /// An isolated vertex of FS(X,Y).
  std::optional<Permutation> isolated;
  PackingResult packing;
};

/// A packing is an isolated vertex of FS(X,Y), which is then disconnected
/// whenever n >= 2. Failing to find one proves nothing.
DisconnectionCertificate certify_disconnected(const Graph& x, const Graph& y,
                                              const PackingMode& mode);

}  // namespace fsg
