#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fsgraph/fs_graph.hpp"

namespace fsg {

/// Does some sequence of friendly swaps carry sigma to tau_{uv} o sigma?
struct ExchangeQuery {
  Permutation sigma;
  int u = 0;  // vertices of Y
  int v = 0;
};

enum class ExchangeStatus { kExchangeable, kNotExchangeable, kIndeterminate };
const char* to_string(ExchangeStatus status);

struct ExchangeVerdict {
  ExchangeStatus status = ExchangeStatus::kIndeterminate;
  /// sigma ... tau_{uv} o sigma when a witness was requested and found.
  std::vector<Permutation> witness;
  std::uint64_t explored = 0;
};

/// Decide through the full component table; never indeterminate.
struct ExactMode {
  int cap = kDefaultDecomposeCap;
  bool want_witness = true;
};
/// Bidirectional search with a node budget; may be indeterminate.
struct BoundedMode {
  std::uint64_t budget = kDefaultNodeBudget;
};
using ExchangeMode = std::variant<ExactMode, BoundedMode>;

ExchangeVerdict exchangeable(const FsInstance& inst, const ExchangeQuery& q,
                             const ExchangeMode& mode);

/// Exact decision against a prebuilt table, for callers issuing many queries.
ExchangeVerdict exchangeable(const FsInstance& inst, const FsComponents& table,
                             const ExchangeQuery& q, bool want_witness = false);

enum class ExchangeConnectivity { kConnected, kUndecided };

struct ExchangeConnectivityReport {
  ExchangeConnectivity verdict = ExchangeConnectivity::kUndecided;
  bool x_connected = false;
  std::uint64_t pairs_checked = 0;
  /// First (sigma, u, v) whose exchange check failed, if any.
  std::optional<ExchangeQuery> failure;
};

/// Checks the sufficient condition: X connected and, for every sigma and
/// every X-edge {a,b}, sigma(a) and sigma(b) are exchangeable from sigma.
/// All-pass proves FS(X,Y) connected; anything else is undecided.
ExchangeConnectivityReport connectivity_by_exchange(
    const FsInstance& inst, int cap = kDefaultDecomposeCap);

/// How the small pair's own exchangeability hypothesis is established.
enum class SmallPairCheck { kAssume, kExact, kBounded };

struct HypothesisCheck {
  std::string name;
  bool verified = false;  // false: recorded as an assumption
  std::string detail;
};

struct TransferCertificate {
  int u = 0;  // psi(m+1)
  int v = 0;  // psi(m+2)
  std::vector<HypothesisCheck> checks;
  bool fully_verified() const;
};

struct TransferOptions {
  SmallPairCheck small_pair = SmallPairCheck::kExact;
  int cap = kDefaultDecomposeCap;
  std::uint64_t budget = kDefaultNodeBudget;
};

/// Transfers exchangeability of the last two vertices (m, m+1 zero-based) of
/// a small pair (G,H) on m+2 vertices into (X,Y): given embeddings phi: G->X
/// and psi: H->Y with sigma o phi = psi, the pair (psi(m), psi(m+1)) is
/// exchangeable from sigma. Throws HypothesisError naming the first violated
/// condition.
TransferCertificate transfer_exchangeability(
    const Graph& g, const Graph& h, std::span<const int> phi,
    std::span<const int> psi, const FsInstance& target,
    const Permutation& sigma, const TransferOptions& options = {});

}  // namespace fsg
