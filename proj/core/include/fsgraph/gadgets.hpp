#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fsgraph/fs_graph.hpp"
#include "fsgraph/graph.hpp"

namespace fsg {

/// Labeled layout of the gadget pair on [m] (zero-based vertices 0..m-1; the
/// two extra vertices m+1, m+2 are m and m+1).
struct GadgetSpec {
  int m = 0;
  int ell = 0;
  int w = 0;
  std::vector<int> x;  // x_1..x_ell
  std::vector<int> y;  // y_1..y_ell
  std::vector<int> z;  // z_1..z_{m-2ell-1}; z[0] is z_1
  /// Vertices in anticlockwise order around the Hamiltonian cycle of G**.
  std::vector<int> cycle_order;
  std::vector<Edge> chords;

  int z_label(int k) const { return z[static_cast<std::size_t>(k - 1)]; }
  /// {x.., y.., z_3, z_5, z_9, z_11}.
  std::vector<int> gamma() const;
};

struct GadgetBundle {
  Graph g_star_star;  // cycle C_m plus four chords, on [m]
  Graph g_star;       // on [m+2]
  Graph h_star_star;  // star centered at w, on [m]
  Graph h_star;       // on [m+2]
  GadgetSpec spec;
};

/// ell = floor(sqrt(m) / 2).
int gadget_ell(int m);
/// Smallest m accepted by the builders for its own ell: m >= 2 ell + 13.
bool gadget_size_ok(int m);
/// m = floor((log n)^{2/3}) with natural log.
int gadget_m_for_n(double n);

/// Labels w = 0, x = 1..ell, y = ell+1..2ell, z = the rest, identity cycle,
/// chords per the z labels. Does not satisfy the metric constraints.
GadgetSpec default_gadget_labels(int m);

/// H** = star centered at w; H* adds m+1 ~ x_i and m+2 ~ y_j.
std::pair<Graph, Graph> build_h(const GadgetSpec& spec);
/// Default labels; needs only m >= 2 ell + 1.
std::pair<Graph, Graph> build_h(int m);

/// G** from the spec's cycle and chords; G* adds m+1, m+2 and the edges
/// {m+1,m+2}, {m+1,z3}, {m+1,z11}, {m+2,z5}, {m+2,z9}.
std::pair<Graph, Graph> g_graphs(const GadgetSpec& spec);

struct GadgetBuildStats {
  int distance_floor = 0;  // ceil(m / (3 ell))
  int girth_floor = 0;     // ceil(m / 6)
  std::uint64_t layouts_examined = 0;
  std::uint64_t layouts_verified = 0;
};

struct GadgetG {
  Graph g_star_star;
  Graph g_star;
  GadgetSpec spec;
  GadgetBuildStats stats;
};

/// Searches for a placement meeting all five layout constraints. Throws
/// ParameterError when m < 2 ell + 13 and InfeasibleError (naming the last
/// constraint that failed) when no placement is found.
GadgetG build_g(int m);

/// Gadget with the chord structure and labels but no metric guarantees; the
/// z_3..z_5 gap is stretched to 2 when ell < 3. Used where only the edge
/// structure matters (subset scans at small m).
GadgetG build_g_layout_only(int m);

GadgetBundle build_gadgets(int m);
GadgetBundle layout_only_gadgets(int m);
GadgetBundle bundle_from_spec(const GadgetSpec& spec);

/// Smallest m in [lo, hi] for which build_g succeeds, or -1.
int smallest_feasible_gadget_m(int lo, int hi);

struct ConstraintCheck {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct GadgetReport {
  std::vector<ConstraintCheck> checks;
  bool all_passed() const;
  bool passed(const std::string& id) const;
  const ConstraintCheck* find(const std::string& id) const;
};

/// Checks labels, chord set, edge counts, the five layout constraints, the
/// independence of Gamma and agreement of G*, H* with G**, H** on [m].
/// Constraint ids: "labels", "chords", "order", "c1".."c5", "edge_counts",
/// "gamma_independent", "restriction".
GadgetReport validate_gadget(const GadgetBundle& bundle);

enum class ExtraPairStatus { kVerified, kIndeterminate, kRefuted };
const char* to_string(ExtraPairStatus status);

struct ExtraPairResult {
  ExtraPairStatus status = ExtraPairStatus::kIndeterminate;
  std::vector<Permutation> path;
  std::uint64_t explored = 0;
};

/// Bounded search in FS(G*, H*) from the identity to the identity with m+1
/// and m+2 exchanged. A returned path has been replayed; exhaustion of the
/// budget is indeterminate.
ExtraPairResult verify_extra_pair(const GadgetBundle& bundle,
                               std::uint64_t budget);

}  // namespace fsg
