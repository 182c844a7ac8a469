#include "fsgraph/gadgets.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "fsgraph/errors.hpp"

namespace fsg {

int gadget_ell(int m) {
  if (m < 0) throw ParameterError("gadget size must be non-negative");
  int root = static_cast<int>(std::sqrt(static_cast<double>(m)));
  while (root * root > m) --root;
  while ((root + 1) * (root + 1) <= m) ++root;
  return root / 2;
}

bool gadget_size_ok(int m) { return m >= 2 * gadget_ell(m) + 13; }

int gadget_m_for_n(double n) {
  if (!(n > 1.0)) throw ParameterError("gadget_m_for_n needs n > 1");
  return static_cast<int>(std::floor(std::pow(std::log(n), 2.0 / 3.0)));
}

std::vector<int> GadgetSpec::gamma() const {
  std::vector<int> out(x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  for (int k : {3, 5, 9, 11}) out.push_back(z_label(k));
  return out;
}

namespace {

void require_size(int m) {
  if (!gadget_size_ok(m)) {
    throw ParameterError("gadget needs m >= 2*ell+13 so that z_1..z_12 exist (m=" +
                         std::to_string(m) + ", ell=" +
                         std::to_string(gadget_ell(m)) + ", minimum " +
                         std::to_string(2 * gadget_ell(m) + 13) + ")");
  }
}

std::vector<Edge> chords_for(const std::vector<int>& z) {
  auto lab = [&](int k) { return z[static_cast<std::size_t>(k - 1)]; };
  return {{lab(1), lab(6)}, {lab(2), lab(4)}, {lab(7), lab(12)}, {lab(8), lab(10)}};
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Lays z_1..z_12 out on cycle positions. Arcs: a = z1->z2, b = z2->z3,
// c = z6->z7, d = z7->z8, e = z8->z9, f = z12->z1; `gap` is the z3->z5
// (and z9->z11) distance.
struct Arcs {
  std::array<int, 6> len{};
};

std::array<int, 13> z_positions(const Arcs& arcs, int gap) {
  const auto& [a, b, c, d, e, f] = arcs.len;
  (void)f;
  std::array<int, 13> z{};
  z[1] = 0;
  z[2] = a;
  z[3] = a + b;
  z[4] = z[3] + gap - 1;
  z[5] = z[3] + gap;
  z[6] = z[5] + 1;
  z[7] = z[6] + c;
  z[8] = z[7] + d;
  z[9] = z[8] + e;
  z[10] = z[9] + gap - 1;
  z[11] = z[9] + gap;
  z[12] = z[11] + 1;
  return z;
}

GadgetSpec spec_from_layout(int m, int ell, const std::array<int, 13>& zpos,
                            const std::vector<int>& specials) {
  GadgetSpec spec;
  spec.m = m;
  spec.ell = ell;
  spec.w = specials[0];
  spec.x.assign(specials.begin() + 1, specials.begin() + 1 + ell);
  spec.y.assign(specials.begin() + 1 + ell, specials.begin() + 1 + 2 * ell);
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  for (int k = 1; k <= 12; ++k) {
    spec.z.push_back(zpos[k]);
    used[zpos[k]] = 1;
  }
  for (int s : specials) used[s] = 1;
  for (int v = 0; v < m; ++v) {
    if (!used[v]) spec.z.push_back(v);
  }
  spec.cycle_order.resize(static_cast<std::size_t>(m));
  std::iota(spec.cycle_order.begin(), spec.cycle_order.end(), 0);
  spec.chords = chords_for(spec.z);
  return spec;
}

}  // namespace

GadgetSpec default_gadget_labels(int m) {
  require_size(m);
  const int ell = gadget_ell(m);
  GadgetSpec spec;
  spec.m = m;
  spec.ell = ell;
  spec.w = 0;
  for (int i = 0; i < ell; ++i) spec.x.push_back(1 + i);
  for (int i = 0; i < ell; ++i) spec.y.push_back(1 + ell + i);
  for (int v = 2 * ell + 1; v < m; ++v) spec.z.push_back(v);
  spec.cycle_order.resize(static_cast<std::size_t>(m));
  std::iota(spec.cycle_order.begin(), spec.cycle_order.end(), 0);
  spec.chords = chords_for(spec.z);
  return spec;
}

std::pair<Graph, Graph> build_h(const GadgetSpec& spec) {
  const int m = spec.m;
  Graph hss(m);
  for (int v = 0; v < m; ++v) {
    if (v != spec.w) hss.add_edge(spec.w, v);
  }
  Graph hs(m + 2);
  for (const Edge& e : hss.edges()) hs.add_edge(e.u, e.v);
  for (int xi : spec.x) hs.add_edge(m, xi);
  for (int yj : spec.y) hs.add_edge(m + 1, yj);
  return {std::move(hss), std::move(hs)};
}

// H only needs w, x and y, so sizes below the z-label minimum are accepted.
std::pair<Graph, Graph> build_h(int m) {
  const int ell = gadget_ell(m);
  if (m < 2 * ell + 1) {
    throw ParameterError("build_h needs m >= 2*ell+1 (m=" + std::to_string(m) +
                         ", minimum " + std::to_string(2 * ell + 1) + ")");
  }
  if (gadget_size_ok(m)) return build_h(default_gadget_labels(m));
  GadgetSpec spec;
  spec.m = m;
  spec.ell = ell;
  spec.w = 0;
  for (int i = 0; i < ell; ++i) spec.x.push_back(1 + i);
  for (int i = 0; i < ell; ++i) spec.y.push_back(1 + ell + i);
  return build_h(spec);
}

std::pair<Graph, Graph> g_graphs(const GadgetSpec& spec) {
  const int m = spec.m;
  Graph gss(m);
  for (int i = 0; i < m; ++i) {
    gss.add_edge(spec.cycle_order[i], spec.cycle_order[(i + 1) % m]);
  }
  for (const Edge& e : spec.chords) gss.add_edge(e.u, e.v);
  Graph gs(m + 2);
  for (const Edge& e : gss.edges()) gs.add_edge(e.u, e.v);
  gs.add_edge(m, m + 1);
  gs.add_edge(m, spec.z_label(3));
  gs.add_edge(m, spec.z_label(11));
  gs.add_edge(m + 1, spec.z_label(5));
  gs.add_edge(m + 1, spec.z_label(9));
  return {std::move(gss), std::move(gs)};
}

GadgetBundle bundle_from_spec(const GadgetSpec& spec) {
  GadgetBundle bundle;
  std::tie(bundle.g_star_star, bundle.g_star) = g_graphs(spec);
  std::tie(bundle.h_star_star, bundle.h_star) = build_h(spec);
  bundle.spec = spec;
  return bundle;
}

namespace {

// Exclusion radii (left, right) of each arc: a vertex at offset t from an
// arc's left end stays at least `floor` away from z3, z5, z9, z11 exactly
// when t >= left and (len - t) >= right. The small reductions come from the
// chords, e.g. z1 reaches z5 in two steps through z6.
std::array<std::pair<int, int>, 6> arc_radii(int floor) {
  const int r2 = std::max(1, floor - 2);
  const int r1 = std::max(1, floor - 1);
  const int r0 = std::max(1, floor);
  return {{{r2, r2}, {r2, r0}, {r1, r2}, {r2, r2}, {r2, r0}, {r1, r2}}};
}

int arc_capacity(int len, std::pair<int, int> radii, int floor) {
  const int room = len - radii.first - radii.second;
  return room < 0 ? 0 : room / floor + 1;
}

// Offsets of the arcs' left ends on the cycle.
std::array<int, 6> arc_starts(const std::array<int, 13>& z) {
  return {z[1], z[2], z[6], z[7], z[8], z[12]};
}

struct Candidate {
  Arcs arcs;
  int capacity = 0;
};

// Greedy placement on exact G** distances: scan the allowed vertices in
// cycle order from every starting point.
std::vector<int> greedy_specials(const Graph& gss, const std::array<int, 13>& z,
                                 int need, int floor) {
  const int m = gss.size();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) dist[v] = bfs_distances(gss, v);
  std::vector<char> is_z(static_cast<std::size_t>(m), 0);
  for (int k = 1; k <= 12; ++k) is_z[z[k]] = 1;
  std::vector<int> allowed;
  for (int v = 0; v < m; ++v) {
    if (is_z[v]) continue;
    bool ok = true;
    for (int k : {3, 5, 9, 11}) ok = ok && dist[v][z[k]] >= floor;
    if (ok) allowed.push_back(v);
  }
  for (std::size_t start = 0; start < allowed.size(); ++start) {
    std::vector<int> chosen;
    for (std::size_t i = 0; i < allowed.size(); ++i) {
      const int v = allowed[(start + i) % allowed.size()];
      bool ok = true;
      for (int s : chosen) ok = ok && dist[v][s] >= floor;
      if (ok) chosen.push_back(v);
      if (static_cast<int>(chosen.size()) == need) return chosen;
    }
  }
  return {};
}

}  // namespace

GadgetG build_g(int m) {
  require_size(m);
  const int ell = gadget_ell(m);
  const int need = 2 * ell + 1;
  GadgetG out;
  out.stats.distance_floor = ceil_div(m, 3 * ell);
  out.stats.girth_floor = ceil_div(m, 6);
  const int floor = out.stats.distance_floor;
  const int girth_floor = out.stats.girth_floor;
  const int gap = ell - 1;
  if (gap < 2) {
    throw InfeasibleError(
        "no gadget for m=" + std::to_string(m) +
        ": constraint c2 fails (z3->z5 distance ell-1 = " + std::to_string(gap) +
        " leaves no room for z4 between z3 and z5)");
  }

  const auto radii = arc_radii(floor);
  const int total = m - 2 * (gap + 1);  // a+b+c+d+e+f
  // Necessary girth bounds from the short cycles through the chords.
  const int lb_a = std::max(1, girth_floor - 4);        // z1..z2, z2z4, z4..z6, z6z1
  const int lb_b = std::max(1, girth_floor - gap);      // z2..z4 plus chord
  const int lb_cf = std::max(2, girth_floor - 2);       // z1z6, c, z7z12, f
  // z5 reaches z11 through either chord pair in min(c,f)+3 steps.
  const int lb_spread = std::max(1, floor - 3);

  // Best (a,b) split for each block length T, respecting the parity of the
  // z2->z4 distance.
  std::vector<int> pair_cap(static_cast<std::size_t>(total + 1), -1);
  std::vector<int> pair_a(static_cast<std::size_t>(total + 1), 0);
  for (int a = lb_a; a <= total; ++a) {
    for (int b = lb_b; a + b <= total; ++b) {
      if ((b + gap - 1) % 2 != 0) continue;
      const int cap =
          arc_capacity(a, radii[0], floor) + arc_capacity(b, radii[1], floor);
      if (cap > pair_cap[a + b]) {
        pair_cap[a + b] = cap;
        pair_a[a + b] = a;
      }
    }
  }
  std::vector<int> quad_cap(static_cast<std::size_t>(total + 1), -1);
  std::vector<int> quad_split(static_cast<std::size_t>(total + 1), 0);
  for (int t1 = 0; t1 <= total; ++t1) {
    if (pair_cap[t1] < 0) continue;
    for (int t2 = 0; t1 + t2 <= total; ++t2) {
      if (pair_cap[t2] < 0) continue;
      const int cap = pair_cap[t1] + pair_cap[t2];
      if (cap > quad_cap[t1 + t2]) {
        quad_cap[t1 + t2] = cap;
        quad_split[t1 + t2] = t1;
      }
    }
  }

  std::vector<Candidate> candidates;
  int best_capacity = -1;
  for (int c = 1; c < total; ++c) {
    for (int f = 1; c + f < total; ++f) {
      if (c + f < lb_cf || std::min(c, f) < lb_spread) continue;
      const int rest = total - c - f;
      if (quad_cap[rest] < 0) continue;
      ++out.stats.layouts_examined;
      const int cap = quad_cap[rest] + arc_capacity(c, radii[2], floor) +
                      arc_capacity(f, radii[5], floor);
      best_capacity = std::max(best_capacity, cap);
      if (cap < need) continue;
      const int t1 = quad_split[rest];
      const int t2 = rest - t1;
      Candidate cand;
      cand.arcs.len = {pair_a[t1], t1 - pair_a[t1], c, pair_a[t2], t2 - pair_a[t2], f};
      cand.capacity = cap;
      candidates.push_back(cand);
    }
  }
  if (best_capacity < 0) {
    throw InfeasibleError("no gadget for m=" + std::to_string(m) +
                          ": constraint c5 fails (girth floor " +
                          std::to_string(girth_floor) +
                          " forces arcs longer than the cycle)");
  }
  if (candidates.empty()) {
    throw InfeasibleError(
        "no gadget for m=" + std::to_string(m) + ": constraint c4 fails (at most " +
        std::to_string(best_capacity) + " of " + std::to_string(need) +
        " special vertices fit at separation " + std::to_string(floor) + ")");
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& l, const Candidate& r) {
                     const int lb = std::abs(l.arcs.len[2] - l.arcs.len[5]);
                     const int rb = std::abs(r.arcs.len[2] - r.arcs.len[5]);
                     return std::tie(r.capacity, lb) < std::tie(l.capacity, rb);
                   });

  constexpr std::size_t kMaxVerified = 256;
  std::string last_failure;
  for (std::size_t i = 0; i < candidates.size() && i < kMaxVerified; ++i) {
    const Candidate& cand = candidates[i];
    ++out.stats.layouts_verified;
    const auto z = z_positions(cand.arcs, gap);
    const auto starts = arc_starts(z);
    std::vector<int> specials;
    for (int arc = 0; arc < 6; ++arc) {
      const int cap = arc_capacity(cand.arcs.len[arc], radii[arc], floor);
      for (int j = 0; j < cap; ++j) {
        specials.push_back((starts[arc] + radii[arc].first + j * floor) % m);
      }
    }
    std::sort(specials.begin(), specials.end());
    specials.resize(static_cast<std::size_t>(need));

    GadgetBundle bundle = bundle_from_spec(spec_from_layout(m, ell, z, specials));
    GadgetReport report = validate_gadget(bundle);
    if (!report.all_passed()) {
      auto alt = greedy_specials(bundle.g_star_star, z, need, floor);
      if (!alt.empty()) {
        bundle = bundle_from_spec(spec_from_layout(m, ell, z, alt));
        report = validate_gadget(bundle);
      }
    }
    if (report.all_passed()) {
      out.g_star_star = std::move(bundle.g_star_star);
      out.g_star = std::move(bundle.g_star);
      out.spec = std::move(bundle.spec);
      return out;
    }
    for (const auto& check : report.checks) {
      if (!check.passed) last_failure = check.id + " (" + check.detail + ")";
    }
  }
  throw InfeasibleError("no gadget for m=" + std::to_string(m) +
                        ": last failing constraint " + last_failure);
}

GadgetG build_g_layout_only(int m) {
  require_size(m);
  const int ell = gadget_ell(m);
  const int gap = std::max(ell - 1, 2);
  const int total = m - 2 * (gap + 1);
  if (total < 6) {
    throw InfeasibleError("layout-only gadget needs m >= " +
                          std::to_string(2 * (gap + 1) + 6));
  }
  Arcs arcs;
  for (int i = 0; i < 6; ++i) arcs.len[i] = total / 6 + (i < total % 6 ? 1 : 0);
  if ((arcs.len[1] + gap - 1) % 2 != 0) {
    if (arcs.len[1] > 1) {
      --arcs.len[1];
    } else {
      --arcs.len[0];
    }
    ++arcs.len[5];
  }
  const auto z = z_positions(arcs, gap);
  std::vector<char> is_z(static_cast<std::size_t>(m), 0);
  for (int k = 1; k <= 12; ++k) is_z[z[k]] = 1;
  std::vector<int> free;
  for (int v = 0; v < m; ++v) {
    if (!is_z[v]) free.push_back(v);
  }
  const int need = 2 * ell + 1;
  // x and y must avoid each other and z3, z5, z9, z11 on the cycle (the only
  // G** edges at non-z vertices); w may sit anywhere.
  std::vector<char> blocked(static_cast<std::size_t>(m), 0);
  for (int k : {3, 5, 9, 11}) {
    blocked[(z[k] + 1) % m] = 1;
    blocked[(z[k] + m - 1) % m] = 1;
  }
  std::vector<int> picked;
  auto fits = [&](int v) {
    if (blocked[v]) return false;
    for (int u : picked) {
      if ((u + 1) % m == v || (v + 1) % m == u) return false;
    }
    return true;
  };
  auto place = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(picked.size()) == need - 1) return true;
    for (std::size_t i = from; i < free.size(); ++i) {
      if (!fits(free[i])) continue;
      picked.push_back(free[i]);
      if (self(self, i + 1)) return true;
      picked.pop_back();
    }
    return false;
  };
  std::vector<int> specials;
  if (place(place, 0)) {
    for (int v : free) {
      if (std::find(picked.begin(), picked.end(), v) == picked.end()) {
        specials.push_back(v);
        break;
      }
    }
    specials.insert(specials.end(), picked.begin(), picked.end());
  } else {
    for (int i = 0; i < need; ++i) {
      specials.push_back(free[static_cast<std::size_t>(i) * free.size() /
                              static_cast<std::size_t>(need)]);
    }
  }
  GadgetG out;
  out.stats.distance_floor = ceil_div(m, 3 * ell);
  out.stats.girth_floor = ceil_div(m, 6);
  out.spec = spec_from_layout(m, ell, z, specials);
  std::tie(out.g_star_star, out.g_star) = g_graphs(out.spec);
  return out;
}

namespace {

GadgetBundle bundle_from_g(GadgetG g) {
  GadgetBundle bundle;
  bundle.g_star_star = std::move(g.g_star_star);
  bundle.g_star = std::move(g.g_star);
  std::tie(bundle.h_star_star, bundle.h_star) = build_h(g.spec);
  bundle.spec = std::move(g.spec);
  return bundle;
}

}  // namespace

GadgetBundle build_gadgets(int m) { return bundle_from_g(build_g(m)); }

GadgetBundle layout_only_gadgets(int m) {
  return bundle_from_g(build_g_layout_only(m));
}

int smallest_feasible_gadget_m(int lo, int hi) {
  for (int m = lo; m <= hi; ++m) {
    if (!gadget_size_ok(m)) continue;
    try {
      build_g(m);
      return m;
    } catch (const InfeasibleError&) {
    }
  }
  return -1;
}

bool GadgetReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ConstraintCheck& c) { return c.passed; });
}

const ConstraintCheck* GadgetReport::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

bool GadgetReport::passed(const std::string& id) const {
  const auto* c = find(id);
  return c != nullptr && c->passed;
}

GadgetReport validate_gadget(const GadgetBundle& bundle) {
  GadgetReport report;
  const GadgetSpec& spec = bundle.spec;
  const int m = spec.m;
  const int ell = spec.ell;
  auto add = [&](std::string id, std::string description, bool passed,
                 std::string detail = "") {
    report.checks.push_back(
        {std::move(id), std::move(description), passed, std::move(detail)});
  };

  // Labels must partition [m] with the expected block sizes; everything
  // after this depends on it.
  bool labels_ok = m >= 1 && ell == gadget_ell(m) &&
                   static_cast<int>(spec.x.size()) == ell &&
                   static_cast<int>(spec.y.size()) == ell &&
                   static_cast<int>(spec.z.size()) == m - 2 * ell - 1 &&
                   spec.z.size() >= 12 &&
                   static_cast<int>(spec.cycle_order.size()) == m &&
                   bundle.g_star_star.size() == m &&
                   bundle.h_star_star.size() == m &&
                   bundle.g_star.size() == m + 2 && bundle.h_star.size() == m + 2;
  if (labels_ok) {
    std::vector<int> seen(static_cast<std::size_t>(m), 0);
    auto mark = [&](int v) {
      if (v < 0 || v >= m) {
        labels_ok = false;
      } else {
        ++seen[v];
      }
    };
    mark(spec.w);
    for (int v : spec.x) mark(v);
    for (int v : spec.y) mark(v);
    for (int v : spec.z) mark(v);
    std::vector<int> cyc(static_cast<std::size_t>(m), 0);
    for (int v : spec.cycle_order) {
      if (v < 0 || v >= m) {
        labels_ok = false;
      } else {
        ++cyc[v];
      }
    }
    for (int v = 0; v < m && labels_ok; ++v) {
      labels_ok = seen[v] == 1 && cyc[v] == 1;
    }
  }
  add("labels", "w, x, y, z labels and the cycle order partition [m]", labels_ok);
  if (!labels_ok) return report;

  std::vector<int> pos(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pos[spec.cycle_order[i]] = i;
  auto ccw = [&](int from, int to) { return ((pos[to] - pos[from]) % m + m) % m; };
  auto z = [&](int k) { return spec.z_label(k); };
  const Graph& gss = bundle.g_star_star;

  // Chords and the overall edge set of G**.
  {
    const std::vector<Edge> expected = chords_for(spec.z);
    auto norm = [](std::vector<Edge> es) {
      for (Edge& e : es) {
        if (e.u > e.v) std::swap(e.u, e.v);
      }
      std::sort(es.begin(), es.end());
      return es;
    };
    bool ok = norm(spec.chords) == norm(expected);
    std::string detail;
    Graph ring(m);
    for (int i = 0; i < m; ++i) {
      ring.add_edge(spec.cycle_order[i], spec.cycle_order[(i + 1) % m]);
    }
    for (const Edge& e : expected) {
      if (ring.has_edge(e.u, e.v)) {
        ok = false;
        detail = "chord coincides with a cycle edge";
      }
      ring.add_edge(e.u, e.v);
    }
    if (!(ring == gss)) {
      ok = false;
      detail = "G** is not the cycle plus the four chords";
    }
    add("chords", "chords are exactly {z1,z6}, {z2,z4}, {z7,z12}, {z8,z10}", ok,
        detail);
  }

  {
    bool ok = true;
    for (int k = 1; k < 12; ++k) ok = ok && ccw(z(1), z(k)) < ccw(z(1), z(k + 1));
    add("order", "z1..z12 appear in anticlockwise order", ok);
  }

  {
    auto adjacent = [&](int a, int b) { return ccw(a, b) == 1 || ccw(b, a) == 1; };
    const bool ok = adjacent(z(4), z(5)) && adjacent(z(5), z(6)) &&
                    adjacent(z(10), z(11)) && adjacent(z(11), z(12));
    add("c1", "cycle contains {z4,z5}, {z5,z6}, {z10,z11}, {z11,z12}", ok);
  }

  {
    const int d1 = ccw(z(3), z(5));
    const int d2 = ccw(z(9), z(11));
    add("c2", "anticlockwise z3->z5 and z9->z11 distances equal ell-1",
        d1 == ell - 1 && d2 == ell - 1,
        "z3->z5=" + std::to_string(d1) + ", z9->z11=" + std::to_string(d2) +
            ", ell-1=" + std::to_string(ell - 1));
  }

  {
    const int d = ccw(z(2), z(4));
    add("c3", "anticlockwise z2->z4 distance is even", d % 2 == 0,
        "z2->z4=" + std::to_string(d));
  }

  {
    std::vector<int> specials{spec.w};
    specials.insert(specials.end(), spec.x.begin(), spec.x.end());
    specials.insert(specials.end(), spec.y.begin(), spec.y.end());
    const std::array<int, 4> targets{z(3), z(5), z(9), z(11)};
    int worst = m;
    std::string where;
    for (std::size_t i = 0; i < specials.size(); ++i) {
      const auto dist = bfs_distances(gss, specials[i]);
      auto consider = [&](int other) {
        const int d = dist[other];
        if (d != kUnreachable && d < worst) {
          worst = d;
          where = std::to_string(specials[i]) + "-" + std::to_string(other);
        }
      };
      for (std::size_t j = i + 1; j < specials.size(); ++j) consider(specials[j]);
      for (int t : targets) consider(t);
    }
    add("c4", "special vertices pairwise and to z3,z5,z9,z11 at distance >= m/(3 ell)",
        3 * ell * worst >= m,
        "min distance " + std::to_string(worst) + " at " + where + ", bound " +
            std::to_string(m) + "/" + std::to_string(3 * ell));
  }

  // The pairs {z3,z5} and {z9,z11} are adjacent to the same extra vertex in G*,
  // every other pair of Gamma must be far apart.
  {
    const std::array<std::pair<int, int>, 4> pairs{
        {{3, 9}, {3, 11}, {5, 9}, {5, 11}}};
    int worst = m;
    std::string where;
    for (auto [i, j] : pairs) {
      const int d = bfs_distances(gss, z(i))[z(j)];
      if (d != kUnreachable && d < worst) {
        worst = d;
        where = "z" + std::to_string(i) + "-z" + std::to_string(j);
      }
    }
    add("gamma_spread", "z3,z5 vs z9,z11 at distance >= m/(3 ell)",
        3 * ell * worst >= m,
        "min distance " + std::to_string(worst) + " at " + where);
  }

  {
    const auto g = girth(gss);
    const bool ok = !g || 6 * *g >= m;
    add("c5", "girth(G**) >= m/6", ok,
        "girth " + (g ? std::to_string(*g) : std::string("inf")) + ", bound " +
            std::to_string(m) + "/6");
  }

  {
    const auto ehss = bundle.h_star_star.edge_count();
    const auto ehs = bundle.h_star.edge_count();
    const auto egss = gss.edge_count();
    const auto egs = bundle.g_star.edge_count();
    const auto um = static_cast<std::size_t>(m);
    const auto ul = static_cast<std::size_t>(ell);
    const bool ok = ehss == um - 1 && ehs == um - 1 + 2 * ul && egss == um + 4 &&
                    egs == um + 9;
    add("edge_counts", "|E| of H**, H*, G**, G* = m-1, m-1+2ell, m+4, m+9", ok,
        std::to_string(ehss) + ", " + std::to_string(ehs) + ", " +
            std::to_string(egss) + ", " + std::to_string(egs));
  }

  {
    const auto gamma = spec.gamma();
    bool ok = true;
    for (std::size_t i = 0; i < gamma.size(); ++i)
      for (std::size_t j = i + 1; j < gamma.size(); ++j)
        ok = ok && !gss.has_edge(gamma[i], gamma[j]);
    add("gamma_independent", "Gamma is an independent set in G**", ok);
  }

  {
    std::vector<int> base(static_cast<std::size_t>(m));
    std::iota(base.begin(), base.end(), 0);
    bool ok = induced_subgraph(bundle.g_star, base) == gss &&
              induced_subgraph(bundle.h_star, base) == bundle.h_star_star;
    // Extra edges of G* and H* are exactly the listed ones.
    Graph g_extra(m + 2);
    g_extra.add_edge(m, m + 1);
    g_extra.add_edge(m, z(3));
    g_extra.add_edge(m, z(11));
    g_extra.add_edge(m + 1, z(5));
    g_extra.add_edge(m + 1, z(9));
    Graph h_extra(m + 2);
    for (int v : spec.x) h_extra.add_edge(m, v);
    for (int v : spec.y) h_extra.add_edge(m + 1, v);
    for (int v : {m, m + 1}) {
      ok = ok && bundle.g_star.neighbors(v) == g_extra.neighbors(v) &&
           bundle.h_star.neighbors(v) == h_extra.neighbors(v);
    }
    const bool star_ok = bundle.h_star_star.degree(spec.w) == m - 1 &&
                         bundle.h_star_star.edge_count() ==
                             static_cast<std::size_t>(m - 1);
    add("restriction",
        "G*, H* agree with G**, H** on [m]; H** is the star at w; extra edges as listed",
        ok && star_ok);
  }
  return report;
}

const char* to_string(ExtraPairStatus status) {
  switch (status) {
    case ExtraPairStatus::kVerified:
      return "verified";
    case ExtraPairStatus::kIndeterminate:
      return "indeterminate";
    case ExtraPairStatus::kRefuted:
      return "refuted";
  }
  return "unknown";
}

ExtraPairResult verify_extra_pair(const GadgetBundle& bundle, std::uint64_t budget) {
  if (budget == 0) throw ParameterError("verification budget must be positive");
  const int m = bundle.spec.m;
  const FsInstance inst(bundle.g_star, bundle.h_star);
  const Permutation id = Permutation::identity(m + 2);
  const Permutation target = apply_transposition(id, m, m + 1);
  auto search = find_path(inst, id, target, budget);
  ExtraPairResult result;
  result.explored = search.explored;
  switch (search.status) {
    case PathStatus::kFound:
      result.status = ExtraPairStatus::kVerified;
      result.path = std::move(search.path);
      break;
    case PathStatus::kNoPath:
      result.status = ExtraPairStatus::kRefuted;
      break;
    case PathStatus::kBudgetExhausted:
      result.status = ExtraPairStatus::kIndeterminate;
      break;
  }
  return result;
}

}  // namespace fsg
