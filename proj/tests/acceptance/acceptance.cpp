// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fsgraph/embed.hpp"
#include "fsgraph/errors.hpp"
#include "fsgraph/exchange.hpp"
#include "fsgraph/fs_graph.hpp"
#include "fsgraph/gadgets.hpp"
#include "fsgraph/graph.hpp"
#include "fsgraph/packing.hpp"
#include "fsgraph/permutation.hpp"
#include "fsgraph/rng.hpp"
#include "fsgraph/threshold_lab.hpp"
#include "oracles.hpp"

using namespace fsg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Permutation random_perm(int n, Rng& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = i;
  rng.shuffle(std::span<int>(images));
  return Permutation(std::move(images));
}

std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.has_edge(u, v)) out.push_back({u, v});
  return out;
}

Outcome ac1_complete_x() {
  int checked = 0, wrong = 0;
  const auto start = Clock::now();
  for (std::uint64_t s = 0; s < 120; ++s) {
    Rng rng(derive_seed(101, s));
    const int n = 4 + static_cast<int>(s % 3);
    const Graph y = gnp(n, 0.15 + 0.7 * rng.uniform(), rng.next());
    const bool fs_conn = decompose(FsInstance(complete_graph(n), y)).component_count == 1;
    wrong += fs_conn != is_connected(y);
    ++checked;
  }
  const double t = seconds_since(start);
  return {wrong == 0 && t < 60,
          std::to_string(checked) + " graphs, " + std::to_string(wrong) + " mismatches, " +
              std::to_string(t) + " s"};
}

Outcome ac2_inversion() {
  int pairs = 0, bad_edges = 0, bad_summary = 0;
  std::uint64_t edges = 0;
  const auto start = Clock::now();
  for (std::uint64_t s = 0; s < 60; ++s) {
    Rng rng(derive_seed(202, s));
    const int n = 4 + static_cast<int>(s % 2);
    const Graph x = gnp(n, 0.3 + 0.5 * rng.uniform(), rng.next());
    const Graph y = gnp(n, 0.3 + 0.5 * rng.uniform(), rng.next());
    const FsInstance xy(x, y), yx(y, x);
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      const Permutation sigma = unrank(r, n);
      const auto nbrs = fs_neighbors(xy, sigma);
      if (static_cast<int>(nbrs.size()) != fs_degree(yx, inverse(sigma))) ++bad_edges;
      for (const auto& tau : nbrs) {
        ++edges;
        if (!fs_adjacent(yx, inverse(sigma), inverse(tau))) ++bad_edges;
      }
    }
    bad_summary += !(decompose(xy) == decompose(yx));
    ++pairs;
  }
  const double t = seconds_since(start);
  return {bad_edges == 0 && bad_summary == 0 && t < 60,
          std::to_string(pairs) + " pairs, " + std::to_string(edges) + " directed edges, " +
              std::to_string(bad_edges) + " adjacency and " + std::to_string(bad_summary) +
              " summary mismatches, " + std::to_string(t) + " s"};
}

Outcome ac3_monotone() {
  int pairs = 0, violations = 0;
  for (std::uint64_t s = 0; s < 60; ++s) {
    Rng rng(derive_seed(303, s));
    const int n = 5;
    Graph x = gnp(n, 0.2 + 0.6 * rng.uniform(), rng.next());
    Graph y = gnp(n, 0.2 + 0.6 * rng.uniform(), rng.next());
    const auto before = decompose(FsInstance(x, y)).component_count;
    Graph& target = rng.bernoulli(0.5) ? x : y;
    const auto missing = non_edges(target);
    if (missing.empty()) continue;
    const Edge e = missing[rng.below(missing.size())];
    target.add_edge(e.u, e.v);
    violations += decompose(FsInstance(x, y)).component_count > before;
    ++pairs;
  }
  return {pairs >= 50 && violations == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(violations) + " violations"};
}

Outcome ac4_packing() {
  int pairs = 0, failures = 0, attempts = 0;
  for (std::uint64_t s = 0; pairs < 120 && attempts < 100000; ++s, ++attempts) {
    Rng rng(derive_seed(404, s));
    const int n = 4 + static_cast<int>(rng.below(5));
    const Graph x = gnp(n, 0.1 + 0.3 * rng.uniform(), rng.next());
    const Graph y = gnp(n, 0.1 + 0.3 * rng.uniform(), rng.next());
    if (x.edge_count() == 0 || y.edge_count() == 0) continue;
    if (2 * max_degree(x) * max_degree(y) >= n) continue;
    ++pairs;
    const auto r = find_packing(x, y, ExactPacking{});
    if (r.status != PackingStatus::kFound || !r.sigma ||
        !fs_neighbors(FsInstance(x, y), *r.sigma).empty()) {
      ++failures;
    }
  }
  return {pairs >= 100 && failures == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(failures) + " failures"};
}

Outcome ac5_exchange() {
  int queries = 0, decided = 0, disagreements = 0;
  for (std::uint64_t s = 0; queries < 600; ++s) {
    Rng rng(derive_seed(505, s));
    const int n = 3 + static_cast<int>(rng.below(3));
    const Graph x = gnp(n, 0.3 + 0.5 * rng.uniform(), rng.next());
    const Graph y = gnp(n, 0.3 + 0.5 * rng.uniform(), rng.next());
    const FsInstance inst(x, y);
    const FsComponents table(inst);
    for (int k = 0; k < 10; ++k) {
      ExchangeQuery q{random_perm(n, rng), 0, 0};
      q.u = static_cast<int>(rng.below(n));
      q.v = static_cast<int>(rng.below(n - 1));
      if (q.v >= q.u) ++q.v;
      const auto exact = exchangeable(inst, q, ExactMode{});
      const auto bounded = exchangeable(inst, q, BoundedMode{});
      if (exact.status != exchangeable(inst, table, q).status) ++disagreements;
      ++queries;
      if (bounded.status == ExchangeStatus::kIndeterminate) continue;
      ++decided;
      disagreements += bounded.status != exact.status;
    }
  }
  return {queries >= 500 && disagreements == 0,
          std::to_string(queries) + " queries, " + std::to_string(decided) +
              " decided by bounded search, " + std::to_string(disagreements) +
              " disagreements"};
}

Outcome ac6_gadgets() {
  const int smallest = smallest_feasible_gadget_m(17, 400);
  if (smallest < 0) return {false, "no feasible m in 17..400"};
  Outcome out;
  out.detail = "m =";
  for (int m : {smallest, 250, 300}) {
    const GadgetBundle b = build_gadgets(m);
    const GadgetReport r = validate_gadget(b);
    const int ell = b.spec.ell;
    const bool counts = b.h_star_star.edge_count() == static_cast<std::size_t>(m - 1) &&
                        b.h_star.edge_count() == static_cast<std::size_t>(m - 1 + 2 * ell) &&
                        b.g_star_star.edge_count() == static_cast<std::size_t>(m + 4) &&
                        b.g_star.edge_count() == static_cast<std::size_t>(m + 9);
    bool independent = true;
    const auto gamma = b.spec.gamma();
    for (int a : gamma)
      for (int c : gamma) independent = independent && !b.g_star_star.has_edge(a, c);
    const bool ok = r.all_passed() && counts && independent;
    out.ok = out.ok && ok;
    out.detail += " " + std::to_string(m) + (ok ? "" : "(failed)");
    for (const auto& c : r.checks)
      if (!c.passed) out.detail += " [" + c.id + ": " + c.detail + "]";
  }
  out.detail += ", smallest feasible " + std::to_string(smallest);
  return out;
}

Outcome ac7_janson() {
  // Single edge on [2], H edgeless, q1 = q2 = q, p1 = 1, n = e:
  // q^2 >= 3 * 2^3 * 2q, i.e. q >= 48.
  const Graph g = complete_graph(2), h(2);
  const double e = std::exp(1.0);
  bool hand = true;
  for (std::uint64_t q = 1; q <= 100; ++q) {
    const std::vector<std::uint64_t> qv{q, q};
    const auto r = janson_hypothesis(g, h, qv, 1.0, 0.5, e, true);
    const double lhs = static_cast<double>(q * q), rhs = 48.0 * static_cast<double>(q);
    hand = hand && r.passed == (lhs >= rhs) && r.rows.size() == 1 &&
           std::abs(r.rows[0].lhs_log - std::log(lhs)) < 1e-12 &&
           std::abs(r.rows[0].rhs_log - std::log(rhs)) < 1e-12;
  }
  const std::vector<std::uint64_t> ten{10, 10};
  const auto r10 = janson_hypothesis(g, h, ten, 1.0, 0.5, e, true);
  hand = hand && !r10.passed && std::abs(std::exp(r10.rows[0].rhs_log) - 480.0) < 1e-9;

  // Raising p1, p2, or q_j for j in J never breaks a passing subset J.
  int configs = 0, violations = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(707, s));
    const int m = 3 + static_cast<int>(rng.below(5));
    const Graph gg = gnp(m, 0.5, rng.next()), hh = gnp(m, 0.5, rng.next());
    std::vector<std::uint64_t> q;
    for (int i = 0; i < m; ++i) q.push_back(1 + rng.below(80));
    const double p1 = 0.1 + 0.8 * rng.uniform(), p2 = 0.1 + 0.8 * rng.uniform();
    const double n = 5000;
    const int j = static_cast<int>(rng.below(m));
    auto bigger = q;
    bigger[j] += 1 + rng.below(50);
    const auto base = janson_hypothesis(gg, hh, q, p1, p2, n, true);
    const auto up1 = janson_hypothesis(gg, hh, q, std::min(1.0, p1 * 1.3), p2, n, true);
    const auto up2 = janson_hypothesis(gg, hh, q, p1, std::min(1.0, p2 * 1.3), n, true);
    const auto upq = janson_hypothesis(gg, hh, bigger, p1, p2, n, true);
    for (std::size_t r = 0; r < base.rows.size(); ++r) {
      if (!base.rows[r].passed) continue;
      violations += !up1.rows[r].passed;
      violations += !up2.rows[r].passed;
      if (base.rows[r].mask >> j & 1u) violations += !upq.rows[r].passed;
    }
    ++configs;
  }
  return {hand && violations == 0,
          std::string("hand arithmetic ") + (hand ? "matches" : "differs") + ", " +
              std::to_string(configs) + " configurations, " + std::to_string(violations) +
              " monotonicity violations"};
}

Outcome ac8_embedding() {
  int instances = 0, disagreements = 0, found = 0;
  for (std::uint64_t s = 0; instances < 100; ++s) {
    Rng rng(derive_seed(808, s));
    const int m = 2 + static_cast<int>(rng.below(4));
    std::vector<int> sizes;
    double product = 1;
    int used = 0;
    for (int i = 0; i < m; ++i) {
      sizes.push_back(1 + static_cast<int>(rng.below(12)));
      product *= sizes.back();
      used += sizes.back();
    }
    if (product > 1e5) continue;
    const int n = used + static_cast<int>(rng.below(6));
    const Graph g = gnp(m, 0.5, rng.next()), h = gnp(m, 0.5, rng.next());
    const Graph x = gnp(n, 0.5, rng.next()), y = gnp(n, 0.5, rng.next());
    // Disjoint target sets cut from one shuffled vertex list.
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[v] = v;
    rng.shuffle(std::span<int>(all));
    SetList sets;
    auto next = all.begin();
    for (int size : sizes) {
      std::vector<int> set(next, next + size);
      next += size;
      std::sort(set.begin(), set.end());
      sets.push_back(std::move(set));
    }
    const Permutation sigma = random_perm(n, rng);
    const auto w = find_embedding({g, h, x, y}, sets, sigma);
    const bool brute = oracle::embedding_exists(g, h, x, y, sets, oracle::images(sigma));
    if (w.has_value() != brute) ++disagreements;
    if (w && !is_embedding_witness({g, h, x, y}, sets, sigma, *w)) ++disagreements;
    found += w.has_value();
    ++instances;
  }
  return {disagreements == 0, std::to_string(instances) + " instances (" +
                                  std::to_string(found) + " embeddable), " +
                                  std::to_string(disagreements) + " disagreements"};
}

Outcome ac9_sweep() {
  const auto start = Clock::now();
  SweepConfig cfg;
  cfg.n = 7;
  cfg.trials = 200;
  cfg.seed = 909;
  cfg.mode = ExactDecision{};
  cfg.grid.push_back({1.0, 1.0});
  cfg.grid.push_back({1.0, 0.0});
  for (int i = 1; i <= 10; ++i) cfg.grid.push_back({0.1 * i, 0.1 * i});
  const SweepResult r = run_sweep(cfg);
  const double t = seconds_since(start);
  bool ok = r.cells[0].frac_connected() == 1.0 && r.cells[1].frac_connected() == 0.0;
  std::ostringstream detail;
  detail << "corners " << r.cells[0].frac_connected() << "/" << r.cells[1].frac_connected()
         << ", diagonal";
  for (std::size_t i = 2; i < r.cells.size(); ++i) {
    detail << ' ' << r.cells[i].frac_connected();
    if (i == 2) continue;
    const auto& a = r.cells[i - 1];
    const auto& b = r.cells[i];
    const double se = std::hypot(a.stderr_connected(), b.stderr_connected());
    if (b.frac_connected() < a.frac_connected() - 3 * se) ok = false;
  }
  detail << ", " << t << " s";
  return {ok && t < 600, detail.str()};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_fs(std::vector<std::string> args) {
  args.insert(args.begin(), "fs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = fs_cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome ac10_determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "fs_acceptance";
  std::filesystem::create_directories(dir);
  auto file = [&](const std::string& name) { return (dir / name).string(); };
  // The output header echoes the command line, so both runs use one path.
  auto twice = [&](std::vector<std::string> args, const std::string& name) {
    args.insert(args.end(), {"--out", file(name)});
    if (run_fs(args).code != 0) return false;
    const std::string first = slurp(file(name));
    if (run_fs(args).code != 0) return false;
    return !first.empty() && first == slurp(file(name));
  };
  const bool gen = twice({"gen", "--kind", "gnp", "--n", "40", "--p", "0.3", "--seed", "11"},
                         "gen");
  const bool sweep = twice({"sweep", "--n", "6", "--p1-grid", "0.2:1:4", "--p2-grid", "0.2:1:4",
                            "--trials", "20", "--seed", "12"},
                           "sweep");
  run_fs({"gen", "--kind", "gnp", "--n", "30", "--p", "0.08", "--seed", "13", "--out",
          file("x.el")});
  run_fs({"gen", "--kind", "gnp", "--n", "30", "--p", "0.1", "--seed", "14", "--out",
          file("y.el")});
  const bool pack = twice({"pack", "--x", file("x.el"), "--y", file("y.el"), "--mode", "local",
                           "--seed", "15"},
                          "pack");
  std::filesystem::remove_all(dir);
  return {gen && sweep && pack, std::string("gen ") + (gen ? "same" : "differs") + ", sweep " +
                                    (sweep ? "same" : "differs") + ", pack local " +
                                    (pack ? "same" : "differs")};
}

Outcome ac11_performance() {
  std::ostringstream detail;
  bool ok = true;
  for (auto [n, limit] : {std::pair{9, 30.0}, {10, 300.0}}) {
    const Graph x = cycle_graph(n);
    const Graph y = gnp(n, 0.5, derive_seed(1111, n));
    const auto start = Clock::now();
    const ComponentSummary s = decompose(FsInstance(x, y), n);
    const double t = seconds_since(start);
    ok = ok && t < limit && s.total_vertices() == factorial(n);
    detail << "n=" << n << " " << t << " s (" << s.component_count << " components, limit "
           << limit << " s)" << (n == 9 ? ", " : "");
  }
  return {ok, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1", ac1_complete_x}, {"AC2", ac2_inversion},    {"AC3", ac3_monotone},
      {"AC4", ac4_packing},    {"AC5", ac5_exchange},     {"AC6", ac6_gadgets},
      {"AC7", ac7_janson},     {"AC8", ac8_embedding},    {"AC9", ac9_sweep},
      {"AC10", ac10_determinism}, {"AC11", ac11_performance}};
  int failed = 0;
  for (const auto& [id, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << id << ' ' << (o.ok ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
