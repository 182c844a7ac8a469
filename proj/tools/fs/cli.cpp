#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fsgraph/embed.hpp"
#include "fsgraph/errors.hpp"
#include "fsgraph/exchange.hpp"
#include "fsgraph/fs_graph.hpp"
#include "fsgraph/gadgets.hpp"
#include "fsgraph/graph.hpp"
#include "fsgraph/packing.hpp"
#include "fsgraph/permutation.hpp"
#include "fsgraph/threshold_lab.hpp"

#ifndef FS_VERSION
#define FS_VERSION "0.0.0"
#endif

namespace fs_cli {
namespace {

// Bad flags, unreadable files and malformed values.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string quote_arg(const std::string& arg) {
  if (!arg.empty() && arg.find_first_of(" \t\"'") == std::string::npos) return arg;
  std::string q = "'";
  for (char c : arg) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

std::string command_line(int argc, const char* const* argv) {
  std::string line = "fs";
  for (int i = 1; i < argc; ++i) line += " " + quote_arg(argv[i]);
  return line;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string join_perms(const std::vector<fsg::Permutation>& path) {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) s += ';';
    s += fsg::to_string(path[i]);
  }
  return s;
}

std::string join_ints(const std::vector<int>& v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_sets(const fsg::SetList& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) s += '|';
    s += join_ints(sets[i]);
  }
  return s;
}

// Writes to --out when given, otherwise to the caller's stream. The first
// line is always the provenance header.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback, const std::string& cmdline,
       std::optional<std::uint64_t> seed)
      : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot write " + path);
      os_ = &file_;
    }
    *os_ << "# " << cmdline << " | seed=";
    if (seed) {
      *os_ << *seed;
    } else {
      *os_ << "none";
    }
    *os_ << '\n';
  }

  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

fsg::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return fsg::read_edge_list(in);
}

fsg::SetList load_sets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  fsg::SetList sets;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<int> set;
    long long v = 0;
    while (ls >> v) {
      if (v < 0 || v > std::numeric_limits<int>::max()) {
        throw UsageError("set entry out of range in " + path);
      }
      set.push_back(static_cast<int>(v));
    }
    if (!ls.eof()) throw UsageError("malformed set line in " + path);
    sets.push_back(std::move(set));
  }
  return sets;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    std::istringstream ts(token);
    T value{};
    if (!(ts >> value) || !(ts >> std::ws).eof()) {
      throw UsageError(std::string("malformed ") + what + ": '" + token + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

// "a:b:steps" gives steps evenly spaced values from a to b; "a" gives {a}.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ':')) parts.push_back(token);
  auto num = [&](const std::string& s) {
    std::istringstream ts(s);
    double v = 0;
    if (!(ts >> v) || !(ts >> std::ws).eof()) throw UsageError("malformed grid '" + text + "'");
    return v;
  };
  if (parts.size() == 1) return {num(parts[0])};
  if (parts.size() != 3) throw UsageError("grid must be a:b:steps, got '" + text + "'");
  const double a = num(parts[0]);
  const double b = num(parts[1]);
  const double steps = num(parts[2]);
  if (!(steps >= 1) || steps != std::floor(steps) || steps > 1e6) {
    throw UsageError("grid steps must be a positive integer");
  }
  const auto k = static_cast<int>(steps);
  std::vector<double> out;
  for (int i = 0; i < k; ++i) {
    out.push_back(k == 1 ? a : (i == k - 1 ? b : a + (b - a) * i / (k - 1)));
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("range must be lo:hi");
  try {
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("malformed range '" + text + "'");
  }
}

// Each subcommand returns its exit code once CLI11 has parsed its flags.
using Runner = std::function<int()>;

struct Env {
  std::string cmdline;
  std::ostream& out;
  std::ostream& err;
};

CLI::App* add_gen(CLI::App& app, Env& env, Runner& run) {
  auto* cmd = app.add_subcommand("gen", "Generate a graph in edge-list format");
  struct Opts {
    std::string kind, out;
    int n = 0, s = -1, t = -1, rows = -1, cols = -1;
    double p = 0.5;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--kind", o->kind,
                  "gnp|complete|star|path|cycle|bipartite|grid|empty")->required();
  cmd->add_option("--n", o->n, "Vertex count");
  cmd->add_option("--p", o->p, "Edge probability for gnp")->capture_default_str();
  cmd->add_option("--seed", o->seed, "Seed for gnp")->capture_default_str();
  cmd->add_option("--s", o->s, "First side of a complete bipartite graph");
  cmd->add_option("--t", o->t, "Second side of a complete bipartite graph");
  cmd->add_option("--rows", o->rows, "Grid rows");
  cmd->add_option("--cols", o->cols, "Grid columns");
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &env, &run] {
    run = [o, &env] {
      fsg::Graph g;
      std::optional<std::uint64_t> seed;
      if (o->kind == "gnp") {
        g = fsg::gnp(o->n, o->p, o->seed);
        seed = o->seed;
      } else {
        const auto kind = fsg::parse_graph_kind(o->kind);
        if (!kind) throw UsageError("unknown graph kind '" + o->kind + "'");
        int n = o->n;
        std::pair<int, int> shape{0, 0};
        if (*kind == fsg::GraphKind::kCompleteBipartite) {
          shape = {o->s, o->t};
          if (n == 0) n = o->s + o->t;
        } else if (*kind == fsg::GraphKind::kGrid) {
          shape = {o->rows, o->cols};
          if (n == 0) n = o->rows * o->cols;
        }
        g = fsg::named_graph(*kind, n, shape);
      }
      Sink sink(o->out, env.out, env.cmdline, seed);
      fsg::write_edge_list(*sink, g);
      return kExitOk;
    };
  });
  return cmd;
}

CLI::App* add_components(CLI::App& app, Env& env, Runner& run) {
  auto* cmd = app.add_subcommand("components", "Exact component summary of FS(X,Y)");
  struct Opts {
    std::string x, y, out;
    int cap = fsg::kDefaultDecomposeCap;
    bool fail_on_disconnected = false;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--x", o->x, "Edge list of X")->required();
  cmd->add_option("--y", o->y, "Edge list of Y")->required();
  cmd->add_option("--cap", o->cap, "Largest n decomposed")->capture_default_str();
  cmd->add_flag("--fail-on-disconnected", o->fail_on_disconnected,
                "Exit 1 when FS(X,Y) is disconnected");
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &env, &run] {
    run = [o, &env] {
      const fsg::FsInstance inst(load_graph(o->x), load_graph(o->y));
      const fsg::ComponentSummary s = fsg::decompose(inst, o->cap);
      std::string hist;
      for (const auto& [size, count] : s.size_histogram) {
        if (!hist.empty()) hist += ';';
        hist += std::to_string(size) + ":" + std::to_string(count);
      }
      Sink sink(o->out, env.out, env.cmdline, std::nullopt);
      *sink << "n,component_count,isolated_count,size_histogram\n"
            << inst.n() << ',' << s.component_count << ',' << s.isolated_count << ','
            << hist << '\n';
      return o->fail_on_disconnected && s.component_count > 1 ? kExitNegative : kExitOk;
    };
  });
  return cmd;
}

CLI::App* add_path(CLI::App& app, Env& env, Runner& run) {
  auto* cmd = app.add_subcommand("path", "Bidirectional search between two bijections");
  struct Opts {
    std::string x, y, from, to, out;
    std::uint64_t budget = fsg::kDefaultNodeBudget;
    bool fail_on_no_path = false;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--x", o->x, "Edge list of X")->required();
  cmd->add_option("--y", o->y, "Edge list of Y")->required();
  cmd->add_option("--from", o->from, "Start bijection, e.g. \"0 1 2 3\"")->required();
  cmd->add_option("--to", o->to, "Target bijection")->required();
  cmd->add_option("--budget", o->budget, "Node budget")->capture_default_str();
  cmd->add_flag("--fail-on-no-path", o->fail_on_no_path,
                "Exit 1 unless a path is found");
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &env, &run] {
    run = [o, &env] {
      const fsg::FsInstance inst(load_graph(o->x), load_graph(o->y));
      const auto r = fsg::find_path(inst, fsg::parse_permutation(o->from),
                                    fsg::parse_permutation(o->to), o->budget);
      Sink sink(o->out, env.out, env.cmdline, std::nullopt);
      const std::size_t length = r.path.empty() ? 0 : r.path.size() - 1;
      *sink << "status,explored,length,path\n"
            << fsg::to_string(r.status) << ',' << r.explored << ','
            << (r.status == fsg::PathStatus::kFound ? std::to_string(length) : "") << ','
            << join_perms(r.path) << '\n';
      return o->fail_on_no_path && r.status != fsg::PathStatus::kFound ? kExitNegative
                                                                         : kExitOk;
    };
  });
  return cmd;
}

CLI::App* add_exchange(CLI::App& app, Env& env, Runner& run) {
  auto* cmd = app.add_subcommand("exchange", "Are u and v exchangeable from sigma?");
  struct Opts {
    std::string x, y, sigma, mode = "exact", out;
    int u = 0, v = 0, cap = fsg::kDefaultDecomposeCap;
    std::uint64_t budget = fsg::kDefaultNodeBudget;
    bool fail_on_negative = false;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--x", o->x, "Edge list of X")->required();
  cmd->add_option("--y", o->y, "Edge list of Y")->required();
  cmd->add_option("--sigma", o->sigma, "Bijection V(X) -> V(Y)")->required();
  cmd->add_option("--u", o->u, "Vertex of Y")->required();
  cmd->add_option("--v", o->v, "Vertex of Y")->required();
  cmd->add_option("--mode", o->mode, "exact|bounded")
      ->check(CLI::IsMember({"exact", "bounded"}))
      ->capture_default_str();
  cmd->add_option("--cap", o->cap, "Largest n for exact mode")->capture_default_str();
  cmd->add_option("--budget", o->budget, "Node budget for bounded mode")
      ->capture_default_str();
  cmd->add_flag("--fail-on-negative", o->fail_on_negative,
                "Exit 1 unless exchangeable");
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &env, &run] {
    run = [o, &env] {
      const fsg::FsInstance inst(load_graph(o->x), load_graph(o->y));
      fsg::ExchangeMode mode = fsg::BoundedMode{o->budget};
      if (o->mode == "exact") mode = fsg::ExactMode{o->cap, true};
      const auto verdict = fsg::exchangeable(
          inst, fsg::ExchangeQuery{fsg::parse_permutation(o->sigma), o->u, o->v}, mode);
      Sink sink(o->out, env.out, env.cmdline, std::nullopt);
      *sink << "status,explored,witness_length,witness\n"
            << fsg::to_string(verdict.status) << ',' << verdict.explored << ','
            << (verdict.witness.empty() ? std::string()
                                        : std::to_string(verdict.witness.size() - 1))
            << ',' << join_perms(verdict.witness) << '\n';
      return o->fail_on_negative && verdict.status != fsg::ExchangeStatus::kExchangeable
                 ? kExitNegative
                 : kExitOk;
    };
  });
  return cmd;
}

void emit_spec(std::ostream& os, const fsg::GadgetSpec& spec) {
  std::string chord_text;
  for (const auto& e : spec.chords) {
    if (!chord_text.empty()) chord_text += ' ';
    chord_text += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  os << "field,value\n"
     << "m," << spec.m << '\n'
     << "ell," << spec.ell << '\n'
     << "w," << spec.w << '\n'
     << "x," << join_ints(spec.x) << '\n'
     << "y," << join_ints(spec.y) << '\n'
     << "z," << join_ints(spec.z) << '\n'
     << "cycle_order," << join_ints(spec.cycle_order) << '\n'
     << "chords," << chord_text << '\n';
}

CLI::App* add_gadget(CLI::App& app, Env& env, Runner& run) {
  auto* cmd = app.add_subcommand("gadget", "Build, validate and emit the gadget graphs");
  struct Opts {
    int m = 0;
    std::string emit = "report", find_min, out;
    std::uint64_t verify_budget = 0;
    bool layout_only = false;
    bool fail_on_invalid = false;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--m", o->m, "Gadget size");
  cmd->add_option("--emit", o->emit, "report|spec|g-star-star|g-star|h-star-star|h-star")
      ->check(CLI::IsMember({"report", "spec", "g-star-star", "g-star", "h-star-star",
                             "h-star"}))
      ->capture_default_str();
  cmd->add_option("--verify-budget", o->verify_budget,
                  "Also search FS(G*,H*) for the m+1,m+2 exchange with this node budget");
  cmd->add_option("--find-min", o->find_min, "Report the smallest feasible m in lo:hi");
  cmd->add_flag("--layout-only", o->layout_only,
                "Chord structure only, without the metric constraints");
  cmd->add_flag("--fail-on-invalid", o->fail_on_invalid,
                "Exit 1 when a validation check fails");
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &env, &run] {
    run = [o, &env] {
      if (!o->find_min.empty()) {
        const auto [lo, hi] = parse_range(o->find_min);
        const int m = fsg::smallest_feasible_gadget_m(lo, hi);
        Sink sink(o->out, env.out, env.cmdline, std::nullopt);
        *sink << "m,ell\n";
        if (m < 0) {
          *sink << "none,\n";
          return kExitNegative;
        }
        *sink << m << ',' << fsg::gadget_ell(m) << '\n';
        return kExitOk;
      }
      if (o->m <= 0) throw UsageError("gadget needs --m or --find-min");
      const fsg::GadgetBundle bundle =
          o->layout_only ? fsg::layout_only_gadgets(o->m) : fsg::build_gadgets(o->m);
      Sink sink(o->out, env.out, env.cmdline, std::nullopt);
      if (o->emit == "spec") {
        emit_spec(*sink, bundle.spec);
        return kExitOk;
      }
      if (o->emit != "report") {
        const fsg::Graph& g = o->emit == "g-star-star" ? bundle.g_star_star
                              : o->emit == "g-star"    ? bundle.g_star
                              : o->emit == "h-star-star" ? bundle.h_star_star
                                                         : bundle.h_star;
        fsg::write_edge_list(*sink, g);
        return kExitOk;
      }
      const fsg::GadgetReport report = fsg::validate_gadget(bundle);
      *sink << "check,passed,detail\n";
      for (const auto& c : report.checks) {
        *sink << c.id << ',' << (c.passed ? 1 : 0) << ',' << csv_field(c.detail) << '\n';
      }
      if (o->verify_budget > 0) {
        const auto r = fsg::verify_extra_pair(bundle, o->verify_budget);
        std::string detail = std::string(fsg::to_string(r.status)) +
                             " explored=" + std::to_string(r.explored);
        if (!r.path.empty()) detail += " length=" + std::to_string(r.path.size() - 1);
        *sink << "exchange_extra_pair,"
              << (r.status == fsg::ExtraPairStatus::kVerified ? 1 : 0) << ','
              << csv_field(detail) << '\n';
      }
      return o->fail_on_invalid && !report.all_passed() ? kExitNegative : kExitOk;
    };
  });
  return cmd;
}

CLI::App* add_embed(CLI::App& app, Env& env, Runner& run) {
  auto* cmd = app.add_subcommand(
      "embed", "Search for an embedding of (G,H) into (X,Y) with vertex i in V_i");
  struct Opts {
    std::string g, h, x, y, sets, sigma, q, out;
    std::uint64_t trials = 100, seed = 0;
    bool fail_on_negative = false;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--g", o->g, "Edge list of G on [m]")->required();
  cmd->add_option("--h", o->h, "Edge list of H on [m]")->required();
  cmd->add_option("--x", o->x, "Edge list of X")->required();
  cmd->add_option("--y", o->y, "Edge list of Y")->required();
  cmd->add_option("--sets", o->sets,
                  "File with one line per set V_i (vertices of Y, space separated)");
  cmd->add_option("--sigma", o->sigma, "Bijection V(X) -> V(Y) (default identity)");
  cmd->add_option("--q", o->q, "Comma-separated set sizes: sample random sets instead");
  cmd->add_option("--trials", o->trials, "Samples for --q")->capture_default_str();
  cmd->add_option("--seed", o->seed, "Seed for --q")->capture_default_str();
  cmd->add_flag("--fail-on-negative", o->fail_on_negative,
                "Exit 1 when no embedding exists or a counterexample is found");
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &env, &run] {
    run = [o, &env] {
      const fsg::Graph g = load_graph(o->g), h = load_graph(o->h);
      const fsg::Graph x = load_graph(o->x), y = load_graph(o->y);
      const fsg::EmbedPair pair{g, h, x, y};
      if (!o->q.empty()) {
        fsg::QVector qv;
        qv.q = parse_list<std::uint64_t>(o->q, "q list");
        const auto r = fsg::check_q_embeddable(pair, qv, o->trials, o->seed);
        Sink sink(o->out, env.out, env.cmdline, o->seed);
        *sink << "counterexample,trials_run,sigma,minimized_sets\n"
              << (r.counterexample ? 1 : 0) << ',' << r.trials_run << ','
              << (r.sigma ? fsg::to_string(*r.sigma) : "") << ','
              << join_sets(r.minimized_sets) << '\n';
        return o->fail_on_negative && r.counterexample ? kExitNegative : kExitOk;
      }
      if (o->sets.empty()) throw UsageError("embed needs --sets or --q");
      const fsg::SetList sets = load_sets(o->sets);
      const fsg::Permutation sigma = o->sigma.empty()
                                         ? fsg::Permutation::identity(x.size())
                                         : fsg::parse_permutation(o->sigma);
      const auto witness = fsg::find_embedding(pair, sets, sigma);
      Sink sink(o->out, env.out, env.cmdline, std::nullopt);
      *sink << "found,witness\n"
            << (witness ? 1 : 0) << ',' << (witness ? join_ints(*witness) : "") << '\n';
      return o->fail_on_negative && !witness ? kExitNegative : kExitOk;
    };
  });
  return cmd;
}

CLI::App* add_janson(CLI::App& app, Env& env, Runner& run) {
  auto* cmd = app.add_subcommand("janson", "Check the subset inequality for (G,H,q,p1,p2,n)");
  struct Opts {
    int m = 0;
    double n = 0, p1 = 0, p2 = 0;
    std::string g, h, q, out;
    bool gadget = false, all = false, fail_on_violation = false;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--m", o->m, "Gadget size (with --gadget)");
  cmd->add_option("--n", o->n, "Size of the large graphs")->required();
  cmd->add_option("--p1", o->p1, "Edge probability of X")->required();
  cmd->add_option("--p2", o->p2, "Edge probability of Y")->required();
  cmd->add_option("--g", o->g, "Edge list of G");
  cmd->add_option("--h", o->h, "Edge list of H");
  cmd->add_option("--q", o->q,
                  "Comma-separated q_1..q_m, or a single value used for every i");
  cmd->add_flag("--gadget", o->gadget,
                "Use the layout-only gadget pair (G**, H**) on [m]; q defaults to the "
                "threshold q-vector for n");
  cmd->add_flag("--all", o->all, "Print every qualifying subset, not only failures");
  cmd->add_flag("--fail-on-violation", o->fail_on_violation,
                "Exit 1 when some subset fails");
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &env, &run] {
    run = [o, &env] {
      fsg::Graph g, h;
      std::vector<std::uint64_t> q;
      if (o->gadget) {
        if (o->m <= 0) throw UsageError("--gadget needs --m");
        if (o->m > fsg::kMaxJansonVertices) {
          throw fsg::SizeError("janson subset scan is limited to m <= 25");
        }
        const auto bundle = fsg::layout_only_gadgets(o->m);
        g = bundle.g_star_star;
        h = bundle.h_star_star;
        if (o->q.empty()) {
          if (!(o->n >= 2 && o->n < 1.8e19)) {
            throw UsageError("default q-vector needs 2 <= n < 1.8e19");
          }
          q = fsg::threshold_qvector(static_cast<std::uint64_t>(o->n), bundle.spec)
                  .qvector.q;
        }
      } else {
        if (o->g.empty() || o->h.empty()) throw UsageError("janson needs --g and --h or --gadget");
        g = load_graph(o->g);
        h = load_graph(o->h);
        if (o->q.empty()) throw UsageError("janson needs --q without --gadget");
      }
      if (!o->q.empty()) {
        q = parse_list<std::uint64_t>(o->q, "q list");
        if (q.size() == 1) q.assign(static_cast<std::size_t>(g.size()), q[0]);
      }
      const auto report = fsg::janson_hypothesis(g, h, q, o->p1, o->p2, o->n, o->all);
      Sink sink(o->out, env.out, env.cmdline, std::nullopt);
      *sink << "mask,edges_g,edges_h,lhs_log,rhs_log\n";
      for (const auto& row : report.rows) {
        *sink << row.mask << ',' << row.edges_g << ',' << row.edges_h << ','
              << fmt(row.lhs_log) << ',' << fmt(row.rhs_log) << '\n';
      }
      env.err << "janson: " << (report.passed ? "passed" : "failed") << " subsets="
              << report.qualifying_subsets << " Q=" << fmt(report.q_total);
      if (!report.q_within_n) env.err << " (Q exceeds n)";
      if (report.embed_probability_bound) {
        env.err << " bound=" << fmt(*report.embed_probability_bound);
      }
      env.err << '\n';
      return o->fail_on_violation && !report.passed ? kExitNegative : kExitOk;
    };
  });
  return cmd;
}

CLI::App* add_pack(CLI::App& app, Env& env, Runner& run) {
  auto* cmd = app.add_subcommand("pack", "Find sigma mapping every X-edge to a Y-non-edge");
  struct Opts {
    std::string x, y, mode = "exact", out;
    std::uint64_t max_steps = 100'000, seed = 0, budget = fsg::kDefaultNodeBudget,
                  plateau = 200;
    bool fail_on_none = false;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--x", o->x, "Edge list of X")->required();
  cmd->add_option("--y", o->y, "Edge list of Y")->required();
  cmd->add_option("--mode", o->mode, "exact|local")
      ->check(CLI::IsMember({"exact", "local"}))
      ->capture_default_str();
  cmd->add_option("--max-steps", o->max_steps, "Local search moves")->capture_default_str();
  cmd->add_option("--plateau", o->plateau, "Sideways moves before a restart")
      ->capture_default_str();
  cmd->add_option("--seed", o->seed, "Local search seed")->capture_default_str();
  cmd->add_option("--budget", o->budget, "Exact search node budget")->capture_default_str();
  cmd->add_flag("--fail-on-none", o->fail_on_none, "Exit 1 unless a packing is found");
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &env, &run] {
    run = [o, &env] {
      const fsg::Graph x = load_graph(o->x), y = load_graph(o->y);
      fsg::PackingMode mode = fsg::ExactPacking{o->budget};
      std::optional<std::uint64_t> seed;
      if (o->mode == "local") {
        mode = fsg::LocalSearchPacking{o->max_steps, o->seed, o->plateau};
        seed = o->seed;
      }
      const auto r = fsg::find_packing(x, y, mode);
      Sink sink(o->out, env.out, env.cmdline, seed);
      if (r.sigma) {
        *sink << fsg::to_string(*r.sigma) << '\n';
      } else {
        *sink << fsg::to_string(r.status) << '\n';
      }
      return o->fail_on_none && !r.sigma ? kExitNegative : kExitOk;
    };
  });
  return cmd;
}

CLI::App* add_sweep(CLI::App& app, Env& env, Runner& run) {
  auto* cmd = app.add_subcommand("sweep", "Monte Carlo connectivity over a (p1,p2) grid");
  struct Opts {
    int n = 0, cap = fsg::kDefaultDecomposeCap, exchange_cap = 7;
    std::string p1_grid, p2_grid, mode = "exact", out;
    std::uint64_t trials = 100, seed = 0, packing_steps = 20'000,
                  packing_nodes = 200'000;
    bool diagonal = false;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--n", o->n, "Vertex count")->required();
  cmd->add_option("--p1-grid", o->p1_grid, "a:b:steps or a single value")->required();
  cmd->add_option("--p2-grid", o->p2_grid, "a:b:steps or a single value")->required();
  cmd->add_flag("--diagonal", o->diagonal,
                "Pair the grids entry by entry instead of taking all combinations");
  cmd->add_option("--trials", o->trials, "Trials per cell")->capture_default_str();
  cmd->add_option("--seed", o->seed, "Master seed")->capture_default_str();
  cmd->add_option("--mode", o->mode, "exact|cert")
      ->check(CLI::IsMember({"exact", "cert"}))
      ->capture_default_str();
  cmd->add_option("--cap", o->cap, "Largest n for exact mode")->capture_default_str();
  cmd->add_option("--exchange-cap", o->exchange_cap,
                  "Largest n for the exchange connectivity certificate")
      ->capture_default_str();
  cmd->add_option("--packing-steps", o->packing_steps, "Local packing moves per trial")
      ->capture_default_str();
  cmd->add_option("--packing-nodes", o->packing_nodes, "Exact packing nodes per trial")
      ->capture_default_str();
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &env, &run] {
    run = [o, &env] {
      fsg::SweepConfig cfg;
      cfg.n = o->n;
      cfg.trials = o->trials;
      cfg.seed = o->seed;
      if (o->mode == "exact") {
        cfg.mode = fsg::ExactDecision{o->cap};
      } else {
        cfg.mode = fsg::CertificateDecision{o->exchange_cap, o->packing_steps,
                                            o->packing_nodes};
      }
      const auto g1 = parse_grid(o->p1_grid);
      const auto g2 = parse_grid(o->p2_grid);
      if (o->diagonal) {
        if (g1.size() != g2.size()) throw UsageError("--diagonal needs grids of equal length");
        for (std::size_t i = 0; i < g1.size(); ++i) cfg.grid.emplace_back(g1[i], g2[i]);
      } else {
        for (double a : g1)
          for (double b : g2) cfg.grid.emplace_back(a, b);
      }
      const auto result = fsg::run_sweep(cfg);
      Sink sink(o->out, env.out, env.cmdline, o->seed);
      *sink << "n,p1,p2,trials,connected,disconnected,unknown,iso_cert,xy_disc,"
               "frac_connected,stderr\n";
      for (const auto& c : result.cells) {
        *sink << result.n << ',' << fmt(c.p1) << ',' << fmt(c.p2) << ',' << c.trials << ','
              << c.connected << ',' << c.disconnected << ',' << c.unknown << ','
              << c.iso_cert << ',' << c.xy_disc << ',' << fmt(c.frac_connected()) << ','
              << fmt(c.stderr_connected()) << '\n';
      }
      return kExitOk;
    };
  });
  return cmd;
}

CLI::App* add_markers(CLI::App& app, Env& env, Runner& run) {
  auto* cmd = app.add_subcommand("markers", "Threshold marker values for overlay plots");
  struct Opts {
    std::string n, out;
    double epsilon = 0.1;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--n", o->n, "Comma-separated values of n")->required();
  cmd->add_option("--epsilon", o->epsilon, "Margin below the disconnection curve")
      ->capture_default_str();
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &env, &run] {
    run = [o, &env] {
      const auto ns = parse_list<double>(o->n, "n list");
      std::vector<fsg::RegimeMarkers> rows;
      for (double n : ns) rows.push_back(fsg::regime_markers(n, o->epsilon));
      Sink sink(o->out, env.out, env.cmdline, std::nullopt);
      *sink << "n,epsilon,p0,connectivity_product,disconnection_product,floor_log,"
               "floor_continuous,m,ell,floor_discrete,vacuous\n";
      for (const auto& r : rows) {
        *sink << fmt(r.n) << ',' << fmt(r.epsilon) << ',' << fmt(r.p0) << ','
              << fmt(r.connectivity_product) << ',' << fmt(r.disconnection_product) << ','
              << fmt(r.floor_log) << ',' << fmt(r.floor_continuous) << ',' << r.m << ','
              << r.ell << ',' << (r.floor_discrete ? fmt(*r.floor_discrete) : "") << ','
              << (r.vacuous ? 1 : 0) << '\n';
      }
      return kExitOk;
    };
  });
  return cmd;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Friends-and-strangers graph toolkit", "fs"};
  // -h would collide with the --h (graph H) flags.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version",
                       std::string("fs ") + FS_VERSION + " (edge-list format 1)");
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  Env env{command_line(argc, argv), out, err};
  Runner run;
  add_gen(app, env, run);
  add_components(app, env, run);
  add_path(app, env, run);
  add_exchange(app, env, run);
  add_gadget(app, env, run);
  add_embed(app, env, run);
  add_janson(app, env, run);
  add_pack(app, env, run);
  add_sweep(app, env, run);
  add_markers(app, env, run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return run ? run() : kExitUsage;
  } catch (const UsageError& e) {
    err << "fs: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fsg::InfeasibleError& e) {
    err << "fs: " << e.what() << '\n';
    return kExitNegative;
  } catch (const fsg::HypothesisError& e) {
    err << "fs: " << e.what() << '\n';
    return kExitNegative;
  } catch (const std::invalid_argument& e) {
    err << "fs: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "fs: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fs: internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace fs_cli
