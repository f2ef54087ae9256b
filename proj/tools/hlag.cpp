#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlag/compression.hpp"
#include "hlag/error.hpp"
#include "hlag/families.hpp"
#include "hlag/freeness.hpp"
#include "hlag/io.hpp"
#include "hlag/lagrangian.hpp"
#include "hlag/partition.hpp"
#include "hlag/symmetrize.hpp"
#include "hlag/verify.hpp"

namespace {

using hlag::format_real;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Global {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  int jobs = 1;
  std::string format = "text";
  bool as_json() const { return format == "json"; }
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

hlag::Hypergraph load_graph(const std::string& path) {
  try {
    return hlag::parse_graph(slurp(path));
  } catch (const hlag::ParseError& e) {
    throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(v[k]);
  }
  return out;
}

std::string join_reals(const std::vector<double>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += format_real(v[k]);
  }
  return out;
}

json edges_json(const std::vector<hlag::Edge>& edges) {
  json arr = json::array();
  for (const auto& e : edges) arr.push_back(e);
  return arr;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

hlag::SolverConfig solver_config(const Global& g) {
  hlag::SolverConfig cfg;
  cfg.seed = g.seed;
  cfg.jobs = g.jobs;
  if (g.tol) cfg.tolerance = *g.tol;
  return cfg;
}

// family ----------------------------------------------------------------

struct FamilyOpts {
  hlag::FamilySpec spec;
  int p = 0;
  int a = 0;
};

int run_family(const Global& g, const FamilyOpts& o) {
  hlag::FamilySpec spec = o.spec;
  if (o.p > 0) spec.p = o.p;
  if (o.a > 0) spec.a = o.a;
  hlag::Hypergraph h = hlag::build_family(spec);
  if (g.as_json())
    std::cout << hlag::to_hg_json(h) << '\n';
  else
    hlag::write_hg(std::cout, h);
  return kOk;
}

// eval ------------------------------------------------------------------

struct EvalOpts {
  std::string graph;
  std::string weights;
};

int run_eval(const Global& g, const EvalOpts& o) {
  hlag::Hypergraph h = load_graph(o.graph);
  std::vector<double> x;
  try {
    x = hlag::parse_weights(slurp(o.weights));
  } catch (const hlag::ParseError& e) {
    throw InputError(o.weights + ": " + e.what());
  }
  hlag::validate_weighting(x, h.vertex_count());
  const double v = hlag::eval(h, x);
  const auto gr = hlag::grad(h, x);
  const auto kkt = hlag::kkt_residual(h, x);
  if (g.as_json()) {
    json j;
    j["value"] = v;
    j["gradient"] = gr;
    j["kkt_residual"] = kkt.residual;
    print_json(j);
  } else {
    std::cout << "value " << format_real(v) << '\n';
    std::cout << "gradient " << join_reals(gr) << '\n';
    std::cout << "kkt_residual " << format_real(kkt.residual) << '\n';
  }
  return kOk;
}

// maximize --------------------------------------------------------------

struct MaximizeOpts {
  std::string graph;
  std::string method = "auto";
  int restarts = 64;
};

int run_maximize(const Global& g, const MaximizeOpts& o) {
  hlag::Hypergraph h = load_graph(o.graph);
  hlag::SolverConfig cfg = solver_config(g);
  cfg.method = hlag::parse_method(o.method);
  cfg.restarts = o.restarts;
  cfg.validate();
  hlag::LagrangianResult r = hlag::maximize(h, cfg);
  if (g.as_json()) {
    json j;
    j["value"] = r.value;
    j["weighting"] = r.weighting;
    j["support"] = r.support;
    j["kkt_residual"] = r.kkt_residual;
    j["method"] = hlag::to_string(r.method);
    j["restarts"] = r.restarts_used;
    j["seed"] = r.seed;
    print_json(j);
  } else {
    std::cout << "value " << format_real(r.value) << '\n';
    std::cout << "weighting " << join_reals(r.weighting) << '\n';
    std::cout << "support " << join(r.support) << '\n';
    std::cout << "kkt_residual " << format_real(r.kkt_residual) << '\n';
    std::cout << "method " << hlag::to_string(r.method) << '\n';
    std::cout << "seed " << r.seed << '\n';
  }
  return kOk;
}

// compress --------------------------------------------------------------

struct CompressOpts {
  std::string graph;
  int t = 2;
};

std::string step_params(const hlag::CompressionStep& s) {
  using K = hlag::CompressionStep::Kind;
  switch (s.kind) {
    case K::Densify: return "removed=" + (s.removed.empty() ? std::string("-") : join(s.removed));
    case K::Relabel: return "perm=" + join(s.perm);
    default:
      return "i=" + std::to_string(s.i) + " j=" + std::to_string(s.j) + " moved=" + std::to_string(s.moved);
  }
}

int run_compress(const Global& g, const CompressOpts& o) {
  hlag::Hypergraph h = load_graph(o.graph);
  hlag::DenseCompressed dc = hlag::dense_and_compress(h, o.t, solver_config(g));
  const auto& tr = dc.trace;
  if (g.as_json()) {
    json steps = json::array();
    for (const auto& s : tr.steps) {
      json j;
      j["kind"] = hlag::to_string(s.kind);
      if (!s.removed.empty()) j["removed"] = s.removed;
      if (!s.perm.empty()) j["perm"] = s.perm;
      if (s.kind == hlag::CompressionStep::Kind::Compress) {
        j["i"] = s.i;
        j["j"] = s.j;
        j["moved"] = s.moved;
      }
      j["potential_before"] = s.potential_before;
      j["potential_after"] = s.potential_after;
      j["lambda_after"] = s.lambda_after;
      steps.push_back(std::move(j));
    }
    json j;
    j["initial_lambda"] = tr.initial_lambda;
    j["final_lambda"] = tr.final_lambda;
    j["steps"] = std::move(steps);
    j["graph"] = json::parse(hlag::to_hg_json(dc.graph));
    print_json(j);
  } else {
    hlag::write_hg(std::cout, dc.graph);
    std::cout << "# initial lambda " << format_real(tr.initial_lambda) << '\n';
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
      const auto& s = tr.steps[k];
      std::cout << "# step " << k + 1 << ' ' << hlag::to_string(s.kind) << ' ' << step_params(s) << " lambda "
                << format_real(s.lambda_after) << '\n';
    }
    std::cout << "# final lambda " << format_real(tr.final_lambda) << '\n';
  }
  return kOk;
}

// free ------------------------------------------------------------------

struct FreeOpts {
  std::string graph;
  std::string pattern = "m";
  int t = 2;
  int p = 8;
};

int run_free(const Global& g, const FreeOpts& o) {
  hlag::Hypergraph h = load_graph(o.graph);
  hlag::FreenessReport rep;
  if (o.pattern == "m") {
    rep = hlag::is_matching_free(h, o.t);
  } else {
    hlag::Hypergraph f = hlag::matching(o.t, h.uniformity());
    rep = o.pattern == "core" ? hlag::is_core_free(h, o.p, f) : hlag::hom_search(h, f, o.p);
  }
  if (g.as_json()) {
    json j;
    j["pattern"] = rep.pattern;
    j["free"] = rep.free;
    j["witness_edges"] = edges_json(rep.witness_edges);
    j["core"] = rep.core;
    j["hom_map"] = rep.hom_map;
    print_json(j);
  } else {
    std::cout << "pattern " << rep.pattern << '\n';
    std::cout << "free " << (rep.free ? "yes" : "no") << '\n';
    if (!rep.core.empty()) std::cout << "core " << join(rep.core) << '\n';
    for (const auto& e : rep.witness_edges) std::cout << "edge " << join(e) << '\n';
    if (!rep.hom_map.empty()) std::cout << "map " << join(rep.hom_map) << '\n';
  }
  return rep.free ? kOk : kViolation;
}

// search ----------------------------------------------------------------

struct SearchOpts {
  int n = 7;
  int n_min = 0;
  int r = 4;
  int t = 2;
  std::string out_dir;
  bool unsafe_size = false;
};

std::string write_witness(const std::string& dir, const std::string& name, const hlag::Hypergraph& h) {
  std::filesystem::create_directories(dir);
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  hlag::write_hg(out, h);
  return path;
}

int run_search(const Global& g, const SearchOpts& o) {
  hlag::EnumerationConfig ec;
  ec.jobs = g.jobs;
  ec.unsafe_size = o.unsafe_size;
  hlag::SolverConfig sc = solver_config(g);
  sc.jobs = 1;
  const int lo = o.n_min > 0 ? o.n_min : o.n;
  bool ok = true;
  json arr = json::array();
  std::vector<std::vector<std::string>> table;
  table.push_back({"n", "graphs", "max_lambda", "star", "non_star_max", "dichotomy", "witness"});
  for (int n = lo; n <= o.n; ++n) {
    hlag::ExtremalSearch es = hlag::extremal_lambda_search(n, o.r, o.t, sc, ec);
    std::string path = "-";
    if (!o.out_dir.empty())
      path = write_witness(o.out_dir, "witness_n" + std::to_string(n) + ".hg", es.witness);
    if (!es.dichotomy_holds && es.non_star_witness && !o.out_dir.empty())
      write_witness(o.out_dir, "non_star_n" + std::to_string(n) + ".hg", *es.non_star_witness);
    ok = ok && es.dichotomy_holds;
    if (g.as_json()) {
      json j;
      j["n"] = n;
      j["graphs"] = es.graphs;
      j["max_lambda"] = es.max_lambda;
      j["witness_is_star"] = es.witness_is_star;
      j["max_star_lambda"] = es.max_star_lambda;
      j["max_non_star_lambda"] = es.max_non_star_lambda;
      j["dichotomy_holds"] = es.dichotomy_holds;
      j["witness"] = json::parse(hlag::to_hg_json(es.witness));
      j["witness_path"] = path;
      arr.push_back(std::move(j));
    } else {
      table.push_back({std::to_string(n), std::to_string(es.graphs), format_real(es.max_lambda),
                       es.witness_is_star ? "yes" : "no",
                       es.non_star_witness ? format_real(es.max_non_star_lambda) : "-",
                       es.dichotomy_holds ? "holds" : "FAILS", path});
    }
  }
  if (g.as_json()) {
    print_json(arr);
  } else {
    std::vector<std::size_t> w(table.front().size(), 0);
    for (const auto& row : table)
      for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
    for (const auto& row : table) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::cout << row[c];
        if (c + 1 < row.size()) std::cout << std::string(w[c] - row[c].size() + 2, ' ');
      }
      std::cout << '\n';
    }
  }
  return ok ? kOk : kViolation;
}

// symmetrize ------------------------------------------------------------

struct SymOpts {
  std::string graph;
  hlag::SymConfig cfg;
  std::string trace;
};

int run_symmetrize(const Global& g, const SymOpts& o) {
  hlag::Hypergraph h = load_graph(o.graph);
  o.cfg.validate();
  hlag::SymTrace tr = hlag::symmetrize(h, o.cfg);
  hlag::AuditReport rep = hlag::audit(tr);
  const auto& fp = tr.result();
  if (!o.trace.empty()) {
    std::ofstream out(o.trace);
    if (!out) throw InputError("cannot write " + o.trace);
    out << hlag::trace_to_json(tr) << '\n';
  }
  hlag::InducedSubgraph star = hlag::induced(fp.graph, fp.vertices());
  if (g.as_json()) {
    json j;
    j["rounds"] = tr.rounds();
    j["vertices"] = fp.vertices();
    j["representatives"] = fp.representatives();
    j["edge_count"] = fp.graph.edge_count();
    j["large_fixed_point"] = rep.large_fixed_point;
    j["star_on_representatives"] = rep.star_on_representatives;
    json viol = json::array();
    for (const auto& v : rep.violations) viol.push_back({{"step", v.step}, {"property", v.property}, {"detail", v.detail}});
    j["violations"] = std::move(viol);
    j["steps"] = json::parse(hlag::trace_to_json(tr));
    j["result"] = json::parse(hlag::to_hg_json(star.graph));
    print_json(j);
  } else {
    for (const auto& s : tr.steps)
      std::cout << "step " << s.index << ' ' << s.kind << (s.detail.empty() ? "" : " ") << s.detail << " vertices "
                << s.vertex_count << " edges " << s.edge_count << '\n';
    std::cout << "rounds " << tr.rounds() << '\n';
    std::cout << "vertices " << join(fp.vertices()) << '\n';
    std::cout << "representatives " << join(fp.representatives()) << '\n';
    std::cout << "edges " << fp.graph.edge_count() << '\n';
    std::cout << "large_fixed_point " << (rep.large_fixed_point ? "yes" : "no") << '\n';
    std::cout << "star_on_representatives " << (rep.star_on_representatives ? "yes" : "no") << '\n';
    for (const auto& v : rep.violations)
      std::cout << "violation step " << v.step << ' ' << v.property << ": " << v.detail << '\n';
    std::cout << "audit " << (rep.clean() ? "clean" : "FAILED") << '\n';
  }
  return rep.clean() ? kOk : kViolation;
}

// partition -------------------------------------------------------------

struct PartitionOpts {
  std::string graph;
  bool exhaustive = false;
  bool local = false;
  int restarts = 32;
};

int run_partition(const Global& g, const PartitionOpts& o) {
  hlag::Hypergraph h = load_graph(o.graph);
  hlag::PartitionConfig cfg;
  cfg.seed = g.seed;
  cfg.jobs = g.jobs;
  cfg.restarts = o.restarts;
  if (o.exhaustive) cfg.mode = hlag::PartitionConfig::Mode::Exhaustive;
  if (o.local) cfg.mode = hlag::PartitionConfig::Mode::LocalSearch;
  hlag::PartitionScore s = hlag::min_sigma_partition(h, cfg);
  if (g.as_json()) {
    json j;
    j["w1"] = s.w1;
    j["w2"] = s.w2;
    j["good"] = s.good;
    j["bad"] = s.bad;
    j["very_bad"] = s.very_bad;
    j["worst"] = s.worst;
    j["sigma"] = s.sigma;
    print_json(j);
  } else {
    std::cout << "w1 " << join(s.w1) << '\n';
    std::cout << "w2 " << join(s.w2) << '\n';
    std::cout << "good " << s.good << " bad " << s.bad << " very_bad " << s.very_bad << " worst " << s.worst << '\n';
    std::cout << "sigma " << s.sigma << '\n';
  }
  return kOk;
}

// verify ----------------------------------------------------------------

struct VerifyOpts {
  std::string suite = "cases";
  int n_lo = 8;
  int n_hi = 14;
  int n_max = 8;
  std::string witness_dir;
};

int run_verify(const Global& g, const VerifyOpts& o) {
  std::vector<hlag::VerificationRow> rows;
  hlag::SolverConfig sc = solver_config(g);
  if (o.suite == "cases" || o.suite == "all") {
    hlag::CaseSuiteConfig cc;
    cc.n_lo = o.n_lo;
    cc.n_hi = o.n_hi;
    cc.solver = sc;
    auto r = hlag::verify_cases(cc);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  if (o.suite == "theorem" || o.suite == "all") {
    hlag::TheoremConfig tc;
    tc.n_max = o.n_max;
    tc.solver = sc;
    tc.solver.jobs = 1;
    tc.enumeration.jobs = g.jobs;
    hlag::TheoremSummary ts = hlag::verify_theorem(tc);
    if (!o.witness_dir.empty())
      for (const auto& es : ts.searches)
        if (es.non_star_witness && !es.dichotomy_holds)
          write_witness(o.witness_dir, "non_star_n" + std::to_string(es.n) + ".hg", *es.non_star_witness);
    rows.insert(rows.end(), ts.rows.begin(), ts.rows.end());
  }
  std::cout << (g.as_json() ? hlag::rows_to_json(rows) + "\n" : hlag::rows_to_text(rows));
  return hlag::all_pass(rows) ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph Lagrangians, compression, symmetrization and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "Seed for randomized steps");
  app.add_option("--tol", g.tol, "Solver ascent tolerance");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  FamilyOpts fam;
  auto* family = app.add_subcommand("family", "Print a named hypergraph family");
  family->add_option("--name", fam.spec.name, "complete|matching|star|split|extension|case1..case15|k53minus2")
      ->required();
  family->add_option("--n", fam.spec.n, "Vertex count");
  family->add_option("--r", fam.spec.r, "Uniformity");
  family->add_option("--t", fam.spec.t, "Matching size");
  family->add_option("--p", fam.p, "Core size (extension)");
  family->add_option("--a", fam.a, "Size of A (split)");

  EvalOpts ev;
  auto* eval = app.add_subcommand("eval", "Evaluate λ(G, x) at a weighting");
  eval->add_option("--graph", ev.graph, "Graph file, - for stdin")->required();
  eval->add_option("--weights", ev.weights, "Weights file")->required();

  MaximizeOpts mx;
  auto* maximize = app.add_subcommand("maximize", "Compute the Lagrangian");
  maximize->add_option("--graph", mx.graph, "Graph file, - for stdin")->required();
  maximize->add_option("--method", mx.method, "auto|multistart-ascent|support-enum");
  maximize->add_option("--restarts", mx.restarts, "Random starts");

  CompressOpts cp;
  auto* compress = app.add_subcommand("compress", "Densify and left-compress an M_t-free graph");
  compress->add_option("--graph", cp.graph, "Graph file, - for stdin")->required();
  compress->add_option("--t", cp.t, "Matching size");

  FreeOpts fr;
  auto* free_cmd = app.add_subcommand("free", "Check for a matching, a covered core or a homomorphism");
  free_cmd->add_option("--graph", fr.graph, "Graph file, - for stdin")->required();
  free_cmd->add_option("--pattern", fr.pattern, "m|core|hom")->check(CLI::IsMember({"m", "core", "hom"}));
  free_cmd->add_option("--t", fr.t, "Matching size");
  free_cmd->add_option("--p", fr.p, "Core size");

  SearchOpts se;
  auto* search = app.add_subcommand("search", "Exhaustive left-compressed M_t-free search");
  search->add_option("--n", se.n, "Largest vertex count")->required();
  search->add_option("--n-min", se.n_min, "Smallest vertex count (default --n)");
  search->add_option("--r", se.r, "Uniformity");
  search->add_option("--t", se.t, "Matching size");
  search->add_option("--out-dir", se.out_dir, "Directory for witness files");
  search->add_flag("--unsafe-size", se.unsafe_size, "Ignore the size guard");

  SymOpts sy;
  auto* symmetrize = app.add_subcommand("symmetrize", "Clean/merge symmetrization with audit");
  symmetrize->add_option("--graph", sy.graph, "Graph file, - for stdin")->required();
  symmetrize->add_option("--alpha", sy.cfg.alpha, "Cleaning slack, 0 < alpha < 9/128");
  symmetrize->add_option("--gamma", sy.cfg.gamma);
  symmetrize->add_option("--beta", sy.cfg.beta);
  symmetrize->add_option("--epsilon", sy.cfg.epsilon);
  symmetrize->add_option("--delta", sy.cfg.delta);
  symmetrize->add_flag("--fixed-n", sy.cfg.fixed_n, "Cleaning threshold at the input size");
  symmetrize->add_option("--trace", sy.trace, "Write the step trace as JSON");

  PartitionOpts pa;
  auto* partition = app.add_subcommand("partition", "Minimum Σ' bipartition");
  partition->add_option("--graph", pa.graph, "Graph file, - for stdin")->required();
  auto* exh = partition->add_flag("--exhaustive", pa.exhaustive, "Exhaustive search (n <= 20)");
  partition->add_flag("--local", pa.local, "Local search regardless of n")->excludes(exh);
  partition->add_option("--restarts", pa.restarts, "Local search restarts");

  VerifyOpts vf;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", vf.suite, "cases|theorem|all")->check(CLI::IsMember({"cases", "theorem", "all"}));
  verify->add_option("--n-lo", vf.n_lo, "Smallest n for the case families");
  verify->add_option("--n-hi", vf.n_hi, "Largest n for the case families");
  verify->add_option("--n-max", vf.n_max, "Largest n for the exhaustive search");
  verify->add_option("--witness-dir", vf.witness_dir, "Directory for dichotomy counterexamples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*family) return run_family(g, fam);
    if (*eval) return run_eval(g, ev);
    if (*maximize) return run_maximize(g, mx);
    if (*compress) return run_compress(g, cp);
    if (*free_cmd) return run_free(g, fr);
    if (*search) return run_search(g, se);
    if (*symmetrize) return run_symmetrize(g, sy);
    if (*partition) return run_partition(g, pa);
    if (*verify) return run_verify(g, vf);
  } catch (const hlag::PatternFound& e) {
    std::cerr << "error: " << e.what() << '\n';
    const auto& rep = e.report();
    for (const auto& edge : rep.witness_edges) std::cerr << "witness edge " << join(edge) << '\n';
    if (!rep.core.empty()) std::cerr << "witness core " << join(rep.core) << '\n';
    return kViolation;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const hlag::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const hlag::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const hlag::UnsupportedSize& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
