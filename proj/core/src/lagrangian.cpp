#include "hlag/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "hlag/error.hpp"
#include "parallel.hpp"

namespace hlag {

void validate_weighting(std::span<const double> x, int n, double tol) {
  if (static_cast<int>(x.size()) != n)
    throw InvalidArgument("weighting has " + std::to_string(x.size()) + " entries, graph has " + std::to_string(n) +
                          " vertices");
  double sum = 0;
  for (double v : x) {
    if (!(v >= 0)) throw InvalidArgument("weighting has a negative or non-finite entry");
    sum += v;
  }
  if (n > 0 && std::abs(sum - 1.0) > tol) throw InvalidArgument("weighting does not sum to 1");
}

Weighting uniform_weighting(int n) { return Weighting(static_cast<std::size_t>(n), n ? 1.0 / n : 0.0); }

namespace {

void require_length(const Hypergraph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw InvalidArgument("weighting has " + std::to_string(x.size()) + " entries, graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
}

double eval_raw(const Hypergraph& g, std::span<const double> x) {
  const int r = g.uniformity();
  auto flat = g.flat();
  double sum = 0;
  for (std::size_t k = 0; k < flat.size(); k += r) {
    double p = 1;
    for (int m = 0; m < r; ++m) p *= x[flat[k + m] - 1];
    sum += p;
  }
  return sum;
}

void grad_raw(const Hypergraph& g, std::span<const double> x, std::vector<double>& out) {
  const int r = g.uniformity();
  auto flat = g.flat();
  out.assign(x.size(), 0.0);
  for (std::size_t k = 0; k < flat.size(); k += r)
    for (int a = 0; a < r; ++a) {
      double p = 1;
      for (int m = 0; m < r; ++m)
        if (m != a) p *= x[flat[k + m] - 1];
      out[flat[k + a] - 1] += p;
    }
}

// Hessian restricted to the vertices in `pos` (vertex -> row, -1 if absent).
void hessian_raw(const Hypergraph& g, std::span<const double> x, const std::vector<int>& pos, Eigen::MatrixXd& h) {
  const int r = g.uniformity();
  auto flat = g.flat();
  h.setZero();
  for (std::size_t k = 0; k < flat.size(); k += r)
    for (int a = 0; a < r; ++a) {
      int ra = pos[flat[k + a]];
      if (ra < 0) continue;
      for (int b = 0; b < r; ++b) {
        if (b == a) continue;
        int rb = pos[flat[k + b]];
        if (rb < 0) continue;
        double p = 1;
        for (int m = 0; m < r; ++m)
          if (m != a && m != b) p *= x[flat[k + m] - 1];
        h(ra, rb) += p;
      }
    }
}

VertexSet support_of(std::span<const double> x) {
  VertexSet s;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] > 0) s.push_back(static_cast<Vertex>(k + 1));
  return s;
}

void normalize(Weighting& x) {
  double s = std::accumulate(x.begin(), x.end(), 0.0);
  for (auto& v : x) v /= s;
}

struct Candidate {
  double value = -1;
  Weighting x;
  VertexSet support;
  Method method = Method::Auto;
};

// Strictly better value, or a tie broken toward the lexicographically smaller support.
bool better(const Candidate& a, const Candidate& b) {
  constexpr double kTie = 1e-12;
  if (a.value > b.value + kTie) return true;
  if (a.value < b.value - kTie) return false;
  return a.support < b.support;
}

// Damped Newton on {L(x_i) = c (i ∈ S), Σ_S x_i = 1, x_j = 0 off S} starting
// from `start` (entries off S are ignored). Returns the clamped, renormalised
// solution, or nothing if it leaves the simplex.
std::optional<Weighting> newton_on_support(const Hypergraph& g, const VertexSet& s, const Weighting& start) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(s.size());
  if (k == 0) return std::nullopt;
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  for (int a = 0; a < k; ++a) pos[s[a]] = a;

  Weighting x(static_cast<std::size_t>(n), 0.0);
  for (Vertex v : s) x[v - 1] = start[v - 1];
  double c = 0;
  std::vector<double> gr;
  Eigen::MatrixXd h(k, k);
  Eigen::MatrixXd jac(k + 1, k + 1);
  Eigen::VectorXd f(k + 1);

  auto residual = [&](const Weighting& y, double cc, Eigen::VectorXd& out) {
    grad_raw(g, y, gr);
    double sum = 0;
    for (int a = 0; a < k; ++a) {
      out(a) = gr[s[a] - 1] - cc;
      sum += y[s[a] - 1];
    }
    out(k) = sum - 1.0;
  };
  {
    // Best constant for the starting point: the mean of L(x_i) over S.
    grad_raw(g, x, gr);
    for (Vertex v : s) c += gr[v - 1];
    c /= k;
  }
  residual(x, c, f);
  double merit = f.squaredNorm();
  Weighting trial(x.size());
  Eigen::VectorXd ft(k + 1);
  for (int it = 0; it < 60 && merit > 1e-30; ++it) {
    hessian_raw(g, x, pos, h);
    jac.setZero();
    jac.topLeftCorner(k, k) = h;
    jac.block(0, k, k, 1).setConstant(-1.0);
    jac.block(k, 0, 1, k).setConstant(1.0);
    Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-f);
    if (!step.allFinite()) break;
    double t = 1.0;
    bool moved = false;
    for (int halving = 0; halving <= 40; ++halving, t *= 0.5) {
      trial = x;
      for (int a = 0; a < k; ++a) trial[s[a] - 1] += t * step(a);
      double ct = c + t * step(k);
      residual(trial, ct, ft);
      double mt = ft.squaredNorm();
      if (mt < merit) {
        x.swap(trial);
        c = ct;
        f = ft;
        merit = mt;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  for (Vertex v : s) {
    if (x[v - 1] < -1e-10 || !std::isfinite(x[v - 1])) return std::nullopt;
    x[v - 1] = std::max(0.0, x[v - 1]);
  }
  double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (!(sum > 0)) return std::nullopt;
  normalize(x);
  return x;
}

Candidate make_candidate(const Hypergraph& g, Weighting x, Method m) {
  Candidate c;
  c.value = eval_raw(g, x);
  c.support = support_of(x);
  c.x = std::move(x);
  c.method = m;
  return c;
}

// Tries Newton polishing on supports read off `x` at a few thresholds and
// keeps the best KKT-consistent result that does not lose value.
Candidate polish(const Hypergraph& g, const Candidate& rough, double kkt_tol) {
  Candidate best = rough;
  double best_res = kkt_residual(g, rough.x).residual;
  const double top = *std::max_element(rough.x.begin(), rough.x.end());
  VertexSet last;
  for (double rel : {1e-3, 1e-5, 1e-7, 1e-9, 0.0}) {
    VertexSet s;
    for (std::size_t k = 0; k < rough.x.size(); ++k)
      if (rough.x[k] > rel * top) s.push_back(static_cast<Vertex>(k + 1));
    if (s == last) continue;
    last = s;
    auto y = newton_on_support(g, s, rough.x);
    if (!y) continue;
    Candidate c = make_candidate(g, std::move(*y), rough.method);
    if (c.value < rough.value - 1e-12) continue;
    double res = kkt_residual(g, c.x).residual;
    if (res < best_res || (res <= kkt_tol && c.value > best.value + 1e-15)) {
      best = std::move(c);
      best_res = res;
    }
    if (best_res <= kkt_tol * 1e-3) break;
  }
  return best;
}

// Exponentiated-gradient ascent with backtracking; never leaves the simplex
// and never decreases λ.
Weighting ascend(const Hypergraph& g, Weighting x, int max_iterations, double tol) {
  std::vector<double> gr;
  double v = eval_raw(g, x);
  grad_raw(g, x, gr);
  double gmax = *std::max_element(gr.begin(), gr.end());
  if (!(gmax > 0)) return x;
  double eta = 1.0 / gmax;
  Weighting y(x.size());
  int stall = 0;
  for (int it = 0; it < max_iterations; ++it) {
    gmax = *std::max_element(gr.begin(), gr.end());
    bool accepted = false;
    double vy = v;
    for (int halving = 0; halving < 40; ++halving) {
      for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[k] * std::exp(eta * (gr[k] - gmax));
      normalize(y);
      vy = eval_raw(g, y);
      if (vy >= v) {
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) break;
    const double gain = vy - v;
    x.swap(y);
    v = vy;
    grad_raw(g, x, gr);
    eta *= 1.5;
    stall = gain < tol ? stall + 1 : 0;
    if (stall >= 3) break;
  }
  return x;
}

Candidate run_multistart(const Hypergraph& g, const SolverConfig& cfg) {
  const int n = g.vertex_count();
  std::vector<Weighting> starts;
  starts.push_back(uniform_weighting(n));
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < cfg.restarts; ++k) {
    // Dirichlet(1): normalised standard exponentials.
    Weighting x(static_cast<std::size_t>(n));
    for (auto& v : x) v = -std::log1p(-unit(rng)) + 1e-300;
    normalize(x);
    starts.push_back(std::move(x));
  }
  std::vector<Candidate> results(starts.size());
  detail::parallel_for(starts.size(), cfg.jobs, [&](std::size_t k) {
    Weighting x = ascend(g, starts[k], cfg.max_iterations, cfg.tolerance);
    results[k] = polish(g, make_candidate(g, std::move(x), Method::MultistartAscent), cfg.kkt_tolerance);
  });
  Candidate best = results.front();
  for (std::size_t k = 1; k < results.size(); ++k)
    if (better(results[k], best)) best = results[k];
  return best;
}

// Supports whose pairs are all covered; an optimum with minimal support has
// this property, so nothing else needs to be solved.
void covered_supports(const PairCover& cover, int n, int min_size, VertexSet& cur, VertexMask cand,
                      std::vector<VertexSet>& out) {
  if (static_cast<int>(cur.size()) >= min_size) out.push_back(cur);
  const Vertex last = cur.empty() ? 0 : cur.back();
  for (Vertex v = last + 1; v <= n; ++v) {
    if (!cand.test(v)) continue;
    cur.push_back(v);
    covered_supports(cover, n, min_size, cur, cand & cover.neighbours(v), out);
    cur.pop_back();
  }
}

Candidate run_support_enum(const Hypergraph& g, const SolverConfig& cfg) {
  const int n = g.vertex_count();
  if (n > cfg.support_guard)
    throw UnsupportedSize("support enumeration is limited to n <= " + std::to_string(cfg.support_guard) +
                          " (got n = " + std::to_string(n) + "); raise HLAG_GUARD_N to override");
  PairCover cover(g);
  VertexMask all(n);
  for (Vertex v = 1; v <= n; ++v) all.set(v);
  std::vector<VertexSet> supports;
  VertexSet cur;
  covered_supports(cover, n, g.uniformity(), cur, all, supports);
  std::vector<Candidate> results(supports.size());
  detail::parallel_for(supports.size(), cfg.jobs, [&](std::size_t k) {
    const auto& s = supports[k];
    Weighting start(static_cast<std::size_t>(n), 0.0);
    for (Vertex v : s) start[v - 1] = 1.0 / static_cast<double>(s.size());
    if (auto y = newton_on_support(g, s, start)) results[k] = make_candidate(g, std::move(*y), Method::SupportEnum);
  });
  Candidate best = make_candidate(g, uniform_weighting(n), Method::SupportEnum);
  for (auto& c : results)
    if (c.value >= 0 && better(c, best)) best = std::move(c);
  return best;
}

}  // namespace

double eval(const Hypergraph& g, std::span<const double> x) {
  require_length(g, x);
  return eval_raw(g, x);
}

std::vector<double> grad(const Hypergraph& g, std::span<const double> x) {
  require_length(g, x);
  std::vector<double> out;
  grad_raw(g, x, out);
  return out;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::MultistartAscent: return "multistart-ascent";
    case Method::SupportEnum: return "support-enum";
    default: return "auto";
  }
}

Method parse_method(const std::string& s) {
  if (s == "multistart-ascent" || s == "ascent") return Method::MultistartAscent;
  if (s == "support-enum" || s == "enum") return Method::SupportEnum;
  if (s == "auto") return Method::Auto;
  throw InvalidArgument("unknown method '" + s + "'");
}

void SolverConfig::validate() const {
  if (!(tolerance > 0) || !(kkt_tolerance > 0)) throw InvalidArgument("solver tolerances must be positive");
  if (restarts < 1) throw InvalidArgument("solver needs at least one restart");
  if (max_iterations < 1) throw InvalidArgument("solver needs at least one iteration");
}

KktReport kkt_residual(const Hypergraph& g, std::span<const double> x) {
  require_length(g, x);
  KktReport rep;
  if (g.vertex_count() == 0) return rep;
  std::vector<double> gr;
  grad_raw(g, x, gr);
  const double target = g.uniformity() * eval_raw(g, x);
  for (std::size_t k = 0; k < x.size(); ++k) {
    double d = gr[k] - target;
    rep.residual = std::max(rep.residual, x[k] > 0 ? std::abs(d) : std::max(0.0, d));
  }
  PairCover cover(g);
  for (Vertex a = 1; a <= g.vertex_count(); ++a)
    for (Vertex b = a + 1; b <= g.vertex_count(); ++b)
      if (x[a - 1] > 0 && x[b - 1] > 0 && !cover.covered(a, b)) rep.uncovered_support_pairs.emplace_back(a, b);
  return rep;
}

bool equalize_equivalent(const Hypergraph& g, Weighting& x) {
  const int n = g.vertex_count();
  std::vector<int> cls(static_cast<std::size_t>(n) + 1, 0);
  int classes = 0;
  Weighting y = x;
  for (Vertex a = 1; a <= n; ++a) {
    if (cls[a]) continue;
    cls[a] = ++classes;
    std::vector<Vertex> members{a};
    for (Vertex b = a + 1; b <= n; ++b)
      if (!cls[b] && equivalent(g, a, b)) {
        cls[b] = classes;
        members.push_back(b);
      }
    if (members.size() < 2) continue;
    double sum = 0;
    for (Vertex v : members) sum += x[v - 1];
    for (Vertex v : members) y[v - 1] = sum / static_cast<double>(members.size());
  }
  if (eval_raw(g, y) < eval_raw(g, x) - 1e-10) return false;
  x.swap(y);
  return true;
}

LagrangianResult maximize(const Hypergraph& g, const SolverConfig& cfg) {
  cfg.validate();
  const int n = g.vertex_count();
  LagrangianResult res;
  res.seed = cfg.seed;
  res.method = cfg.method;
  if (n == 0) return res;
  if (g.empty()) {
    res.weighting = uniform_weighting(n);
    res.support = support_of(res.weighting);
    return res;
  }
  Candidate best;
  if (cfg.method == Method::SupportEnum) {
    best = run_support_enum(g, cfg);
  } else {
    best = run_multistart(g, cfg);
    res.restarts_used = cfg.restarts + 1;
    if (cfg.method == Method::Auto && n <= std::min(cfg.auto_enum_limit, cfg.support_guard)) {
      Candidate e = run_support_enum(g, cfg);
      if (better(e, best)) best = std::move(e);
    }
  }
  if (cfg.equalize_equivalent) equalize_equivalent(g, best.x);
  res.weighting = std::move(best.x);
  res.value = eval_raw(g, res.weighting);
  res.support = support_of(res.weighting);
  res.kkt_residual = kkt_residual(g, res.weighting).residual;
  res.method = best.method;
  return res;
}

namespace {

std::vector<Vertex> compose(const std::vector<Vertex>& outer, const std::vector<Vertex>& inner) {
  std::vector<Vertex> out;
  out.reserve(inner.size());
  for (Vertex v : inner) out.push_back(outer[v - 1]);
  return out;
}

std::vector<Vertex> identity_labels(int n) {
  std::vector<Vertex> l(static_cast<std::size_t>(n));
  std::iota(l.begin(), l.end(), 1);
  return l;
}

double lambda_without(const Hypergraph& g, Vertex v, const SolverConfig& cfg) {
  return maximize(delete_vertices(g, {v}).graph, cfg).value;
}

}  // namespace

DenseResult densify(const Hypergraph& g, const SolverConfig& cfg) {
  SolverConfig inner = cfg;
  inner.equalize_equivalent = false;
  Hypergraph cur = g;
  std::vector<Vertex> labels = identity_labels(g.vertex_count());
  while (true) {
    if (cur.empty()) {
      // Nothing carries weight; the dense subgraph is the empty graph.
      auto sub = induced(cur, {});
      return {sub.graph, {}, maximize(sub.graph, inner)};
    }
    LagrangianResult res = maximize(cur, inner);
    if (static_cast<int>(res.support.size()) < cur.vertex_count()) {
      auto sub = induced(cur, res.support);
      labels = compose(labels, sub.labels);
      cur = std::move(sub.graph);
      continue;
    }
    auto uncovered = uncovered_pairs(cur);
    if (uncovered.empty()) return {cur, labels, res};
    auto [a, b] = uncovered.front();
    double without_a = lambda_without(cur, a, inner);
    double without_b = lambda_without(cur, b, inner);
    Vertex drop = without_a > without_b + 1e-12 ? a : b;
    auto sub = delete_vertices(cur, {drop});
    labels = compose(labels, sub.labels);
    cur = std::move(sub.graph);
  }
}

UncoveredReduction uncovered_reduce(const Hypergraph& g, const SolverConfig& cfg) {
  UncoveredReduction out;
  out.lambda_before = maximize(g, cfg).value;
  Hypergraph cur = g;
  std::vector<Vertex> labels = identity_labels(g.vertex_count());
  while (true) {
    PairCover cover(cur);
    const int n = cur.vertex_count();
    std::vector<std::vector<Edge>> links(static_cast<std::size_t>(n) + 1);
    for (Vertex v = 1; v <= n; ++v) links[v] = link(cur, {v}).edges();
    Vertex drop = 0;
    std::optional<VertexPair> first_uncovered;
    for (Vertex a = 1; a <= n && !drop; ++a)
      for (Vertex b = a + 1; b <= n && !drop; ++b) {
        if (cover.covered(a, b)) continue;
        if (!first_uncovered) first_uncovered = VertexPair{a, b};
        const auto& la = links[a];
        const auto& lb = links[b];
        if (std::includes(la.begin(), la.end(), lb.begin(), lb.end())) drop = b;
        else if (std::includes(lb.begin(), lb.end(), la.begin(), la.end())) drop = a;
      }
    if (drop) {
      out.deleted_by_inclusion.push_back(labels[drop - 1]);
    } else if (first_uncovered) {
      auto [a, b] = *first_uncovered;
      UncoveredBranch br;
      br.pair = {labels[a - 1], labels[b - 1]};
      br.without_first = lambda_without(cur, a, cfg);
      br.without_second = lambda_without(cur, b, cfg);
      drop = br.without_first > br.without_second + 1e-12 ? a : b;
      br.deleted = labels[drop - 1];
      out.branches.push_back(br);
    } else {
      break;
    }
    auto sub = delete_vertices(cur, {drop});
    labels = compose(labels, sub.labels);
    cur = std::move(sub.graph);
  }
  std::sort(out.deleted_by_inclusion.begin(), out.deleted_by_inclusion.end());
  out.lambda_after = maximize(cur, cfg).value;
  out.graph = std::move(cur);
  out.labels = std::move(labels);
  return out;
}

}  // namespace hlag
