#include "hlag/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "hlag/families.hpp"
#include "hlag/io.hpp"
#include "hlag/polynomial.hpp"

namespace hlag {

Rational Rational::reduced(std::int64_t num, std::int64_t den) {
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  if (den < 0) g = -g;
  return {num / g, den / g};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational star_lambda_exact(int n) {
  const std::int64_t m = n;
  return Rational::reduced(9 * (m - 2) * (m - 3), 512 * (m - 1) * (m - 1));
}

VerificationRow make_row(std::string id, std::string family, std::string n_range, std::string bound_text,
                         double bound, RowKind kind, double tolerance, double computed) {
  VerificationRow row;
  row.id = std::move(id);
  row.family = std::move(family);
  row.n_range = std::move(n_range);
  row.bound_text = std::move(bound_text);
  row.bound = bound;
  row.kind = kind;
  row.tolerance = tolerance;
  row.computed = computed;
  switch (kind) {
    case RowKind::Upper:
      row.margin = bound - computed;
      row.pass = computed <= bound + tolerance;
      break;
    case RowKind::StrictUpper:
      row.margin = bound - computed;
      row.pass = computed < bound;
      break;
    case RowKind::Equality:
      row.margin = -std::abs(bound - computed);
      row.pass = std::abs(bound - computed) <= tolerance;
      break;
  }
  return row;
}

namespace {

VerificationRow rational_row(std::string id, std::string family, std::string n_range, Rational bound, RowKind kind,
                             double tolerance, double computed) {
  return make_row(std::move(id), std::move(family), std::move(n_range), bound.str(), bound.value(), kind, tolerance,
                  computed);
}

struct CaseBound {
  Rational bound;
  VertexPair uncovered;  // {0,0} when the argument needs none
};

CaseBound case_bound(int k) {
  switch (k) {
    case 1: return {{1, 108}, {0, 0}};
    case 2: return {{1, 64}, {4, 5}};
    case 3: return {{1, 64}, {4, 5}};
    case 4: return {{4, 243}, {0, 0}};
    case 5: return {{1, 64}, {0, 0}};
    case 6: return {{169, 10000}, {5, 6}};
    case 7: return {{169, 10000}, {5, 6}};
    case 8: return {{1, 64}, {5, 6}};
    case 9: return {{1, 64}, {5, 6}};
    case 10: return {{2, 135}, {6, 7}};
    case 11: return {{2, 135}, {6, 7}};
    case 12: return {{1, 72}, {5, 6}};
    case 13: return {{2, 135}, {6, 7}};
    default: return {{2, 135}, {6, 7}};
  }
}

// {1ij : 2 <= i < j <= m} as a 3-graph on [m].
Hypergraph apex_triples(int m) {
  std::vector<Edge> edges;
  for (int i = 2; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) edges.push_back({1, i, j});
  return Hypergraph(3, m, std::move(edges));
}

double best_value(const Hypergraph& g, const SolverConfig& cfg, LagrangianResult* out = nullptr) {
  LagrangianResult res = maximize(g, cfg);
  if (out) *out = res;
  return res.value;
}

}  // namespace

std::vector<VerificationRow> verify_cases(const CaseSuiteConfig& cfg) {
  std::vector<VerificationRow> rows;
  const SolverConfig& s = cfg.solver;
  const std::string range = std::to_string(cfg.n_lo) + ".." + std::to_string(cfg.n_hi);

  rows.push_back(rational_row("K7^4", "complete", "7", {5, 343}, RowKind::Equality, 1e-9, best_value(complete(7, 4), s)));
  rows.push_back(rational_row("K4^3", "complete", "4", {1, 16}, RowKind::Equality, 1e-9, best_value(complete(4, 3), s)));
  for (int n = 4; n <= cfg.n_hi; ++n)
    rows.push_back(rational_row("star", "star", std::to_string(n), star_lambda_exact(n), RowKind::Equality, 1e-9,
                                best_value(star(n, 4), s)));
  {
    LagrangianResult res;
    double v = best_value(k53minus2(), s, &res);
    rows.push_back(rational_row("K5^3-2", "k53minus2", "5", {673, 10000}, RowKind::Upper, 1e-7, v));
    rows.push_back(make_row("K5^3-2 kkt", "k53minus2", "5", "1e-8", 1e-8, RowKind::Upper, 0, res.kkt_residual));
  }
  {
    Polynomial p = 0.4 * (Polynomial::identity() * (Polynomial::constant(1) - Polynomial::identity()) *
                          (Polynomial::constant(1) - Polynomial::identity()));
    IntervalMax m = maximize_on_interval(p, 0, 1);
    rows.push_back(rational_row("interval max", "(2/5)x(1-x)^2", "-", {8, 135}, RowKind::Equality, 1e-10, m.value));
    rows.push_back(rational_row("interval argmax", "(2/5)x(1-x)^2", "-", {1, 3}, RowKind::Equality, 1e-10, m.argmax));
  }
  rows.push_back(
      rational_row("apex triples", "{1ij: 2<=i<j<=6}", "6", {8, 135}, RowKind::Equality, 1e-9, best_value(apex_triples(6), s)));
  rows.push_back(
      rational_row("apex triples", "{1ij: 2<=i<j<=5}", "5", {1, 18}, RowKind::Equality, 1e-9, best_value(apex_triples(5), s)));

  for (int k = 1; k <= 14; ++k) {
    const CaseBound cb = case_bound(k);
    const std::string fam = "case" + std::to_string(k);
    const std::string id = "F" + std::to_string(k);
    const Vertex lv = case_link_vertex(k);
    double worst_identity = 0, worst_link_gap = -1, worst_pair_gap = 0;
    bool pair_uncovered = true;
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
      Hypergraph f = case_family(k, n);
      LagrangianResult res = maximize(f, s);
      rows.push_back(rational_row(id, fam, std::to_string(n), cb.bound, RowKind::Upper, 1e-7, res.value));

      Hypergraph lk = link(f, {lv});
      const double via_link = 0.25 * eval(lk, res.weighting);
      worst_identity = std::max(worst_identity, std::abs(via_link - res.value));
      const double link_max = best_value(lk, s);
      worst_link_gap = std::max(worst_link_gap, res.value - 0.25 * link_max);

      if (cb.uncovered.first) {
        auto [a, b] = cb.uncovered;
        if (PairCover(lk).covered(a, b)) pair_uncovered = false;
        const double without_a = best_value(delete_vertices(lk, {a}).graph, s);
        const double without_b = best_value(delete_vertices(lk, {b}).graph, s);
        worst_pair_gap = std::max(worst_pair_gap, std::abs(link_max - std::max(without_a, without_b)));
      }
    }
    const std::string lname = "link of " + std::to_string(lv);
    rows.push_back(make_row(id + " link identity", fam, range, "λ(F) = L(x_v)/4", 0, RowKind::Equality, 1e-6,
                            worst_identity));
    rows.push_back(make_row(id + " link bound", fam, range, "λ(F) <= λ(" + lname + ")/4", 0, RowKind::Upper, 1e-7,
                            worst_link_gap));
    if (cb.uncovered.first) {
      auto [a, b] = cb.uncovered;
      const std::string pair = "{" + std::to_string(a) + "," + std::to_string(b) + "}";
      rows.push_back(make_row(id + " uncovered " + pair, fam, range, "uncovered in " + lname, 1, RowKind::Equality, 0,
                              pair_uncovered ? 1 : 0));
      rows.push_back(make_row(id + " delete " + pair, fam, range, "λ(L) = max(λ(L-a), λ(L-b))", 0, RowKind::Equality,
                              1e-7, worst_pair_gap));
    }
  }
  return rows;
}

bool TheoremSummary::pass() const { return all_pass(rows); }

TheoremSummary verify_theorem(const TheoremConfig& cfg) {
  TheoremSummary out;
  const Rational threshold{169, 10000};
  for (int n = 4; n <= cfg.n_max; ++n) {
    ExtremalSearch es = extremal_lambda_search(n, 4, 2, cfg.solver, cfg.enumeration);
    const std::string ns = std::to_string(n);
    if (es.non_star_witness)
      out.rows.push_back(rational_row("non-star max", "search", ns, threshold, RowKind::StrictUpper, 0,
                                      es.max_non_star_lambda));
    out.rows.push_back(rational_row("star max", "search", ns, star_lambda_exact(n), RowKind::Upper, 1e-7,
                                    es.max_star_lambda));
    if (n == 7) {
      out.rows.push_back(rational_row("max at 7", "search", ns, {5, 343}, RowKind::Equality, 1e-9, es.max_lambda));
      out.rows.push_back(make_row("witness at 7", "search", ns, "K7^4", 1, RowKind::Equality, 0,
                                  es.witness == complete(7, 4) ? 1 : 0));
    }
    out.searches.push_back(std::move(es));
  }
  double prev = 0;
  bool monotone = true;
  for (int n = 4; n <= cfg.star_trend_max; ++n) {
    const double v = 24 * maximize(star(n, 4), cfg.solver).value;
    const Rational closed = Rational::reduced(27 * (n - 2) * (n - 3), 64 * (n - 1) * (n - 1));
    out.rows.push_back(rational_row("4! star", "star", std::to_string(n), closed, RowKind::Equality, 1e-8, v));
    out.rows.push_back(rational_row("4! star < 27/64", "star", std::to_string(n), {27, 64}, RowKind::StrictUpper, 0, v));
    if (v <= prev) monotone = false;
    prev = v;
  }
  out.rows.push_back(make_row("4! star increasing", "star", "4.." + std::to_string(cfg.star_trend_max), "increasing", 1,
                              RowKind::Equality, 0, monotone ? 1 : 0));
  return out;
}

bool all_pass(const std::vector<VerificationRow>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

namespace {

std::string kind_name(RowKind k) {
  switch (k) {
    case RowKind::Upper: return "<=";
    case RowKind::StrictUpper: return "<";
    default: return "==";
  }
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

std::string rows_to_text(const std::vector<VerificationRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"id", "family", "n", "rel", "bound", "computed", "margin", "result"});
  for (const auto& r : rows)
    cells.push_back({r.id, r.family, r.n_range, kind_name(r.kind), r.bound_text, format_real(r.computed), sci(r.margin),
                     r.pass ? "pass" : "FAIL"});
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

std::string rows_to_json(const std::vector<VerificationRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["family"] = r.family;
    o["n"] = r.n_range;
    o["relation"] = kind_name(r.kind);
    o["bound"] = r.bound_text;
    o["bound_value"] = r.bound;
    o["tolerance"] = r.tolerance;
    o["computed"] = r.computed;
    o["margin"] = r.margin;
    o["pass"] = r.pass;
    arr.push_back(std::move(o));
  }
  return arr.dump(2);
}

}  // namespace hlag
