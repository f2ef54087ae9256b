#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hlag/hypergraph.hpp"

namespace hlag {

/// Point of the standard simplex, one weight per vertex (index v-1 for vertex v).
using Weighting = std::vector<double>;

/// Throws InvalidArgument unless x has length n, is non-negative and sums to 1
/// within `tol`.
void validate_weighting(std::span<const double> x, int n, double tol = 1e-9);

Weighting uniform_weighting(int n);

/// λ(G, x) = Σ_e Π_{i∈e} x_i, edges accumulated in canonical order.
double eval(const Hypergraph& g, std::span<const double> x);

/// Partial derivatives L_G(x_i), entry v-1 for vertex v.
std::vector<double> grad(const Hypergraph& g, std::span<const double> x);

enum class Method { MultistartAscent, SupportEnum, Auto };

std::string to_string(Method m);
Method parse_method(const std::string& s);

struct SolverConfig {
  Method method = Method::Auto;
  int restarts = 64;  ///< Dirichlet(1) starts, on top of the uniform start
  int max_iterations = 20000;
  double tolerance = 1e-12;      ///< ascent stops once λ improves by less than this
  double kkt_tolerance = 1e-8;   ///< target residual for polished optima
  std::uint64_t seed = 0;
  int jobs = 1;
  int support_guard = 12;        ///< largest n accepted by support enumeration
  int auto_enum_limit = 10;      ///< Auto also runs support enumeration up to this n
  bool equalize_equivalent = true;

  void validate() const;
};

struct LagrangianResult {
  double value = 0;
  Weighting weighting;
  VertexSet support;
  double kkt_residual = 0;
  Method method = Method::Auto;
  int restarts_used = 0;
  std::uint64_t seed = 0;
};

struct KktReport {
  /// max_i |L(x_i) - rλ| on the support, max(0, L(x_i) - rλ) off it.
  double residual = 0;
  /// Pairs of positive-weight vertices that no edge covers.
  std::vector<VertexPair> uncovered_support_pairs;
};

KktReport kkt_residual(const Hypergraph& g, std::span<const double> x);

/// Maximises λ(G, ·) over the simplex. Graphs without edges give value 0 at
/// the uniform weighting. SupportEnum throws UnsupportedSize above the guard.
LagrangianResult maximize(const Hypergraph& g, const SolverConfig& cfg = {});

/// Averages weights inside each class of pairwise equivalent vertices.
/// Returns false (leaving x alone) if λ would drop by more than 1e-10.
bool equalize_equivalent(const Hypergraph& g, Weighting& x);

struct DenseResult {
  Hypergraph graph;                ///< relabelled 1..k
  std::vector<Vertex> labels;      ///< original label of each kept vertex
  LagrangianResult result;         ///< optimum of `graph`, full support
};

/// Repeatedly restricts G to the support of an optimum (and drops one side of
/// any uncovered pair without lowering λ) until the optimum found has full
/// support and every pair is covered.
DenseResult densify(const Hypergraph& g, const SolverConfig& cfg = {});

struct UncoveredBranch {
  VertexPair pair;
  double without_first = 0;   ///< λ(G - pair.first)
  double without_second = 0;  ///< λ(G - pair.second)
  Vertex deleted = 0;
};

struct UncoveredReduction {
  Hypergraph graph;               ///< relabelled 1..k, all pairs covered
  std::vector<Vertex> labels;
  VertexSet deleted_by_inclusion; ///< removed because L(i) ⊆ L(j)
  std::vector<UncoveredBranch> branches;
  double lambda_before = 0;
  double lambda_after = 0;
};

/// While an uncovered pair {i,j} with L(i) ⊆ L(j) exists, deletes i (the
/// larger label when the links coincide). Remaining uncovered pairs are
/// resolved by deleting the side whose removal keeps the larger λ, and both
/// branch values are reported.
UncoveredReduction uncovered_reduce(const Hypergraph& g, const SolverConfig& cfg = {});

}  // namespace hlag
