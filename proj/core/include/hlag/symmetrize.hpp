#pragma once

#include <map>
#include <string>
#include <vector>

#include "hlag/hypergraph.hpp"

namespace hlag {

/// Graph on the original labels 1..n together with the surviving vertex set,
/// an ordered partition of it and the representatives (the keys of `parts`,
/// each the first member of its part). Deleted vertices stay as isolated labels.
struct PointedHypergraph {
  Hypergraph graph;
  VertexMask alive;
  std::map<Vertex, std::vector<Vertex>> parts;

  static PointedHypergraph singletons(const Hypergraph& g);

  int alive_count() const { return alive.count(); }
  VertexSet vertices() const;
  VertexSet representatives() const;
  /// Degrees in `graph` indexed by label.
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const PointedHypergraph&, const PointedHypergraph&) = default;
};

struct SymConfig {
  double gamma = 0.05;
  double beta = 0.02;
  double alpha = 0.01;
  double epsilon = 0.002;
  double delta = 0.0005;
  /// Evaluate the cleaning threshold at the input size instead of the current size.
  bool fixed_n = false;
  /// Skip the 𝒦_8^{M_2^4}-freeness precondition (used by tests on corrupted inputs).
  bool check_free = true;

  void validate() const;
};

/// (9/128 - alpha) * n^3.
double cleaning_threshold(double alpha, int n);

struct CleanRecord {
  Vertex representative = 0;
  Vertex deleted = 0;
  std::size_t degree = 0;
  double threshold = 0;
};

/// Deletes tails of under-threshold parts until the minimum degree reaches the
/// threshold or nothing is left. Among under-threshold representatives the one
/// of minimum degree (then smallest label) is chosen.
PointedHypergraph clean(const PointedHypergraph& pg, const SymConfig& cfg, std::vector<CleanRecord>* log = nullptr);

struct MergeRecord {
  bool merged = false;
  Vertex into = 0;  ///< u
  Vertex from = 0;  ///< v, with d(v) <= d(u)
};

/// One merging step on the lexicographically smallest uncovered
/// representative pair; identity when the representatives are covered.
PointedHypergraph merge(const PointedHypergraph& pg, MergeRecord* record = nullptr);

struct SymState {
  std::string name;  ///< "H0", "H'1", "H1", ...
  int index = 0;
  bool cleaned = false;  ///< H'_i rather than H_i
  PointedHypergraph state;
};

struct SymStep {
  int index = 0;
  std::string kind;  ///< init | clean | merge | stop
  std::string detail;
  int vertex_count = 0;
  std::size_t edge_count = 0;
};

struct SymTrace {
  SymConfig config;
  Hypergraph input;
  std::vector<SymState> states;     ///< H0, H'1, H1, ..., H'_t, H_t
  std::vector<SymStep> steps;
  std::vector<MergeRecord> merges;  ///< merges[i-1] is the i-th merging step
  std::vector<std::vector<CleanRecord>> cleanings;

  /// H_t, the fixed point.
  const PointedHypergraph& result() const { return states.back().state; }
  int rounds() const { return static_cast<int>(merges.size()); }
};

/// Clean/merge until a merging step changes nothing. Throws PatternFound when
/// the input is not 𝒦_8^{M_2^4}-free. Needs r = 4.
SymTrace symmetrize(const Hypergraph& g, const SymConfig& cfg = {});

struct AuditViolation {
  int step = 0;
  std::string property;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditViolation> violations;
  /// |V(F*)| >= (1 - alpha) n; reported only.
  bool large_fixed_point = false;
  /// F*[U_t] has a vertex in every edge; reported only.
  bool star_on_representatives = false;
  bool clean() const { return violations.empty(); }
};

/// Checks on every H_i (and every j <= i): transversal, H_i[U_i] = F[U_i],
/// |e ∩ P_{j,v}| <= 1, equivalence inside parts, monotone U and V, H_i is the
/// blowup of H_i[U_i], the cleaning degree bound, e(H_i) >= e(H'_i), and the
/// deletion-order implication for merged parts.
AuditReport audit(const SymTrace& trace);

std::string trace_to_json(const SymTrace& trace);

}  // namespace hlag
