#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlag/hypergraph.hpp"
#include "hlag/lagrangian.hpp"

namespace hlag {

struct FreenessReport {
  std::string pattern;               ///< "M_t^r", "core(p,F)" or "hom(H_p^F)"
  bool free = true;
  std::vector<Edge> witness_edges;   ///< disjoint edges, or the image of F's edges
  VertexSet core;                    ///< covered p-set (core patterns)
  std::vector<Vertex> hom_map;       ///< image of each vertex of H_p^F (direct hom search)
};

/// Thrown by procedures whose input must avoid a pattern.
class PatternFound : public std::runtime_error {
 public:
  PatternFound(const std::string& what, FreenessReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const FreenessReport& report() const noexcept { return report_; }

 private:
  FreenessReport report_;
};

/// Maximum number of pairwise disjoint edges; `witness` receives one maximum matching.
int matching_number(const Hypergraph& g, std::vector<Edge>* witness = nullptr);

FreenessReport is_matching_free(const Hypergraph& g, int t);

/// 𝒦_p^F-freeness: no p-set C with all pairs covered whose induced graph
/// contains a copy of F. F = M_2^r takes a specialised path.
FreenessReport is_core_free(const Hypergraph& g, int p, const Hypergraph& f);

/// H_p^F-hom-freeness, answered through the equivalent core search.
FreenessReport is_hom_free(const Hypergraph& g, const Hypergraph& f, int p);

/// Backtracking search for a homomorphism extension(F, p) -> G. Needs n < 64.
FreenessReport hom_search(const Hypergraph& g, const Hypergraph& f, int p);

struct EnumerationConfig {
  int jobs = 1;
  /// Largest n accepted for (r, t) = (4, 2); other shapes scale it by the
  /// number of r-sets. Raised by HLAG_GUARD_N or `unsafe_size`.
  int guard = 9;
  bool unsafe_size = false;
};

/// Every left-compressed M_t^r-free r-graph on [n] (isolated vertices allowed,
/// so graphs on fewer vertices are included), each exactly once, in canonical
/// colex decision order. Calls `emit` serially.
void enumerate_left_compressed_free(int n, int r, int t, const std::function<void(const Hypergraph&)>& emit,
                                    const EnumerationConfig& cfg = {});

std::uint64_t count_left_compressed_free(int n, int r, int t, const EnumerationConfig& cfg = {});

struct ExtremalSearch {
  int n = 0, r = 4, t = 2;
  std::uint64_t graphs = 0;
  double max_lambda = 0;
  Hypergraph witness;
  bool witness_is_star = true;
  double max_non_star_lambda = 0;
  std::optional<Hypergraph> non_star_witness;
  double max_star_lambda = 0;
  double star_bound = 0;           ///< λ(star(n, r)) closed form for r = 4, solver value otherwise
  double non_star_threshold = 0.0169;
  bool dichotomy_holds = true;     ///< non-star < threshold and star <= star_bound + 1e-7
};

ExtremalSearch extremal_lambda_search(int n, int r, int t, const SolverConfig& solver = {},
                                      const EnumerationConfig& cfg = {});

}  // namespace hlag
