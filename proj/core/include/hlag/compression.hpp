#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlag/hypergraph.hpp"
#include "hlag/lagrangian.hpp"

namespace hlag {

/// π_ij(G): every edge {j} ∪ F with F ∈ L(j∖i) is replaced by {i} ∪ F.
Hypergraph compress_pair(const Hypergraph& g, Vertex i, Vertex j);

/// L(j∖i) = ∅ for all 1 <= i < j <= n.
bool is_left_compressed(const Hypergraph& g);

/// s(G) = Σ_{e∈G} Σ_{i∈e} i.
std::int64_t potential(const Hypergraph& g);

struct CompressionStep {
  enum class Kind { Densify, Relabel, Compress };
  Kind kind = Kind::Densify;
  VertexSet removed;            ///< Densify: labels (before the step) of deleted vertices
  std::vector<Vertex> perm;     ///< Relabel: new label of each vertex
  Vertex i = 0, j = 0;          ///< Compress
  std::size_t moved = 0;        ///< Compress: edges moved
  std::int64_t potential_before = 0;
  std::int64_t potential_after = 0;
  double lambda_after = 0;
};

std::string to_string(CompressionStep::Kind k);

struct CompressionTrace {
  std::vector<CompressionStep> steps;
  Hypergraph initial;
  Hypergraph final;
  double initial_lambda = 0;
  double final_lambda = 0;
};

struct DenseCompressed {
  Hypergraph graph;
  LagrangianResult result;
  CompressionTrace trace;
};

/// Alternates densification and single compressions until the dense graph is
/// left-compressed. The weighting is recomputed before every compression;
/// vertices are relabelled by decreasing weight (differences below 1e-10
/// count as ties, which keep the current order) and the violating pair with
/// smallest j, then smallest i, is compressed. Throws PatternFound when G
/// contains M_t^r.
DenseCompressed dense_and_compress(const Hypergraph& g, int t, const SolverConfig& cfg = {});

}  // namespace hlag
