#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hlag/vertex_mask.hpp"

namespace hlag {

/// Vertex labels are 1-based, matching the `.hg` file format.
using Vertex = int;
/// Strictly increasing vertex labels.
using Edge = std::vector<Vertex>;
/// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;
using VertexPair = std::pair<Vertex, Vertex>;

/// Uniform hypergraph on vertices 1..n. Immutable once built; edges are kept
/// sorted lexicographically so iteration order is canonical.
///
/// Uniformity 1 is accepted so that links of (r-1)-sets are representable;
/// everything read from files must have r >= 2.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int uniformity, int vertex_count);
  /// Edges may be given unsorted; throws InvalidArgument on wrong arity,
  /// repeated or out-of-range vertices, or duplicate edges.
  Hypergraph(int uniformity, int vertex_count, std::vector<Edge> edges);

  int uniformity() const noexcept { return r_; }
  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_[k]; }
  /// Edge vertices back to back, `uniformity()` entries per edge.
  std::span<const Vertex> flat() const noexcept { return flat_; }

  /// `e` must be sorted.
  bool has_edge(std::span<const Vertex> e) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int r_ = 2;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vertex> flat_;
};

/// Result of restricting a graph to a vertex subset: the graph is relabelled
/// 1..k in increasing order and `labels[i-1]` is the original label of i.
struct InducedSubgraph {
  Hypergraph graph;
  std::vector<Vertex> labels;
};

/// (r-|T|)-graph of edge remainders {e : e ∪ T ∈ E(G), e ∩ T = ∅} on the same labels.
Hypergraph link(const Hypergraph& g, const VertexSet& t);

/// (r-1)-sets e with j ∉ e, e ∪ {i} ∈ E(G) and e ∪ {j} ∉ E(G), in lexicographic order.
std::vector<Edge> link_diff(const Hypergraph& g, Vertex i, Vertex j);

InducedSubgraph induced(const Hypergraph& g, const VertexSet& keep);

/// Removes the given vertices and relabels the rest.
InducedSubgraph delete_vertices(const Hypergraph& g, const VertexSet& drop);

/// Symmetric (n+1)x(n+1) table of which pairs lie in a common edge.
class PairCover {
 public:
  explicit PairCover(const Hypergraph& g);
  bool covered(Vertex a, Vertex b) const { return neighbours_[a].test(b); }
  /// Vertices sharing an edge with `v`.
  const VertexMask& neighbours(Vertex v) const { return neighbours_[v]; }

 private:
  std::vector<VertexMask> neighbours_;
};

bool covers_pairs(const Hypergraph& g);
std::vector<VertexPair> uncovered_pairs(const Hypergraph& g);

/// Replaces vertex i by sizes[i-1] clones laid out in consecutive blocks.
Hypergraph blowup(const Hypergraph& g, std::span<const int> sizes);

/// i ~ j: L(i\j) = L(j\i) and no edge contains both.
bool equivalent(const Hypergraph& g, Vertex i, Vertex j);

std::size_t degree(const Hypergraph& g, Vertex v);
std::vector<std::size_t> degrees(const Hypergraph& g);
/// 0 for a graph without vertices.
std::size_t min_degree(const Hypergraph& g);

/// Relabels vertex v as perm[v-1]; perm must be a permutation of 1..n.
Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm);

/// Swaps two labels.
Hypergraph transpose(const Hypergraph& g, Vertex i, Vertex j);

/// Edge set of `sub` contained in that of `host` (same uniformity, sub.n <= host.n).
bool is_subgraph(const Hypergraph& sub, const Hypergraph& host);

/// True when some vertex lies in every edge (vacuously true without edges).
bool is_star_subgraph(const Hypergraph& g);

/// Vertices lying in at least one edge.
VertexSet non_isolated_vertices(const Hypergraph& g);

VertexMask mask_of(std::span<const Vertex> vertices, int n);

}  // namespace hlag
