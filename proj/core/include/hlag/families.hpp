#pragma once

#include <optional>
#include <string>

#include "hlag/hypergraph.hpp"

namespace hlag {

/// K_t^r: all r-subsets of [t].
Hypergraph complete(int t, int r);

/// M_t^r: t disjoint edges {(k-1)r+1, ..., kr} on rt vertices.
Hypergraph matching(int t, int r);

/// All r-sets of [n] containing vertex 1.
Hypergraph star(int n, int r);

/// Size of A maximising a * C(n-a, r-1); ties go to the smaller a.
int split_part_size(int n, int r);

/// S^r(n) with A = {1..a}: edges are one vertex of A plus r-1 vertices of
/// B = {a+1..n}. Without `a` the edge-maximising size is used.
Hypergraph split(int n, int r, std::optional<int> a = std::nullopt);

/// H_p^F. Core vertices are 1..p (F's vertices first). For every uncovered core
/// pair {i,j}, taken in lexicographic order, r-2 fresh pad vertices are
/// appended and {i,j} ∪ pad becomes an edge.
Hypergraph extension(const Hypergraph& f, int p);

/// The fourteen covering 4-graphs F_1..F_14 and F_15 = star(n,4). Needs n >= 8.
Hypergraph case_family(int k, int n);

/// K_5^3 without the edges 245 and 345.
Hypergraph k53minus2();

/// Vertex whose link bounds λ(F_k) in the case analysis (1 for k = 4, 8 otherwise).
Vertex case_link_vertex(int k);

struct FamilySpec {
  std::string name;  ///< complete | matching | star | split | extension | case1..case15 | k53minus2
  int n = 0;
  int r = 4;
  int t = 2;
  std::optional<int> p;
  std::optional<int> a;
};

/// Dispatches on `spec.name`. `complete` uses n as its vertex count and
/// `extension` extends matching(t, r) to p core vertices.
Hypergraph build_family(const FamilySpec& spec);

}  // namespace hlag
