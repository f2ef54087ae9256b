#pragma once

#include <random>
#include <string>
#include <vector>

#include "hlag/families.hpp"
#include "hlag/freeness.hpp"
#include "hlag/hypergraph.hpp"
#include "test_util.hpp"

namespace hlag::test {

struct SymInstance {
  std::string name;
  Hypergraph graph;
  double alpha = 0.03;
};

inline Hypergraph star_blowup(std::mt19937_64& rng, int n) {
  const int base = 5 + static_cast<int>(rng() % 6);
  std::vector<int> sizes(static_cast<std::size_t>(base), 1);
  for (int extra = n - base; extra > 0; --extra) ++sizes[rng() % sizes.size()];
  return blowup(star(base, 4), sizes);
}

/// Toggles up to 5% of |E| random 4-sets. Additions that would create a
/// covered 8-core with two disjoint edges are skipped.
inline Hypergraph perturb(std::mt19937_64& rng, const Hypergraph& g) {
  const int n = g.vertex_count();
  const int budget = std::max<int>(1, static_cast<int>(g.edge_count() / 20));
  std::vector<Edge> edges = g.edges();
  std::uniform_int_distribution<int> pick(1, n);
  for (int k = 0; k < budget; ++k) {
    Edge e;
    while (e.size() < 4) {
      Vertex v = pick(rng);
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it != edges.end()) {
      edges.erase(it);
      continue;
    }
    edges.push_back(e);
    if (!is_core_free(Hypergraph(4, n, edges), 8, matching(2, 4)).free) edges.pop_back();
  }
  return Hypergraph(4, n, std::move(edges));
}

/// Star blowups, split graphs and their perturbations on 12..24 vertices.
inline std::vector<SymInstance> sym_corpus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double alphas[] = {0.03, 0.04, 0.05, 0.06};
  std::vector<SymInstance> out;
  for (int k = 0; k < count; ++k) {
    const int n = 12 + static_cast<int>(rng() % 13);
    SymInstance inst;
    inst.alpha = alphas[rng() % 4];
    Hypergraph base;
    std::string kind;
    if (rng() & 1U) {
      base = star_blowup(rng, n);
      kind = "star-blowup";
    } else {
      const int a = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n / 3));
      base = split(n, 4, a);
      kind = "split(a=" + std::to_string(a) + ")";
    }
    const bool perturbed = k % 3 == 2;
    inst.graph = perturbed ? perturb(rng, base) : base;
    inst.name = "#" + std::to_string(k) + " " + kind + (perturbed ? "+perturbed" : "") + " n=" + std::to_string(n) +
                " alpha=" + std::to_string(inst.alpha);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace hlag::test
