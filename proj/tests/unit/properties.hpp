#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hlag/compression.hpp"
#include "hlag/families.hpp"
#include "hlag/freeness.hpp"
#include "hlag/lagrangian.hpp"
#include "test_util.hpp"

namespace hlag::test {

struct PropertyOutcome {
  std::string name;
  int instances = 0;
  int violations = 0;
  double worst = 0;  ///< largest observed deviation, where meaningful
  double tolerance = 0;
  bool pass() const { return instances >= 200 && violations == 0; }
};

/// Σ x_i L(x_i) = r λ(G, x).
inline PropertyOutcome euler_identity(std::uint64_t seed, int count = 400) {
  PropertyOutcome out{"Euler identity", 0, 0, 0, 1e-12};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const int r = 2 + k % 4;
    const int n = r + static_cast<int>(rng() % 8);
    Hypergraph g = random_graph(rng, n, r, 0.5);
    Weighting x = random_weighting(rng, n);
    auto gr = grad(g, x);
    double lhs = 0;
    for (int v = 0; v < n; ++v) lhs += x[v] * gr[v];
    const double dev = std::abs(lhs - r * eval(g, x));
    out.worst = std::max(out.worst, dev);
    if (dev > out.tolerance) ++out.violations;
    ++out.instances;
  }
  return out;
}

/// λ(G') <= λ(G) + 1e-7 for G' ⊆ G on at most 8 vertices.
inline PropertyOutcome subgraph_monotonicity(std::uint64_t seed, int count = 200) {
  PropertyOutcome out{"subgraph monotonicity", 0, 0, 0, 1e-7};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const int r = 3 + k % 2;
    const int n = r + 1 + static_cast<int>(rng() % (8 - r));
    Hypergraph g = random_graph(rng, n, r, 0.6);
    Hypergraph sub = random_subgraph(rng, g, 0.6);
    const double excess = maximize(sub).value - maximize(g).value;
    out.worst = std::max(out.worst, excess);
    if (excess > out.tolerance) ++out.violations;
    ++out.instances;
  }
  return out;
}

/// |π_ij(G)| = |G|.
inline PropertyOutcome compression_edge_count(std::uint64_t seed, int count = 500) {
  PropertyOutcome out{"|pi_ij(G)| = |G|", 0, 0, 0, 0};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const int r = 3 + k % 2;
    const int n = r + 1 + static_cast<int>(rng() % 6);
    Hypergraph g = random_graph(rng, n, r, 0.4);
    Vertex i = 1 + static_cast<Vertex>(rng() % n), j = i;
    while (j == i) j = 1 + static_cast<Vertex>(rng() % n);
    Hypergraph c = compress_pair(g, i, j);
    if (c.edge_count() != g.edge_count() || !link_diff(c, j, i).empty()) ++out.violations;
    ++out.instances;
  }
  return out;
}

/// π_ij keeps M_t^r-free graphs free, t ∈ {2,3}, r ∈ {3,4}.
inline PropertyOutcome compression_keeps_freeness(std::uint64_t seed, int count = 500) {
  PropertyOutcome out{"pi_ij preserves M_t^r-freeness", 0, 0, 0, 0};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const int r = 3 + k % 2, t = 2 + (k / 2) % 2;
    const int n = r * t - 1 + static_cast<int>(rng() % 4);
    Hypergraph g = random_free_graph(rng, n, r, t, 40);
    Vertex i = 1 + static_cast<Vertex>(rng() % n), j = i;
    while (j == i) j = 1 + static_cast<Vertex>(rng() % n);
    if (!is_matching_free(compress_pair(g, i, j), t).free) ++out.violations;
    ++out.instances;
  }
  return out;
}

/// λ(π_ij(G), x) >= λ(G, x) whenever x_i >= x_j, 50 weightings per graph.
inline PropertyOutcome compression_pointwise(std::uint64_t seed, int count = 200) {
  PropertyOutcome out{"lambda(pi_ij(G),x) >= lambda(G,x) for x_i >= x_j", 0, 0, 0, 1e-15};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const int r = 3 + k % 2;
    const int n = r + 1 + static_cast<int>(rng() % 5);
    Hypergraph g = random_graph(rng, n, r, 0.5);
    for (int w = 0; w < 50; ++w) {
      Weighting x = random_weighting(rng, n);
      Vertex i = 1 + static_cast<Vertex>(rng() % n), j = i;
      while (j == i) j = 1 + static_cast<Vertex>(rng() % n);
      if (x[i - 1] < x[j - 1]) std::swap(i, j);
      const double drop = eval(g, x) - eval(compress_pair(g, i, j), x);
      out.worst = std::max(out.worst, drop);
      if (drop > out.tolerance) ++out.violations;
    }
    ++out.instances;
  }
  return out;
}

/// λ(blowup(G, s)) = λ(G).
inline PropertyOutcome blowup_invariance(std::uint64_t seed, int count = 200) {
  PropertyOutcome out{"blowup lambda-invariance", 0, 0, 0, 1e-7};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const int r = 3 + k % 2;
    const int n = r + static_cast<int>(rng() % 3);
    Hypergraph g = random_graph(rng, n, r, 0.7);
    std::vector<int> sizes(static_cast<std::size_t>(n), 1);
    for (int extra = static_cast<int>(rng() % 4); extra > 0; --extra) ++sizes[rng() % sizes.size()];
    const double dev = std::abs(maximize(blowup(g, sizes)).value - maximize(g).value);
    out.worst = std::max(out.worst, dev);
    if (dev > out.tolerance) ++out.violations;
    ++out.instances;
  }
  return out;
}

/// Core search and direct homomorphism search agree (p = 8, F = M_2^4, n <= 9).
inline PropertyOutcome core_hom_agreement(std::uint64_t seed, int count = 300) {
  PropertyOutcome out{"core-free <=> hom-free", 0, 0, 0, 0};
  std::mt19937_64 rng(seed);
  const Hypergraph m2 = matching(2, 4);
  for (int k = 0; k < count; ++k) {
    const int n = 8 + k % 2;
    Hypergraph g = random_graph(rng, n, 4, 0.2 + 0.7 * static_cast<double>(rng() % 100) / 99.0);
    if (is_core_free(g, 8, m2).free != hom_search(g, m2, 8).free) ++out.violations;
    ++out.instances;
  }
  return out;
}

inline std::vector<std::function<PropertyOutcome()>> property_suites(std::uint64_t seed) {
  return {
      [=] { return euler_identity(seed); },
      [=] { return subgraph_monotonicity(seed + 1); },
      [=] { return compression_edge_count(seed + 2); },
      [=] { return compression_keeps_freeness(seed + 3); },
      [=] { return compression_pointwise(seed + 4); },
      [=] { return blowup_invariance(seed + 5); },
      [=] { return core_hom_agreement(seed + 6); },
  };
}

}  // namespace hlag::test
