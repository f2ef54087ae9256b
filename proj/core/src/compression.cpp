#include "hlag/compression.hpp"

#include <algorithm>
#include <optional>

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"

namespace hlag {

Hypergraph compress_pair(const Hypergraph& g, Vertex i, Vertex j) {
  auto moved = link_diff(g, j, i);
  if (moved.empty()) return g;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    if (std::binary_search(e.begin(), e.end(), j) && !std::binary_search(e.begin(), e.end(), i)) {
      Edge rest;
      for (Vertex v : e)
        if (v != j) rest.push_back(v);
      if (std::binary_search(moved.begin(), moved.end(), rest)) {
        rest.insert(std::upper_bound(rest.begin(), rest.end(), i), i);
        edges.push_back(std::move(rest));
        continue;
      }
    }
    edges.push_back(e);
  }
  return Hypergraph(g.uniformity(), g.vertex_count(), std::move(edges));
}

bool is_left_compressed(const Hypergraph& g) {
  Edge shifted;
  for (const auto& e : g.edges())
    for (std::size_t a = 0; a < e.size(); ++a)
      for (Vertex i = 1; i < e[a]; ++i) {
        if (std::binary_search(e.begin(), e.end(), i)) continue;
        shifted = e;
        shifted[a] = i;
        std::sort(shifted.begin(), shifted.end());
        if (!g.has_edge(shifted)) return false;
      }
  return true;
}

std::int64_t potential(const Hypergraph& g) {
  std::int64_t s = 0;
  for (Vertex v : g.flat()) s += v;
  return s;
}

std::string to_string(CompressionStep::Kind k) {
  switch (k) {
    case CompressionStep::Kind::Densify: return "densify";
    case CompressionStep::Kind::Relabel: return "relabel";
    default: return "compress";
  }
}

namespace {

// New label of each vertex when sorting by decreasing weight; weights within
// 1e-10 keep their current order.
std::vector<Vertex> weight_order(const Weighting& x) {
  const int n = static_cast<int>(x.size());
  std::vector<Vertex> order;
  for (Vertex v = 1; v <= n; ++v) {
    auto pos = order.end();
    while (pos != order.begin() && x[v - 1] > x[*(pos - 1) - 1] + 1e-10) --pos;
    order.insert(pos, v);
  }
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) perm[order[k] - 1] = k + 1;
  return perm;
}

std::optional<std::pair<Vertex, Vertex>> first_violation(const Hypergraph& g) {
  for (Vertex j = 2; j <= g.vertex_count(); ++j)
    for (Vertex i = 1; i < j; ++i)
      if (!link_diff(g, j, i).empty()) return std::pair{i, j};
  return std::nullopt;
}

}  // namespace

DenseCompressed dense_and_compress(const Hypergraph& g, int t, const SolverConfig& cfg) {
  if (auto rep = is_matching_free(g, t); !rep.free)
    throw PatternFound("input contains " + rep.pattern, rep);
  DenseCompressed out;
  out.trace.initial = g;
  out.trace.initial_lambda = maximize(g, cfg).value;
  Hypergraph cur = g;
  const std::int64_t cap =
      static_cast<std::int64_t>(g.vertex_count()) * std::max<std::int64_t>(potential(g), 1) + g.vertex_count() + 2;
  std::optional<std::size_t> pending;  // compress step waiting for its λ
  LagrangianResult certificate;        // full-support optimum of the current dense graph
  for (std::int64_t round = 0;; ++round) {
    if (round > cap) throw std::logic_error("dense_and_compress exceeded its step bound");
    DenseResult dense = densify(cur, cfg);
    if (pending) out.trace.steps[*pending].lambda_after = dense.result.value;
    pending.reset();
    if (dense.graph.vertex_count() < cur.vertex_count()) {
      CompressionStep step;
      step.kind = CompressionStep::Kind::Densify;
      for (Vertex v = 1; v <= cur.vertex_count(); ++v)
        if (!std::binary_search(dense.labels.begin(), dense.labels.end(), v)) step.removed.push_back(v);
      step.potential_before = potential(cur);
      step.potential_after = potential(dense.graph);
      step.lambda_after = dense.result.value;
      out.trace.steps.push_back(std::move(step));
    }
    cur = std::move(dense.graph);
    certificate = std::move(dense.result);
    if (is_left_compressed(cur)) break;

    auto perm = weight_order(certificate.weighting);
    bool identity = true;
    for (std::size_t k = 0; k < perm.size(); ++k) identity = identity && perm[k] == static_cast<Vertex>(k + 1);
    if (!identity) {
      CompressionStep step;
      step.kind = CompressionStep::Kind::Relabel;
      step.potential_before = potential(cur);
      cur = relabel(cur, perm);
      step.potential_after = potential(cur);
      step.perm = perm;
      step.lambda_after = certificate.value;
      out.trace.steps.push_back(std::move(step));
      Weighting moved(certificate.weighting.size());
      for (std::size_t v = 0; v < perm.size(); ++v) moved[perm[v] - 1] = certificate.weighting[v];
      certificate.weighting = std::move(moved);
      for (Vertex& v : certificate.support) v = perm[v - 1];
      std::sort(certificate.support.begin(), certificate.support.end());
      if (is_left_compressed(cur)) break;
    }

    auto [i, j] = *first_violation(cur);
    CompressionStep step;
    step.kind = CompressionStep::Kind::Compress;
    step.i = i;
    step.j = j;
    step.moved = link_diff(cur, j, i).size();
    step.potential_before = potential(cur);
    cur = compress_pair(cur, i, j);
    step.potential_after = potential(cur);
    out.trace.steps.push_back(std::move(step));
    pending = out.trace.steps.size() - 1;
  }
  out.result = std::move(certificate);
  out.trace.final = cur;
  out.trace.final_lambda = out.result.value;
  out.graph = std::move(cur);
  return out;
}

}  // namespace hlag
