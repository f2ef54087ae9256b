#include "hlag/partition.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "hlag/error.hpp"
#include "parallel.hpp"

namespace hlag {

namespace {

int class_weight(int c, int r) {
  if (c == 1) return 0;
  if (c == 0 || (c == 2 && r != 2)) return 1;
  if (c == r) return 3;
  return 2;
}

// Smaller Σ', then smaller |W1|, then lexicographically smaller W1.
bool better(std::int64_t s1, const VertexSet& a, std::int64_t s2, const VertexSet& b) {
  if (s1 != s2) return s1 < s2;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct Incidence {
  int r;
  std::vector<std::vector<int>> edges_of;  // edge indices per vertex
  explicit Incidence(const Hypergraph& g)
      : r(g.uniformity()), edges_of(static_cast<std::size_t>(g.vertex_count()) + 1) {
    for (std::size_t k = 0; k < g.edge_count(); ++k)
      for (Vertex v : g.edge(k)) edges_of[v].push_back(static_cast<int>(k));
  }
  // Change of Σ' when v switches sides, given per-edge counts.
  std::int64_t delta(Vertex v, bool in_w1, const std::vector<int>& cnt) const {
    std::int64_t d = 0;
    const int step = in_w1 ? -1 : 1;
    for (int e : edges_of[v]) d += class_weight(cnt[e] + step, r) - class_weight(cnt[e], r);
    return d;
  }
  void flip(Vertex v, bool in_w1, std::vector<int>& cnt) const {
    const int step = in_w1 ? -1 : 1;
    for (int e : edges_of[v]) cnt[e] += step;
  }
};

VertexSet members(const std::vector<char>& side) {
  VertexSet out;
  for (std::size_t v = 1; v < side.size(); ++v)
    if (side[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

VertexSet exhaustive(const Hypergraph& g) {
  const int n = g.vertex_count();
  Incidence inc(g);
  std::vector<int> cnt(g.edge_count(), 0);
  std::vector<char> side(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t sigma = static_cast<std::int64_t>(g.edge_count());
  std::int64_t best = sigma;
  std::uint64_t best_mask = 0;
  std::uint64_t mask = 0;
  auto lex_less = [](std::uint64_t a, std::uint64_t b) {
    // Same size: the set holding the smallest differing vertex comes first.
    std::uint64_t diff = a ^ b;
    return diff && (a & (diff & -diff));
  };
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int bit = std::countr_zero(k);
    const Vertex v = bit + 1;
    sigma += inc.delta(v, side[v], cnt);
    inc.flip(v, side[v], cnt);
    side[v] = !side[v];
    mask ^= std::uint64_t{1} << bit;
    if (sigma > best) continue;
    const int pc = std::popcount(mask), bpc = std::popcount(best_mask);
    if (sigma < best || pc < bpc || (pc == bpc && lex_less(mask, best_mask))) {
      best = sigma;
      best_mask = mask;
    }
  }
  VertexSet w1;
  for (int b = 0; b < n; ++b)
    if (best_mask >> b & 1U) w1.push_back(b + 1);
  return w1;
}

VertexSet local_search(const Hypergraph& g, const PartitionConfig& cfg) {
  const int n = g.vertex_count();
  Incidence inc(g);
  struct Run {
    std::int64_t sigma = 0;
    VertexSet w1;
  };
  std::vector<Run> runs(static_cast<std::size_t>(std::max(cfg.restarts, 1)));
  detail::parallel_for(runs.size(), cfg.jobs, [&](std::size_t k) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    std::vector<char> side(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) side[v] = static_cast<char>(rng() & 1U);
    std::vector<int> cnt(g.edge_count(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      for (Vertex v : g.edge(e)) cnt[e] += side[v];
    while (true) {
      std::int64_t best_delta = 0;
      Vertex best_v = 0;
      for (Vertex v = 1; v <= n; ++v) {
        std::int64_t d = inc.delta(v, side[v], cnt);
        if (d < best_delta) {
          best_delta = d;
          best_v = v;
        }
      }
      if (!best_v) break;
      inc.flip(best_v, side[best_v], cnt);
      side[best_v] = !side[best_v];
    }
    runs[k].w1 = members(side);
    runs[k].sigma = sigma_score(g, runs[k].w1);
  });
  const Run* best = &runs.front();
  for (const auto& r : runs)
    if (better(r.sigma, r.w1, best->sigma, best->w1)) best = &r;
  return best->w1;
}

}  // namespace

PartitionScore classify_edges(const Hypergraph& g, const VertexSet& w1) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex v : w1) {
    if (v < 1 || v > g.vertex_count()) throw InvalidArgument("W1 contains a vertex outside the graph");
    in[v] = 1;
  }
  PartitionScore s;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) (in[v] ? s.w1 : s.w2).push_back(v);
  const int r = g.uniformity();
  for (const auto& e : g.edges()) {
    int c = 0;
    for (Vertex v : e) c += in[v];
    switch (class_weight(c, r)) {
      case 0: ++s.good; break;
      case 1: ++s.bad; break;
      case 2: ++s.very_bad; break;
      default: ++s.worst; break;
    }
  }
  s.sigma = static_cast<std::int64_t>(s.bad + 2 * s.very_bad + 3 * s.worst);
  return s;
}

std::int64_t sigma_score(const Hypergraph& g, const VertexSet& w1) { return classify_edges(g, w1).sigma; }

PartitionScore min_sigma_partition(const Hypergraph& g, const PartitionConfig& cfg) {
  if (cfg.restarts < 1) throw InvalidArgument("partition search needs at least one restart");
  const int n = g.vertex_count();
  bool use_exhaustive = cfg.mode == PartitionConfig::Mode::Exhaustive ||
                        (cfg.mode == PartitionConfig::Mode::Auto && n <= cfg.exhaustive_limit);
  if (use_exhaustive && n > std::max(cfg.exhaustive_limit, size_guard(cfg.exhaustive_limit)))
    throw UnsupportedSize("exhaustive partition search is limited to n <= " + std::to_string(cfg.exhaustive_limit) +
                          " (got n = " + std::to_string(n) + ")");
  if (g.empty()) return classify_edges(g, {});
  return classify_edges(g, use_exhaustive ? exhaustive(g) : local_search(g, cfg));
}

}  // namespace hlag
