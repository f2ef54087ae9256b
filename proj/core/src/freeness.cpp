#include "hlag/freeness.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "hlag/error.hpp"
#include "hlag/families.hpp"
#include "parallel.hpp"

namespace hlag {

namespace {

VertexMask edge_mask(const Edge& e, int n) { return mask_of(e, n); }

struct MatchingSearch {
  const Hypergraph& g;
  std::vector<VertexMask> masks;
  std::vector<std::vector<int>> by_vertex;  // edge indices containing v
  int best = 0;
  std::vector<int> best_edges, cur;

  explicit MatchingSearch(const Hypergraph& graph)
      : g(graph), by_vertex(static_cast<std::size_t>(graph.vertex_count()) + 1) {
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      masks.push_back(edge_mask(g.edge(k), g.vertex_count()));
      for (Vertex v : g.edge(k)) by_vertex[v].push_back(static_cast<int>(k));
    }
  }

  void greedy() {
    VertexMask used(g.vertex_count());
    std::vector<int> chosen;
    for (std::size_t k = 0; k < masks.size(); ++k)
      if (!masks[k].intersects(used)) {
        used |= masks[k];
        chosen.push_back(static_cast<int>(k));
      }
    best = static_cast<int>(chosen.size());
    best_edges = chosen;
  }

  // `avail`: vertices still free and not yet decided to stay unmatched.
  void search(VertexMask avail) {
    // Vertices that can still be matched bound what is left.
    VertexMask live(g.vertex_count());
    Vertex first = 0;
    avail.for_each([&](Vertex v) {
      for (int k : by_vertex[v])
        if (masks[k].subset_of(avail)) {
          live.set(v);
          if (!first) first = v;
          return;
        }
    });
    const int cur_size = static_cast<int>(cur.size());
    if (!first) {
      if (cur_size > best) {
        best = cur_size;
        best_edges = cur;
      }
      return;
    }
    if (cur_size + live.count() / g.uniformity() <= best) return;
    for (int k : by_vertex[first]) {
      if (!masks[k].subset_of(avail)) continue;
      VertexMask next = avail;
      masks[k].for_each([&](Vertex v) { next.reset(v); });
      cur.push_back(k);
      search(next);
      cur.pop_back();
    }
    avail.reset(first);
    search(avail);
  }
};

struct SubsetIndex {
  std::unordered_set<std::uint64_t> subsets;
  explicit SubsetIndex(const Hypergraph& g) {
    const int r = g.uniformity();
    for (const auto& e : g.edges())
      for (unsigned s = 1; s < (1U << r); ++s) {
        std::uint64_t m = 0;
        for (int k = 0; k < r; ++k)
          if (s >> k & 1U) m |= std::uint64_t{1} << e[k];
        subsets.insert(m);
      }
  }
  bool contains(std::uint64_t m) const { return subsets.count(m) != 0; }
};

// Extends `chosen` by `need` vertices of `cand` so that all pairs stay covered.
bool extend_clique(const PairCover& cover, VertexMask cand, int need, VertexSet& chosen) {
  if (need == 0) return true;
  if (cand.count() < need) return false;
  bool found = false;
  std::vector<Vertex> order;
  cand.for_each([&](Vertex v) { order.push_back(v); });
  for (Vertex v : order) {
    if (found) break;
    cand.reset(v);
    chosen.push_back(v);
    if (extend_clique(cover, cand & cover.neighbours(v), need - 1, chosen)) found = true;
    else chosen.pop_back();
  }
  return found;
}

std::string matching_tag(int t, int r) { return "M_" + std::to_string(t) + "^" + std::to_string(r); }

void check_core_args(const Hypergraph& g, int p, const Hypergraph& f) {
  if (f.uniformity() != g.uniformity()) throw InvalidArgument("pattern and host have different uniformity");
  if (p < f.vertex_count()) throw InvalidArgument("core size p must be at least |V(F)|");
}

bool is_two_matching(const Hypergraph& f) {
  return f.vertex_count() == 2 * f.uniformity() && f == matching(2, f.uniformity());
}

FreenessReport core_two_matching(const Hypergraph& g, int p, FreenessReport rep) {
  const int n = g.vertex_count();
  PairCover cover(g);
  std::vector<VertexMask> masks;
  for (const auto& e : g.edges()) masks.push_back(edge_mask(e, n));
  for (std::size_t a = 0; a < g.edge_count(); ++a) {
    VertexMask common_a(n);
    bool first = true;
    for (Vertex v : g.edge(a)) {
      common_a = first ? cover.neighbours(v) : common_a & cover.neighbours(v);
      first = false;
    }
    for (std::size_t b = a + 1; b < g.edge_count(); ++b) {
      if (masks[a].intersects(masks[b]) || !masks[b].subset_of(common_a)) continue;
      VertexMask common = common_a;
      for (Vertex v : g.edge(b)) common &= cover.neighbours(v);
      VertexSet chosen;
      for (Vertex v : g.edge(a)) chosen.push_back(v);
      for (Vertex v : g.edge(b)) chosen.push_back(v);
      if (!extend_clique(cover, common, p - 2 * g.uniformity(), chosen)) continue;
      std::sort(chosen.begin(), chosen.end());
      rep.free = false;
      rep.core = chosen;
      rep.witness_edges = {g.edge(a), g.edge(b)};
      return rep;
    }
  }
  return rep;
}

struct CoreEmbedding {
  const Hypergraph& g;
  const Hypergraph& f;
  int p;
  PairCover cover;
  std::vector<std::vector<const Edge*>> closing;  // F edges whose largest vertex is k
  std::vector<Vertex> image;
  VertexMask used;

  CoreEmbedding(const Hypergraph& host, const Hypergraph& pattern, int core)
      : g(host), f(pattern), p(core), cover(host),
        closing(static_cast<std::size_t>(pattern.vertex_count()) + 1),
        image(static_cast<std::size_t>(pattern.vertex_count()) + 1, 0), used(host.vertex_count()) {
    for (const auto& e : f.edges()) closing[e.back()].push_back(&e);
  }

  bool edges_ok(Vertex k) const {
    Edge img;
    for (const Edge* e : closing[k]) {
      img.clear();
      for (Vertex v : *e) img.push_back(image[v]);
      std::sort(img.begin(), img.end());
      if (!g.has_edge(img)) return false;
    }
    return true;
  }

  bool place(Vertex k, VertexMask cand, VertexSet& core) {
    if (k > f.vertex_count()) {
      for (Vertex v = 1; v <= f.vertex_count(); ++v) core.push_back(image[v]);
      if (extend_clique(cover, cand, p - f.vertex_count(), core)) return true;
      core.clear();
      return false;
    }
    std::vector<Vertex> order;
    cand.for_each([&](Vertex v) { order.push_back(v); });
    for (Vertex v : order) {
      image[k] = v;
      if (!edges_ok(k)) continue;
      VertexMask next = cand & cover.neighbours(v);
      next.reset(v);
      if (place(k + 1, next, core)) return true;
    }
    image[k] = 0;
    return false;
  }
};

}  // namespace

int matching_number(const Hypergraph& g, std::vector<Edge>* witness) {
  MatchingSearch s(g);
  s.greedy();
  VertexMask all(g.vertex_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v) all.set(v);
  s.search(all);
  if (witness) {
    witness->clear();
    for (int k : s.best_edges) witness->push_back(g.edge(static_cast<std::size_t>(k)));
    std::sort(witness->begin(), witness->end());
  }
  return s.best;
}

FreenessReport is_matching_free(const Hypergraph& g, int t) {
  if (t < 1) throw InvalidArgument("matching size t must be positive");
  FreenessReport rep;
  rep.pattern = matching_tag(t, g.uniformity());
  std::vector<Edge> witness;
  if (matching_number(g, &witness) >= t) {
    rep.free = false;
    witness.resize(static_cast<std::size_t>(t));
    rep.witness_edges = std::move(witness);
  }
  return rep;
}

FreenessReport is_core_free(const Hypergraph& g, int p, const Hypergraph& f) {
  check_core_args(g, p, f);
  FreenessReport rep;
  rep.pattern = "core(" + std::to_string(p) + ",F)";
  if (p > g.vertex_count()) return rep;
  if (is_two_matching(f)) return core_two_matching(g, p, std::move(rep));
  CoreEmbedding search(g, f, p);
  VertexMask all(g.vertex_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v) all.set(v);
  VertexSet core;
  if (search.place(1, all, core)) {
    rep.free = false;
    for (const auto& e : f.edges()) {
      Edge img;
      for (Vertex v : e) img.push_back(search.image[v]);
      std::sort(img.begin(), img.end());
      rep.witness_edges.push_back(std::move(img));
    }
    std::sort(core.begin(), core.end());
    rep.core = std::move(core);
  }
  return rep;
}

FreenessReport is_hom_free(const Hypergraph& g, const Hypergraph& f, int p) {
  FreenessReport rep = is_core_free(g, p, f);
  rep.pattern = "hom(H_" + std::to_string(p) + "^F)";
  return rep;
}

FreenessReport hom_search(const Hypergraph& g, const Hypergraph& f, int p) {
  check_core_args(g, p, f);
  if (g.vertex_count() >= 64) throw UnsupportedSize("direct homomorphism search needs n < 64");
  const Hypergraph h = extension(f, p);
  const int n = g.vertex_count();
  FreenessReport rep;
  rep.pattern = "hom(H_" + std::to_string(p) + "^F)";
  if (n == 0) return rep;
  SubsetIndex index(g);

  // Core vertices first; each pad block right after its second core vertex.
  std::vector<std::vector<const Edge*>> core_edges(static_cast<std::size_t>(p) + 1);
  std::vector<std::vector<const Edge*>> pad_edges(static_cast<std::size_t>(p) + 1);
  std::vector<std::vector<const Edge*>> touching(static_cast<std::size_t>(p) + 1);
  for (const auto& e : h.edges()) {
    if (e.back() > p) {
      Vertex hi = 0;
      for (Vertex v : e)
        if (v <= p) hi = std::max(hi, v);
      pad_edges[hi].push_back(&e);
    } else {
      core_edges[e.back()].push_back(&e);
    }
    for (Vertex v : e)
      if (v <= p) touching[v].push_back(&e);
  }
  std::vector<Vertex> phi(static_cast<std::size_t>(h.vertex_count()) + 1, 0);

  // Images of the mapped part of e must be distinct and lie in a common edge.
  auto partial_ok = [&](const Edge& e) {
    std::uint64_t m = 0;
    int mapped = 0;
    for (Vertex v : e)
      if (phi[v]) {
        ++mapped;
        m |= std::uint64_t{1} << phi[v];
      }
    return mapped == 0 || (std::popcount(m) == mapped && index.contains(m));
  };

  // Pad vertices occur in one edge only, so any fill is as good as any other.
  auto fill_pad = [&](const Edge& e) {
    std::vector<Vertex> pads;
    for (Vertex v : e)
      if (v > p) pads.push_back(v);
    std::function<bool(std::size_t)> fill = [&](std::size_t k) {
      if (k == pads.size()) return true;
      for (Vertex w = 1; w <= n; ++w) {
        phi[pads[k]] = w;
        if (partial_ok(e) && fill(k + 1)) return true;
      }
      phi[pads[k]] = 0;
      return false;
    };
    return fill(0);
  };

  std::function<bool(Vertex)> place = [&](Vertex k) {
    if (k > p) return true;
    for (Vertex w = 1; w <= n; ++w) {
      phi[k] = w;
      bool ok = std::all_of(touching[k].begin(), touching[k].end(), [&](const Edge* e) { return partial_ok(*e); });
      if (!ok) continue;
      for (const Edge* e : pad_edges[k])
        if (!fill_pad(*e)) {
          ok = false;
          break;
        }
      if (ok && place(k + 1)) return true;
      for (const Edge* e : pad_edges[k])
        for (Vertex v : *e)
          if (v > p) phi[v] = 0;
    }
    phi[k] = 0;
    return false;
  };
  if (place(1)) {
    rep.free = false;
    rep.hom_map.assign(phi.begin() + 1, phi.end());
    for (Vertex v = 1; v <= p; ++v) rep.core.push_back(phi[v]);
    std::sort(rep.core.begin(), rep.core.end());
    for (const auto& e : f.edges()) {
      Edge img;
      for (Vertex v : e) img.push_back(phi[v]);
      std::sort(img.begin(), img.end());
      rep.witness_edges.push_back(std::move(img));
    }
  }
  return rep;
}

namespace {

long long binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// r-subsets of [n] in colex order with the index of each lower cover
// (one element lowered by one).
struct ColexSets {
  int n, r, t;
  std::vector<Edge> sets;
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<int>> lower;

  ColexSets(int n_, int r_, int t_) : n(n_), r(r_), t(t_) {
    Edge cur;
    std::function<void(int, int)> gen = [&](int lo, int k) {
      if (k == 0) {
        sets.push_back(cur);
        return;
      }
      for (int v = lo; v <= n; ++v) {
        cur.push_back(v);
        gen(v + 1, k - 1);
        cur.pop_back();
      }
    };
    gen(1, r);
    std::sort(sets.begin(), sets.end(), [](const Edge& a, const Edge& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    std::unordered_map<std::uint64_t, int> pos;
    for (std::size_t k = 0; k < sets.size(); ++k) {
      std::uint64_t m = 0;
      for (Vertex v : sets[k]) m |= std::uint64_t{1} << v;
      masks.push_back(m);
      pos[m] = static_cast<int>(k);
    }
    lower.resize(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k) {
      const Edge& s = sets[k];
      for (int a = 0; a < r; ++a) {
        int lowered = s[a] - 1;
        if (lowered < 1 || (a > 0 && lowered == s[a - 1])) continue;
        std::uint64_t m = (masks[k] & ~(std::uint64_t{1} << s[a])) | (std::uint64_t{1} << lowered);
        lower[k].push_back(pos.at(m));
      }
    }
  }
};

// Depth-first decision over the colex list; `state` holds the inclusion flags.
struct Enumerator {
  const ColexSets& cs;
  std::vector<char> in;
  std::vector<int> chosen;

  explicit Enumerator(const ColexSets& c) : cs(c), in(c.sets.size(), 0) {}

  bool may_include(int k) const {
    for (int l : cs.lower[k])
      if (!in[l]) return false;
    if (cs.t == 2) {
      for (int c : chosen)
        if (!(cs.masks[c] & cs.masks[k])) return false;
      return true;
    }
    std::vector<Edge> edges;
    for (int c : chosen) edges.push_back(cs.sets[c]);
    edges.push_back(cs.sets[k]);
    return matching_number(Hypergraph(cs.r, cs.n, std::move(edges))) < cs.t;
  }

  template <class Leaf>
  void run(int k, Leaf&& leaf) {
    if (k == static_cast<int>(cs.sets.size())) {
      leaf(chosen);
      return;
    }
    run(k + 1, leaf);
    if (may_include(k)) {
      in[k] = 1;
      chosen.push_back(k);
      run(k + 1, leaf);
      chosen.pop_back();
      in[k] = 0;
    }
  }

  // Collects every decision prefix of length `depth`.
  void prefixes(int k, int depth, std::vector<std::vector<int>>& out) {
    if (k == depth) {
      out.push_back(chosen);
      return;
    }
    prefixes(k + 1, depth, out);
    if (may_include(k)) {
      in[k] = 1;
      chosen.push_back(k);
      prefixes(k + 1, depth, out);
      chosen.pop_back();
      in[k] = 0;
    }
  }

  void load(const std::vector<int>& prefix) {
    std::fill(in.begin(), in.end(), 0);
    chosen = prefix;
    for (int c : prefix) in[c] = 1;
  }
};

Hypergraph graph_of(const ColexSets& cs, const std::vector<int>& chosen) {
  std::vector<Edge> edges;
  edges.reserve(chosen.size());
  for (int c : chosen) edges.push_back(cs.sets[c]);
  return Hypergraph(cs.r, cs.n, std::move(edges));
}

void check_enumeration_size(int n, int r, int t, const EnumerationConfig& cfg) {
  if (r < 2 || n < 0 || t < 1) throw InvalidArgument("enumeration needs r >= 2, n >= 0, t >= 1");
  if (n >= 64) throw UnsupportedSize("enumeration needs n < 64");
  if (cfg.unsafe_size) return;
  const int guard = size_guard(cfg.guard);
  if (binom(n, r) > binom(guard, 4))
    throw UnsupportedSize("exhaustive enumeration with n = " + std::to_string(n) + ", r = " + std::to_string(r) +
                          " exceeds the size guard (C(n,r) <= C(" + std::to_string(guard) +
                          ",4)); set HLAG_GUARD_N or pass --unsafe-size to override");
}

}  // namespace

void enumerate_left_compressed_free(int n, int r, int t, const std::function<void(const Hypergraph&)>& emit,
                                    const EnumerationConfig& cfg) {
  check_enumeration_size(n, r, t, cfg);
  ColexSets cs(n, r, t);
  Enumerator e(cs);
  e.run(0, [&](const std::vector<int>& chosen) { emit(graph_of(cs, chosen)); });
}

std::uint64_t count_left_compressed_free(int n, int r, int t, const EnumerationConfig& cfg) {
  check_enumeration_size(n, r, t, cfg);
  ColexSets cs(n, r, t);
  Enumerator e(cs);
  std::uint64_t count = 0;
  e.run(0, [&](const std::vector<int>&) { ++count; });
  return count;
}

namespace {

struct Best {
  double value = -1;
  std::optional<Hypergraph> graph;

  void offer(double v, const Hypergraph& g) {
    constexpr double kTie = 1e-12;
    if (!graph || v > value + kTie || (v >= value - kTie && g.edges() < graph->edges())) {
      value = v;
      graph = g;
    }
  }
  void merge(const Best& o) {
    if (o.graph) offer(o.value, *o.graph);
  }
};

struct SubtreeResult {
  std::uint64_t graphs = 0;
  Best all, star, non_star;
};

double star_lambda(int n, int r, const SolverConfig& solver) {
  if (n < r) return 0;
  if (r == 4) return 9.0 * (n - 2) * (n - 3) / (512.0 * (n - 1) * (n - 1));
  return maximize(star(n, r), solver).value;
}

}  // namespace

ExtremalSearch extremal_lambda_search(int n, int r, int t, const SolverConfig& solver, const EnumerationConfig& cfg) {
  check_enumeration_size(n, r, t, cfg);
  ColexSets cs(n, r, t);
  // Split the decision tree at a depth giving a few prefixes per worker.
  Enumerator root(cs);
  std::vector<std::vector<int>> prefixes;
  int depth = 0;
  const std::size_t want = static_cast<std::size_t>(std::max(cfg.jobs, 1)) * 16;
  const int total = static_cast<int>(cs.sets.size());
  while (true) {
    prefixes.clear();
    root.prefixes(0, depth, prefixes);
    if (prefixes.size() >= want || depth == total) break;
    ++depth;
  }
  SolverConfig inner = solver;
  inner.jobs = 1;
  std::vector<SubtreeResult> results(prefixes.size());
  detail::parallel_for(prefixes.size(), cfg.jobs, [&](std::size_t k) {
    Enumerator e(cs);
    e.load(prefixes[k]);
    SubtreeResult& res = results[k];
    e.run(depth, [&](const std::vector<int>& chosen) {
      Hypergraph g = graph_of(cs, chosen);
      ++res.graphs;
      double value = 0;
      if (!g.empty()) {
        auto core = induced(g, non_isolated_vertices(g));
        value = maximize(core.graph, inner).value;
      }
      res.all.offer(value, g);
      if (is_star_subgraph(g)) res.star.offer(value, g);
      else res.non_star.offer(value, g);
    });
  });
  SubtreeResult merged;
  for (const auto& r_ : results) {
    merged.graphs += r_.graphs;
    merged.all.merge(r_.all);
    merged.star.merge(r_.star);
    merged.non_star.merge(r_.non_star);
  }
  ExtremalSearch out;
  out.n = n;
  out.r = r;
  out.t = t;
  out.graphs = merged.graphs;
  out.max_lambda = std::max(0.0, merged.all.value);
  out.witness = merged.all.graph ? *merged.all.graph : Hypergraph(r, n);
  out.witness_is_star = is_star_subgraph(out.witness);
  if (merged.non_star.graph) {
    out.max_non_star_lambda = merged.non_star.value;
    out.non_star_witness = merged.non_star.graph;
  }
  out.max_star_lambda = std::max(0.0, merged.star.value);
  out.star_bound = star_lambda(n, r, solver);
  out.dichotomy_holds =
      out.max_non_star_lambda < out.non_star_threshold && out.max_star_lambda <= out.star_bound + 1e-7;
  return out;
}

}  // namespace hlag
