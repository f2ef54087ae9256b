#include "hlag/hypergraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "hlag/error.hpp"

namespace hlag {

namespace {

std::string describe(std::span<const Vertex> e) {
  std::string s = "{";
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(e[k]);
  }
  return s + "}";
}

void require_vertex(const Hypergraph& g, Vertex v, const char* what) {
  if (v < 1 || v > g.vertex_count())
    throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(g.vertex_count()));
}

void require_vertex_set(const Hypergraph& g, const VertexSet& s, const char* what) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    require_vertex(g, s[k], what);
    if (k && s[k] <= s[k - 1]) throw InvalidArgument(std::string(what) + ": vertex set must be sorted and distinct");
  }
}

}  // namespace

int size_guard(int default_limit) {
  if (const char* env = std::getenv("HLAG_GUARD_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > default_limit && v < 64) return static_cast<int>(v);
  }
  return default_limit;
}

Hypergraph::Hypergraph(int uniformity, int vertex_count) : r_(uniformity), n_(vertex_count) {
  if (uniformity < 1) throw InvalidArgument("uniformity must be positive");
  if (vertex_count < 0) throw InvalidArgument("vertex count must be non-negative");
}

Hypergraph::Hypergraph(int uniformity, int vertex_count, std::vector<Edge> edges)
    : Hypergraph(uniformity, vertex_count) {
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != r_)
      throw InvalidArgument("edge " + describe(e) + " has " + std::to_string(e.size()) + " vertices, expected " +
                            std::to_string(r_));
    std::sort(e.begin(), e.end());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] < 1 || e[k] > n_) throw InvalidArgument("edge " + describe(e) + " has a vertex outside 1.." + std::to_string(n_));
      if (k && e[k] == e[k - 1]) throw InvalidArgument("edge " + describe(e) + " repeats a vertex");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw InvalidArgument("duplicate edge " + describe(*dup));
  edges_ = std::move(edges);
  flat_.reserve(edges_.size() * static_cast<std::size_t>(r_));
  for (const auto& e : edges_) flat_.insert(flat_.end(), e.begin(), e.end());
}

bool Hypergraph::has_edge(std::span<const Vertex> e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, [](const Edge& a, std::span<const Vertex> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return it != edges_.end() && std::equal(it->begin(), it->end(), e.begin(), e.end());
}

Hypergraph link(const Hypergraph& g, const VertexSet& t) {
  require_vertex_set(g, t, "link");
  if (static_cast<int>(t.size()) >= g.uniformity())
    throw InvalidArgument("link: |T| must be smaller than the uniformity");
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (!std::includes(e.begin(), e.end(), t.begin(), t.end())) continue;
    Edge rest;
    std::set_difference(e.begin(), e.end(), t.begin(), t.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return Hypergraph(g.uniformity() - static_cast<int>(t.size()), g.vertex_count(), std::move(out));
}

std::vector<Edge> link_diff(const Hypergraph& g, Vertex i, Vertex j) {
  require_vertex(g, i, "link_diff");
  require_vertex(g, j, "link_diff");
  if (i == j) throw InvalidArgument("link_diff: vertices must differ");
  std::vector<Edge> out;
  Edge with_j;
  for (const auto& e : g.edges()) {
    if (!std::binary_search(e.begin(), e.end(), i) || std::binary_search(e.begin(), e.end(), j)) continue;
    with_j.clear();
    for (Vertex v : e)
      if (v != i) with_j.push_back(v);
    Edge rest = with_j;
    with_j.insert(std::upper_bound(with_j.begin(), with_j.end(), j), j);
    if (!g.has_edge(with_j)) out.push_back(std::move(rest));
  }
  return out;
}

InducedSubgraph induced(const Hypergraph& g, const VertexSet& keep) {
  require_vertex_set(g, keep, "induced");
  std::vector<Vertex> new_label(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t k = 0; k < keep.size(); ++k) new_label[keep[k]] = static_cast<Vertex>(k + 1);
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (!std::all_of(e.begin(), e.end(), [&](Vertex v) { return new_label[v] != 0; })) continue;
    Edge f;
    f.reserve(e.size());
    for (Vertex v : e) f.push_back(new_label[v]);
    out.push_back(std::move(f));
  }
  return {Hypergraph(g.uniformity(), static_cast<int>(keep.size()), std::move(out)), keep};
}

InducedSubgraph delete_vertices(const Hypergraph& g, const VertexSet& drop) {
  require_vertex_set(g, drop, "delete_vertices");
  VertexSet keep;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (!std::binary_search(drop.begin(), drop.end(), v)) keep.push_back(v);
  return induced(g, keep);
}

PairCover::PairCover(const Hypergraph& g)
    : neighbours_(static_cast<std::size_t>(g.vertex_count()) + 1, VertexMask(g.vertex_count())) {
  for (const auto& e : g.edges())
    for (Vertex a : e)
      for (Vertex b : e)
        if (a != b) neighbours_[a].set(b);
}

bool covers_pairs(const Hypergraph& g) { return uncovered_pairs(g).empty(); }

std::vector<VertexPair> uncovered_pairs(const Hypergraph& g) {
  PairCover cover(g);
  std::vector<VertexPair> out;
  for (Vertex a = 1; a <= g.vertex_count(); ++a)
    for (Vertex b = a + 1; b <= g.vertex_count(); ++b)
      if (!cover.covered(a, b)) out.emplace_back(a, b);
  return out;
}

Hypergraph blowup(const Hypergraph& g, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != g.vertex_count())
    throw InvalidArgument("blowup: need one class size per vertex");
  std::vector<int> first(sizes.size() + 1, 1);
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] < 1) throw InvalidArgument("blowup: class sizes must be at least 1");
    first[k + 1] = first[k] + sizes[k];
  }
  const int total = first.back() - 1;
  std::vector<Edge> out;
  const int r = g.uniformity();
  for (const auto& e : g.edges()) {
    // Odometer over the product of the classes of e's vertices.
    Edge cur(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) cur[k] = first[e[k] - 1];
    while (true) {
      out.push_back(cur);
      int k = r - 1;
      while (k >= 0 && cur[k] == first[e[k]] - 1) {
        cur[k] = first[e[k] - 1];
        --k;
      }
      if (k < 0) break;
      ++cur[k];
    }
  }
  return Hypergraph(r, total, std::move(out));
}

bool equivalent(const Hypergraph& g, Vertex i, Vertex j) {
  if (i == j) throw InvalidArgument("equivalent: vertices must differ");
  for (const auto& e : g.edges())
    if (std::binary_search(e.begin(), e.end(), i) && std::binary_search(e.begin(), e.end(), j)) return false;
  return link_diff(g, i, j) == link_diff(g, j, i);
}

std::size_t degree(const Hypergraph& g, Vertex v) {
  require_vertex(g, v, "degree");
  std::size_t d = 0;
  for (const auto& e : g.edges()) d += std::binary_search(e.begin(), e.end(), v);
  return d;
}

std::vector<std::size_t> degrees(const Hypergraph& g) {
  std::vector<std::size_t> d(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex v : g.flat()) ++d[v];
  return d;
}

std::size_t min_degree(const Hypergraph& g) {
  if (g.vertex_count() == 0) return 0;
  auto d = degrees(g);
  return *std::min_element(d.begin() + 1, d.end());
}

Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) throw InvalidArgument("relabel: permutation has wrong length");
  std::vector<Edge> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    Edge f;
    f.reserve(e.size());
    for (Vertex v : e) f.push_back(perm[v - 1]);
    out.push_back(std::move(f));
  }
  return Hypergraph(g.uniformity(), g.vertex_count(), std::move(out));
}

Hypergraph transpose(const Hypergraph& g, Vertex i, Vertex j) {
  require_vertex(g, i, "transpose");
  require_vertex(g, j, "transpose");
  std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 1; v <= g.vertex_count(); ++v) perm[v - 1] = v;
  std::swap(perm[i - 1], perm[j - 1]);
  return relabel(g, perm);
}

bool is_subgraph(const Hypergraph& sub, const Hypergraph& host) {
  if (sub.uniformity() != host.uniformity() || sub.vertex_count() > host.vertex_count()) return false;
  return std::all_of(sub.edges().begin(), sub.edges().end(), [&](const Edge& e) { return host.has_edge(e); });
}

bool is_star_subgraph(const Hypergraph& g) {
  if (g.empty()) return true;
  Edge common = g.edge(0);
  for (const auto& e : g.edges()) {
    Edge next;
    std::set_intersection(common.begin(), common.end(), e.begin(), e.end(), std::back_inserter(next));
    common.swap(next);
    if (common.empty()) return false;
  }
  return true;
}

VertexSet non_isolated_vertices(const Hypergraph& g) {
  auto d = degrees(g);
  VertexSet out;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (d[v]) out.push_back(v);
  return out;
}

VertexMask mask_of(std::span<const Vertex> vertices, int n) {
  VertexMask m(n);
  for (Vertex v : vertices) m.set(v);
  return m;
}

}  // namespace hlag
