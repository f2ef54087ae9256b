#include "hlag/families.hpp"

#include <set>
#include <string>

#include "hlag/error.hpp"

namespace hlag {

namespace {

using EdgeSet = std::set<Edge>;

long long binomial(int n, int k) {
  if (k < 0 || n < k) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Appends every k-subset of [lo, hi] to `prefix` via `emit`.
template <class F>
void for_subsets(int lo, int hi, int k, Edge& cur, F&& emit) {
  if (k == 0) {
    emit(cur);
    return;
  }
  for (int v = lo; v <= hi - k + 1; ++v) {
    cur.push_back(v);
    for_subsets(v + 1, hi, k - 1, cur, emit);
    cur.pop_back();
  }
}

void add(EdgeSet& s, std::initializer_list<Vertex> e) { s.insert(Edge(e)); }

// prefix ∪ {i, j} for lo <= i < j <= hi
void add_pairs(EdgeSet& s, std::initializer_list<Vertex> prefix, int lo, int hi) {
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 1; j <= hi; ++j) {
      Edge e(prefix);
      e.push_back(i);
      e.push_back(j);
      s.insert(std::move(e));
    }
}

// prefix ∪ {k} for lo <= k <= hi
void add_singles(EdgeSet& s, std::initializer_list<Vertex> prefix, int lo, int hi) {
  for (int k = lo; k <= hi; ++k) {
    Edge e(prefix);
    e.push_back(k);
    s.insert(std::move(e));
  }
}

Hypergraph finish(int r, int n, const EdgeSet& s) { return Hypergraph(r, n, std::vector<Edge>(s.begin(), s.end())); }

}  // namespace

Hypergraph complete(int t, int r) {
  if (r < 1 || t < r) throw InvalidArgument("complete: need t >= r >= 1");
  std::vector<Edge> out;
  Edge cur;
  for_subsets(1, t, r, cur, [&](const Edge& e) { out.push_back(e); });
  return Hypergraph(r, t, std::move(out));
}

Hypergraph matching(int t, int r) {
  if (t < 1 || r < 1) throw InvalidArgument("matching: need t >= 1 and r >= 1");
  std::vector<Edge> out;
  for (int k = 0; k < t; ++k) {
    Edge e;
    for (int v = 1; v <= r; ++v) e.push_back(k * r + v);
    out.push_back(std::move(e));
  }
  return Hypergraph(r, r * t, std::move(out));
}

Hypergraph star(int n, int r) {
  if (r < 2 || n < r) throw InvalidArgument("star: need n >= r >= 2");
  std::vector<Edge> out;
  Edge cur{1};
  for_subsets(2, n, r - 1, cur, [&](const Edge& e) { out.push_back(e); });
  return Hypergraph(r, n, std::move(out));
}

int split_part_size(int n, int r) {
  if (r < 2 || n < r) throw InvalidArgument("split: need n >= r >= 2");
  int best = 1;
  long long best_edges = -1;
  for (int a = 1; a <= n - r + 1; ++a) {
    long long edges = a * binomial(n - a, r - 1);
    if (edges > best_edges) {
      best_edges = edges;
      best = a;
    }
  }
  return best;
}

Hypergraph split(int n, int r, std::optional<int> a) {
  const int size_a = a ? *a : split_part_size(n, r);
  if (r < 2 || n < r) throw InvalidArgument("split: need n >= r >= 2");
  if (size_a < 1 || size_a > n - r + 1) throw InvalidArgument("split: need 1 <= |A| <= n-r+1");
  std::vector<Edge> out;
  for (Vertex apex = 1; apex <= size_a; ++apex) {
    Edge cur{apex};
    for_subsets(size_a + 1, n, r - 1, cur, [&](const Edge& e) { out.push_back(e); });
  }
  return Hypergraph(r, n, std::move(out));
}

Hypergraph extension(const Hypergraph& f, int p) {
  const int r = f.uniformity();
  if (r < 3) throw InvalidArgument("extension: uniformity must be at least 3");
  if (p < f.vertex_count()) throw InvalidArgument("extension: p must be at least |V(F)|");
  Hypergraph core(r, p, f.edges());
  PairCover cover(core);
  std::vector<Edge> out = f.edges();
  int next = p;
  for (Vertex i = 1; i <= p; ++i)
    for (Vertex j = i + 1; j <= p; ++j) {
      if (cover.covered(i, j)) continue;
      Edge e{i, j};
      for (int k = 0; k < r - 2; ++k) e.push_back(++next);
      out.push_back(std::move(e));
    }
  return Hypergraph(r, next, std::move(out));
}

Hypergraph k53minus2() {
  std::vector<Edge> out;
  const Hypergraph k5 = complete(5, 3);
  for (const auto& e : k5.edges())
    if (e != Edge{2, 4, 5} && e != Edge{3, 4, 5}) out.push_back(e);
  return Hypergraph(3, 5, std::move(out));
}

Vertex case_link_vertex(int k) {
  if (k < 1 || k > 15) throw InvalidArgument("case family index must be in 1..15");
  return k == 4 ? 1 : 8;
}

namespace {

/// F_1 = {12ij : 3 ≤ i < j ≤ n} ∪ {ijkl : i ∈ [2], 3 ≤ j < k < l ≤ 7}
EdgeSet case1(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  for (Vertex i : {1, 2}) {
    Edge cur{i};
    for_subsets(3, 7, 3, cur, [&](const Edge& e) { s.insert(e); });
  }
  return s;
}

/// F_2 = {12ij, 134k, 13lm, 14lm, 1567, 234k, 23lm, 24lm :
///        3 ≤ i < j ≤ n, 5 ≤ k ≤ n, 5 ≤ l < m ≤ 7}
EdgeSet case2(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_singles(s, {1, 3, 4}, 5, n);
  add_pairs(s, {1, 3}, 5, 7);
  add_pairs(s, {1, 4}, 5, 7);
  add(s, {1, 5, 6, 7});
  add_singles(s, {2, 3, 4}, 5, n);
  add_pairs(s, {2, 3}, 5, 7);
  add_pairs(s, {2, 4}, 5, 7);
  return s;
}

/// F_3 = {12 i1 j1, 13 i2 j2, 1456, 23 i3 j3, 2456 :
///        3 ≤ i1 < j1 ≤ n, 4 ≤ i2 < j2 ≤ n, 4 ≤ i3 < j3 ≤ n}
EdgeSet case3(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_pairs(s, {1, 3}, 4, n);
  add(s, {1, 4, 5, 6});
  add_pairs(s, {2, 3}, 4, n);
  add(s, {2, 4, 5, 6});
  return s;
}

/// F_4 = {12ij, 134k, 135l, 145l, 234k, 235l, 245l :
///        3 ≤ i < j ≤ n, 5 ≤ k ≤ n, 6 ≤ l ≤ n}
EdgeSet case4(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_singles(s, {1, 3, 4}, 5, n);
  add_singles(s, {1, 3, 5}, 6, n);
  add_singles(s, {1, 4, 5}, 6, n);
  add_singles(s, {2, 3, 4}, 5, n);
  add_singles(s, {2, 3, 5}, 6, n);
  add_singles(s, {2, 4, 5}, 6, n);
  return s;
}

/// F_5 = {12ij, 13kl, 1456, 1457, 1567, 2345, 234m, 235m, 2367, 2456, 2457 :
///        3 ≤ i < j ≤ n, 4 ≤ k < l ≤ n, 6 ≤ m ≤ n}
EdgeSet case5(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_pairs(s, {1, 3}, 4, n);
  add(s, {1, 4, 5, 6});
  add(s, {1, 4, 5, 7});
  add(s, {1, 5, 6, 7});
  add(s, {2, 3, 4, 5});
  add_singles(s, {2, 3, 4}, 6, n);
  add_singles(s, {2, 3, 5}, 6, n);
  add(s, {2, 3, 6, 7});
  add(s, {2, 4, 5, 6});
  add(s, {2, 4, 5, 7});
  return s;
}

/// F_6 = {12ij, 134k, 135l, 1367, 145l, 1467, 1567, 234k, 235l, 2456, 2457 :
///        3 ≤ i < j ≤ n, 5 ≤ k ≤ n, 6 ≤ l ≤ n}
EdgeSet case6(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_singles(s, {1, 3, 4}, 5, n);
  add_singles(s, {1, 3, 5}, 6, n);
  add(s, {1, 3, 6, 7});
  add_singles(s, {1, 4, 5}, 6, n);
  add(s, {1, 4, 6, 7});
  add(s, {1, 5, 6, 7});
  add_singles(s, {2, 3, 4}, 5, n);
  add_singles(s, {2, 3, 5}, 6, n);
  add(s, {2, 4, 5, 6});
  add(s, {2, 4, 5, 7});
  return s;
}

/// F_7 = {12ij, 13kl, 145m, 2345, 234m, 235m, 2456 :
///        3 ≤ i < j ≤ n, 4 ≤ k < l ≤ n, 6 ≤ m ≤ n}
EdgeSet case7(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_pairs(s, {1, 3}, 4, n);
  add_singles(s, {1, 4, 5}, 6, n);
  add(s, {2, 3, 4, 5});
  add_singles(s, {2, 3, 4}, 6, n);
  add_singles(s, {2, 3, 5}, 6, n);
  add(s, {2, 4, 5, 6});
  return s;
}

/// F_8 = {12ij, 13kl, 145m, 1467, 234m, 2345, 2356, 2357, 2456 :
///        3 ≤ i < j ≤ n, 4 ≤ k < l ≤ n, 6 ≤ m ≤ n}
EdgeSet case8(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_pairs(s, {1, 3}, 4, n);
  add_singles(s, {1, 4, 5}, 6, n);
  add(s, {1, 4, 6, 7});
  add_singles(s, {2, 3, 4}, 6, n);
  add(s, {2, 3, 4, 5});
  add(s, {2, 3, 5, 6});
  add(s, {2, 3, 5, 7});
  add(s, {2, 4, 5, 6});
  return s;
}

/// F_9 = {12ij, 13kl, 14st, 234p, 2356, 2456 :
///        3 ≤ i < j ≤ n, 4 ≤ k < l ≤ n, 5 ≤ s < t ≤ n, 5 ≤ p ≤ n}
EdgeSet case9(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_pairs(s, {1, 3}, 4, n);
  add_pairs(s, {1, 4}, 5, n);
  add_singles(s, {2, 3, 4}, 5, n);
  add(s, {2, 3, 5, 6});
  add(s, {2, 4, 5, 6});
  return s;
}

/// F_10 = {12ij, 134k, 135l, 136m, 145l, 146m, 156m, 2345, 2346, 2347, 2356, 2456 :
///         3 ≤ i < j ≤ n, 5 ≤ k ≤ n, 6 ≤ l ≤ n, 7 ≤ m ≤ n}
EdgeSet case10(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_singles(s, {1, 3, 4}, 5, n);
  add_singles(s, {1, 3, 5}, 6, n);
  add_singles(s, {1, 3, 6}, 7, n);
  add_singles(s, {1, 4, 5}, 6, n);
  add_singles(s, {1, 4, 6}, 7, n);
  add_singles(s, {1, 5, 6}, 7, n);
  add(s, {2, 3, 4, 5});
  add(s, {2, 3, 4, 6});
  add(s, {2, 3, 4, 7});
  add(s, {2, 3, 5, 6});
  add(s, {2, 4, 5, 6});
  return s;
}

/// F_11 = {12 i1 j1, 13 i2 j2, 145k, 146l, 156l, 2345, 2346, 2347, 2356 :
///         3 ≤ i1 < j1 ≤ n, 4 ≤ i2 < j2 ≤ n, 6 ≤ k ≤ n, 7 ≤ l ≤ n}
EdgeSet case11(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_pairs(s, {1, 3}, 4, n);
  add_singles(s, {1, 4, 5}, 6, n);
  add_singles(s, {1, 4, 6}, 7, n);
  add_singles(s, {1, 5, 6}, 7, n);
  add(s, {2, 3, 4, 5});
  add(s, {2, 3, 4, 6});
  add(s, {2, 3, 4, 7});
  add(s, {2, 3, 5, 6});
  return s;
}

/// F_12 = {12 i1 j1, 13 i2 j2, 14 i3 j3, 1567, 2345, 2346, 2347 :
///         3 ≤ i1 < j1 ≤ n, 4 ≤ i2 < j2 ≤ n, 5 ≤ i3 < j3 ≤ n}
EdgeSet case12(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_pairs(s, {1, 3}, 4, n);
  add_pairs(s, {1, 4}, 5, n);
  add(s, {1, 5, 6, 7});
  add(s, {2, 3, 4, 5});
  add(s, {2, 3, 4, 6});
  add(s, {2, 3, 4, 7});
  return s;
}

/// F_13 = {12 i1 j1, 13 i2 j2, 14 i3 j3, 156k, 2345, 2346 :
///         3 ≤ i1 < j1 ≤ n, 4 ≤ i2 < j2 ≤ n, 5 ≤ i3 < j3 ≤ n, 7 ≤ k ≤ n}
EdgeSet case13(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_pairs(s, {1, 3}, 4, n);
  add_pairs(s, {1, 4}, 5, n);
  add_singles(s, {1, 5, 6}, 7, n);
  add(s, {2, 3, 4, 5});
  add(s, {2, 3, 4, 6});
  return s;
}

/// F_14 = {12 i1 j1, 13 i2 j2, 14 i3 j3, 15 i4 j4, 2345 :
///         3 ≤ i1 < j1 ≤ n, 4 ≤ i2 < j2 ≤ n, 5 ≤ i3 < j3 ≤ n, 6 ≤ i4 < j4 ≤ n}
EdgeSet case14(int n) {
  EdgeSet s;
  add_pairs(s, {1, 2}, 3, n);
  add_pairs(s, {1, 3}, 4, n);
  add_pairs(s, {1, 4}, 5, n);
  add_pairs(s, {1, 5}, 6, n);
  add(s, {2, 3, 4, 5});
  return s;
}

}  // namespace

Hypergraph case_family(int k, int n) {
  if (k < 1 || k > 15) throw InvalidArgument("case family index must be in 1..15");
  if (n < 8) throw InvalidArgument("case families need n >= 8");
  switch (k) {
    case 1: return finish(4, n, case1(n));
    case 2: return finish(4, n, case2(n));
    case 3: return finish(4, n, case3(n));
    case 4: return finish(4, n, case4(n));
    case 5: return finish(4, n, case5(n));
    case 6: return finish(4, n, case6(n));
    case 7: return finish(4, n, case7(n));
    case 8: return finish(4, n, case8(n));
    case 9: return finish(4, n, case9(n));
    case 10: return finish(4, n, case10(n));
    case 11: return finish(4, n, case11(n));
    case 12: return finish(4, n, case12(n));
    case 13: return finish(4, n, case13(n));
    case 14: return finish(4, n, case14(n));
    default: return star(n, 4);  // F_15 = {1ijk : 2 ≤ i < j < k ≤ n}
  }
}

Hypergraph build_family(const FamilySpec& spec) {
  const std::string& name = spec.name;
  if (name == "complete") return complete(spec.n, spec.r);
  if (name == "matching") return matching(spec.t, spec.r);
  if (name == "star") return star(spec.n, spec.r);
  if (name == "split") return split(spec.n, spec.r, spec.a);
  if (name == "extension") return extension(matching(spec.t, spec.r), spec.p.value_or(spec.t * spec.r));
  if (name == "k53minus2") return k53minus2();
  if (name.rfind("case", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(name.substr(4), &used);
      if (used != name.size() - 4) k = 0;
    } catch (const std::exception&) {
      k = 0;
    }
    if (k < 1 || k > 15) throw InvalidArgument("unknown family '" + name + "'");
    return case_family(k, spec.n);
  }
  throw InvalidArgument("unknown family '" + name + "'");
}

}  // namespace hlag
