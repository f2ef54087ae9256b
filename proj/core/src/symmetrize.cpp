#include "hlag/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "hlag/error.hpp"
#include "hlag/families.hpp"
#include "hlag/freeness.hpp"

namespace hlag {

PointedHypergraph PointedHypergraph::singletons(const Hypergraph& g) {
  PointedHypergraph pg;
  pg.graph = g;
  pg.alive = VertexMask(g.vertex_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    pg.alive.set(v);
    pg.parts[v] = {v};
  }
  return pg;
}

VertexSet PointedHypergraph::vertices() const {
  VertexSet out;
  alive.for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet PointedHypergraph::representatives() const {
  VertexSet out;
  for (const auto& [u, members] : parts) out.push_back(u);
  return out;
}

std::vector<std::size_t> PointedHypergraph::degrees() const { return hlag::degrees(graph); }

void SymConfig::validate() const {
  if (!(alpha > 0) || !(alpha < 9.0 / 128.0)) throw InvalidArgument("alpha must lie in (0, 9/128)");
}

double cleaning_threshold(double alpha, int n) {
  const double m = n;
  return (9.0 / 128.0 - alpha) * m * m * m;
}

namespace {

Hypergraph without_vertex(const Hypergraph& g, Vertex v) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (!std::binary_search(e.begin(), e.end(), v)) edges.push_back(e);
  return Hypergraph(g.uniformity(), g.vertex_count(), std::move(edges));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

PointedHypergraph clean(const PointedHypergraph& pg, const SymConfig& cfg, std::vector<CleanRecord>* log) {
  cfg.validate();
  PointedHypergraph cur = pg;
  const int start_n = cur.alive_count();
  while (true) {
    const int n = cur.alive_count();
    if (n == 0) break;
    const double threshold = cleaning_threshold(cfg.alpha, cfg.fixed_n ? start_n : n);
    auto deg = hlag::degrees(cur.graph);
    Vertex pick = 0;
    for (const auto& [u, members] : cur.parts)
      if (static_cast<double>(deg[u]) < threshold && (!pick || deg[u] < deg[pick])) pick = u;
    if (!pick) break;
    auto& members = cur.parts[pick];
    const Vertex victim = members.back();
    if (log) log->push_back({pick, victim, deg[pick], threshold});
    members.pop_back();
    if (members.empty()) cur.parts.erase(pick);
    cur.alive.reset(victim);
    cur.graph = without_vertex(cur.graph, victim);
  }
  return cur;
}

PointedHypergraph merge(const PointedHypergraph& pg, MergeRecord* record) {
  if (record) *record = {};
  PairCover cover(pg.graph);
  const VertexSet reps = pg.representatives();
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      if (cover.covered(reps[a], reps[b])) continue;
      auto deg = hlag::degrees(pg.graph);
      Vertex u = reps[a], v = reps[b];
      if (deg[v] > deg[u]) std::swap(u, v);
      PointedHypergraph out = pg;
      auto& target = out.parts[u];
      const auto& source = pg.parts.at(v);
      target.insert(target.end(), source.begin(), source.end());
      out.parts.erase(v);
      // Blow the representative graph back up over the new parts.
      VertexMask rep_mask(pg.graph.vertex_count());
      for (const auto& [w, members] : out.parts) rep_mask.set(w);
      std::vector<Edge> edges;
      Edge cur;
      for (const auto& f : pg.graph.edges()) {
        if (!std::all_of(f.begin(), f.end(), [&](Vertex w) { return rep_mask.test(w); })) continue;
        std::vector<const std::vector<Vertex>*> classes;
        for (Vertex w : f) classes.push_back(&out.parts.at(w));
        std::vector<std::size_t> idx(classes.size(), 0);
        while (true) {
          cur.clear();
          for (std::size_t k = 0; k < classes.size(); ++k) cur.push_back((*classes[k])[idx[k]]);
          std::sort(cur.begin(), cur.end());
          edges.push_back(cur);
          std::size_t k = classes.size();
          while (k > 0 && ++idx[k - 1] == classes[k - 1]->size()) idx[--k] = 0;
          if (k == 0) break;
        }
      }
      out.graph = Hypergraph(pg.graph.uniformity(), pg.graph.vertex_count(), std::move(edges));
      if (record) *record = {true, u, v};
      return out;
    }
  return pg;
}

SymTrace symmetrize(const Hypergraph& g, const SymConfig& cfg) {
  cfg.validate();
  if (g.uniformity() != 4) throw InvalidArgument("symmetrization is defined for 4-graphs");
  if (cfg.check_free) {
    auto rep = is_core_free(g, 8, matching(2, 4));
    if (!rep.free) throw PatternFound("input is not K_8^{M_2^4}-free", rep);
  }
  SymTrace trace;
  trace.config = cfg;
  trace.input = g;
  auto record = [&](const std::string& kind, const std::string& detail, const PointedHypergraph& s) {
    trace.steps.push_back({static_cast<int>(trace.steps.size()), kind, detail, s.alive_count(), s.graph.edge_count()});
  };
  PointedHypergraph h = PointedHypergraph::singletons(g);
  trace.states.push_back({"H0", 0, false, h});
  record("init", "n=" + std::to_string(g.vertex_count()) + " alpha=" + fmt(cfg.alpha), h);
  for (int i = 1;; ++i) {
    std::vector<CleanRecord> log;
    PointedHypergraph cleaned = clean(h, cfg, &log);
    {
      // Replay deletions so every clean record carries the sizes after it.
      PointedHypergraph replay = h;
      for (const auto& c : log) {
        replay.alive.reset(c.deleted);
        replay.graph = without_vertex(replay.graph, c.deleted);
        record("clean",
               "delete " + std::to_string(c.deleted) + " from part " + std::to_string(c.representative) +
                   " (degree " + std::to_string(c.degree) + " < " + fmt(c.threshold) + ")",
               replay);
      }
    }
    trace.cleanings.push_back(log);
    trace.states.push_back({"H'" + std::to_string(i), i, true, cleaned});
    MergeRecord m;
    PointedHypergraph merged = merge(cleaned, &m);
    trace.merges.push_back(m);
    trace.states.push_back({"H" + std::to_string(i), i, false, merged});
    if (!m.merged) {
      record("stop", "representatives covered after " + std::to_string(i) + " rounds", merged);
      break;
    }
    record("merge", "merge part " + std::to_string(m.from) + " into " + std::to_string(m.into), merged);
    h = std::move(merged);
  }
  return trace;
}

namespace {

std::vector<Vertex> owner_map(const PointedHypergraph& s) {
  std::vector<Vertex> owner(static_cast<std::size_t>(s.graph.vertex_count()) + 1, 0);
  for (const auto& [u, members] : s.parts)
    for (Vertex v : members) owner[v] = u;
  return owner;
}

std::vector<Edge> edges_within(const Hypergraph& g, const VertexMask& m) {
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return m.test(v); })) out.push_back(e);
  return out;
}

}  // namespace

AuditReport audit(const SymTrace& trace) {
  AuditReport rep;
  auto flag = [&](int step, const std::string& prop, const std::string& detail) {
    rep.violations.push_back({step, prop, detail});
  };
  const Hypergraph& f = trace.input;
  std::vector<int> h_index;  // state index of H_0, H_1, ...
  for (std::size_t k = 0; k < trace.states.size(); ++k)
    if (!trace.states[k].cleaned) h_index.push_back(static_cast<int>(k));

  std::vector<std::vector<Vertex>> owners;
  for (int k : h_index) owners.push_back(owner_map(trace.states[k].state));

  for (std::size_t i = 0; i < h_index.size(); ++i) {
    const int si = h_index[i];
    const auto& s = trace.states[si].state;
    const VertexSet reps = s.representatives();
    VertexMask rep_mask = mask_of(reps, s.graph.vertex_count());

    // The parts partition V_i with each representative in its own part.
    {
      VertexMask seen(s.graph.vertex_count());
      bool ok = true;
      for (const auto& [u, members] : s.parts) {
        if (members.empty() || members.front() != u) ok = false;
        for (Vertex v : members) {
          if (seen.test(v) || !s.alive.test(v)) ok = false;
          seen.set(v);
        }
      }
      if (!ok || !(seen == s.alive)) flag(si, "partition", "parts do not partition V with representatives first");
    }
    for (const auto& e : s.graph.edges())
      for (Vertex v : e)
        if (!s.alive.test(v)) flag(si, "partition", "edge uses a deleted vertex");

    // (2) H_i[U_i] = F[U_i]
    if (edges_within(s.graph, rep_mask) != edges_within(f, rep_mask))
      flag(si, "(2) H_i[U_i] = F[U_i]", "edge sets differ on the representatives");

    // (4) clones inside parts
    for (const auto& [u, members] : s.parts)
      for (std::size_t k = 1; k < members.size(); ++k)
        if (!equivalent(s.graph, members.front(), members[k]))
          flag(si, "(4) v ~ w inside parts",
               "vertices " + std::to_string(members.front()) + " and " + std::to_string(members[k]) + " in part " +
                   std::to_string(u));

    // (5) monotone chains
    if (i > 0) {
      const auto& prev = trace.states[h_index[i - 1]].state;
      if (!s.alive.subset_of(prev.alive)) flag(si, "(5) V_i in V_{i-1}", "vertex set grew");
      VertexMask prev_reps = mask_of(prev.representatives(), prev.graph.vertex_count());
      if (!rep_mask.subset_of(prev_reps)) flag(si, "(5) U_i in U_{i-1}", "representative set grew");
    }

    // H_i is the blowup of H_i[U_i] over its parts.
    {
      const auto& own = owners[i];
      std::size_t expected = 0;
      for (const auto& e : edges_within(s.graph, rep_mask)) {
        std::size_t prod = 1;
        for (Vertex u : e) prod *= s.parts.at(u).size();
        expected += prod;
      }
      bool ok = expected == s.graph.edge_count();
      Edge img;
      for (const auto& e : s.graph.edges()) {
        if (!ok) break;
        img.clear();
        for (Vertex v : e) img.push_back(own[v]);
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end() || !s.graph.has_edge(img)) ok = false;
      }
      if (!ok) flag(si, "blowup", "graph is not the blowup of its representative graph");
    }

    for (std::size_t j = 0; j <= i; ++j) {
      const auto& sj = trace.states[h_index[j]].state;
      const auto& own = owners[j];
      // (1) U_j ∩ V_i is a transversal of {P_{j,v} ∩ V_i}.
      bool ok = true;
      s.alive.for_each([&](Vertex v) {
        if (!sj.alive.test(v) || own[v] == 0 || !s.alive.test(own[v])) ok = false;
      });
      if (!ok)
        flag(si, "(1) transversal", "U_" + std::to_string(j) + " ∩ V_" + std::to_string(i) + " is not a transversal");
      // (3) |e ∩ P_{j,v}| <= 1
      bool meets_twice = false;
      Edge img;
      for (const auto& e : s.graph.edges()) {
        img.clear();
        for (Vertex v : e) img.push_back(own[v]);
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
          meets_twice = true;
          break;
        }
      }
      if (meets_twice)
        flag(si, "(3) |e ∩ P| <= 1", "an edge of H_" + std::to_string(i) + " meets a part of P_" + std::to_string(j) +
                                         " twice");
    }
  }

  const int n0 = f.vertex_count();
  for (std::size_t k = 0; k < trace.states.size(); ++k) {
    const auto& st = trace.states[k];
    if (!st.cleaned) continue;
    const auto& s = st.state;
    // Cleaning stop condition.
    const int n_used = trace.config.fixed_n ? trace.states[k - 1].state.alive_count() : s.alive_count();
    if (s.alive_count() > 0) {
      const double threshold = cleaning_threshold(trace.config.alpha, n_used);
      auto deg = hlag::degrees(s.graph);
      s.alive.for_each([&](Vertex v) {
        if (static_cast<double>(deg[v]) < threshold)
          flag(static_cast<int>(k), "cleaning bound",
               "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]) + " < " + fmt(threshold));
      });
    }
    // e(H_i) >= e(H'_i)
    if (k + 1 < trace.states.size() && trace.states[k + 1].state.graph.edge_count() < s.graph.edge_count())
      flag(static_cast<int>(k + 1), "e(H_i) >= e(H'_i)", "merging lost edges");
  }

  // A merged part survives in F* only if the part it joined does.
  const auto& final_state = trace.result();
  int cleaned_seen = 0;
  for (std::size_t k = 0; k < trace.states.size(); ++k) {
    if (!trace.states[k].cleaned) continue;
    const auto& m = trace.merges[static_cast<std::size_t>(cleaned_seen++)];
    if (!m.merged) continue;
    const auto& parts = trace.states[k].state.parts;
    auto survives = [&](Vertex rep) {
      const auto& members = parts.at(rep);
      return std::any_of(members.begin(), members.end(), [&](Vertex v) { return final_state.alive.test(v); });
    };
    if (!survives(m.into) && survives(m.from))
      flag(static_cast<int>(k + 1), "deletion order",
           "part of " + std::to_string(m.from) + " survives while the part it joined does not");
  }

  rep.large_fixed_point = final_state.alive_count() >= (1.0 - trace.config.alpha) * n0;
  auto reps = final_state.representatives();
  rep.star_on_representatives = is_star_subgraph(induced(final_state.graph, reps).graph);
  return rep;
}

std::string trace_to_json(const SymTrace& trace) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : trace.steps) {
    nlohmann::ordered_json o;
    o["index"] = s.index;
    o["kind"] = s.kind;
    o["detail"] = s.detail;
    o["vertex_count"] = s.vertex_count;
    o["edge_count"] = s.edge_count;
    arr.push_back(std::move(o));
  }
  return arr.dump(2);
}

}  // namespace hlag
