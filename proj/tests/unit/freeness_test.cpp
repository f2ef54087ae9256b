#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "hlag/compression.hpp"
#include "hlag/error.hpp"
#include "hlag/families.hpp"
#include "hlag/freeness.hpp"
#include "test_util.hpp"

using namespace hlag;

namespace {

bool disjoint(const Edge& a, const Edge& b) {
  for (Vertex v : a)
    if (std::find(b.begin(), b.end(), v) != b.end()) return false;
  return true;
}

bool has_disjoint_pair(const Hypergraph& g) {
  for (std::size_t a = 0; a < g.edge_count(); ++a)
    for (std::size_t b = a + 1; b < g.edge_count(); ++b)
      if (disjoint(g.edge(a), g.edge(b))) return true;
  return false;
}

void check_witness(const Hypergraph& g, const FreenessReport& rep) {
  ASSERT_FALSE(rep.free);
  for (const auto& e : rep.witness_edges) EXPECT_TRUE(g.has_edge(e));
  for (std::size_t a = 0; a < rep.witness_edges.size(); ++a)
    for (std::size_t b = a + 1; b < rep.witness_edges.size(); ++b)
      EXPECT_TRUE(disjoint(rep.witness_edges[a], rep.witness_edges[b]));
  PairCover pc(g);
  for (std::size_t a = 0; a < rep.core.size(); ++a)
    for (std::size_t b = a + 1; b < rep.core.size(); ++b) EXPECT_TRUE(pc.covered(rep.core[a], rep.core[b]));
}

}  // namespace

TEST(Matching, Examples) {
  for (int n = 4; n <= 10; ++n) EXPECT_EQ(matching_number(star(n, 4)), 1);
  EXPECT_EQ(matching_number(split(8, 4)), 2);
  EXPECT_EQ(matching_number(complete(7, 4)), 1);
  EXPECT_EQ(matching_number(complete(12, 4)), 3);
  EXPECT_EQ(matching_number(Hypergraph(4, 5)), 0);
  std::vector<Edge> w;
  EXPECT_EQ(matching_number(matching(3, 3), &w), 3);
  EXPECT_EQ(w.size(), 3U);
  EXPECT_THROW(is_matching_free(star(5, 4), 0), InvalidArgument);
}

TEST(Matching, SmallGraphsAreFree) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) EXPECT_TRUE(is_matching_free(test::random_graph(rng, 7, 4, 0.6), 2).free);
}

TEST(Matching, PairScanAgrees) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    Hypergraph g = test::random_graph(rng, 8 + k % 3, 4, 0.05 + 0.002 * k);
    EXPECT_EQ(matching_number(g) >= 2, has_disjoint_pair(g));
    auto rep = is_matching_free(g, 2);
    if (!rep.free) check_witness(g, rep);
  }
}

TEST(Core, Examples) {
  const Hypergraph m2 = matching(2, 4);
  auto k8 = is_core_free(complete(8, 4), 8, m2);
  check_witness(complete(8, 4), k8);
  EXPECT_EQ(k8.core, (VertexSet{1, 2, 3, 4, 5, 6, 7, 8}));
  for (int n = 8; n <= 12; ++n) EXPECT_TRUE(is_core_free(star(n, 4), 8, m2).free);
  EXPECT_THROW(is_core_free(complete(8, 4), 7, m2), InvalidArgument);
  EXPECT_THROW(is_core_free(complete(8, 3), 8, m2), InvalidArgument);
}

TEST(Core, GeneralPatternPath) {
  Hypergraph f(3, 4, {{1, 2, 3}, {2, 3, 4}});
  EXPECT_FALSE(is_core_free(complete(5, 3), 5, f).free);
  EXPECT_FALSE(is_core_free(star(6, 3), 5, f).free);
  Hypergraph k4(3, 6, complete(4, 3).edges());
  EXPECT_TRUE(is_core_free(k4, 5, f).free);
  EXPECT_EQ(is_core_free(k4, 4, f).free, hom_search(k4, f, 4).free);
}

TEST(Hom, Examples) {
  const Hypergraph m2 = matching(2, 4);
  auto h = hom_search(complete(8, 4), m2, 8);
  EXPECT_FALSE(h.free);
  EXPECT_FALSE(h.hom_map.empty());
  EXPECT_FALSE(is_hom_free(complete(8, 4), m2, 8).free);
  std::mt19937_64 rng(4);
  for (int k = 0; k < 5; ++k) {
    std::vector<int> sizes(6);
    for (auto& s : sizes) s = 1 + static_cast<int>(rng() % 3);
    EXPECT_TRUE(hom_search(blowup(star(6, 4), sizes), m2, 8).free);
  }
}

TEST(Hom, AgreesWithCoreSearch) {
  std::mt19937_64 rng(8);
  const Hypergraph m2 = matching(2, 4);
  for (int k = 0; k < 300; ++k) {
    const int n = 8 + k % 2;
    Hypergraph g = test::random_graph(rng, n, 4, 0.3 + 0.6 * (k % 7) / 6.0);
    EXPECT_EQ(is_core_free(g, 8, m2).free, hom_search(g, m2, 8).free) << k;
  }
}

TEST(Core, MatchingFreeImpliesCoreFree) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    Hypergraph g = test::random_free_graph(rng, 8 + k % 2, 4, 2, 60);
    EXPECT_TRUE(is_core_free(g, 8, matching(2, 4)).free);
  }
}

TEST(Core, PairCoveringHostWithDisjointEdges) {
  std::mt19937_64 rng(10);
  int tested = 0;
  for (int k = 0; k < 400 && tested < 50; ++k) {
    Hypergraph g = test::random_graph(rng, 8 + k % 3, 4, 0.25);
    if (!covers_pairs(g) || matching_number(g) < 2) continue;
    ++tested;
    EXPECT_FALSE(is_core_free(g, 8, matching(2, 4)).free);
  }
  EXPECT_GT(tested, 10);
}

TEST(Enumerate, Counts) {
  // Left-compressed M_2^4-free 4-graphs on [n], isolated vertices allowed.
  const std::uint64_t expected[] = {2, 6, 32, 352, 3978};
  for (int n = 4; n <= 8; ++n) EXPECT_EQ(count_left_compressed_free(n, 4, 2), expected[n - 4]) << n;
}

TEST(Enumerate, BruteForceBaseline) {
  for (int n = 4; n <= 6; ++n) {
    auto sets = test::all_rsets(n, 4);
    std::uint64_t brute = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sets.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < sets.size(); ++k)
        if (mask >> k & 1U) edges.push_back(sets[k]);
      Hypergraph g(4, n, edges);
      if (is_left_compressed(g) && is_matching_free(g, 2).free) ++brute;
    }
    EXPECT_EQ(count_left_compressed_free(n, 4, 2), brute) << n;
  }
}

TEST(Enumerate, StreamIsValidAndDuplicateFree) {
  std::set<std::vector<Edge>> seen;
  bool saw_k7 = false;
  enumerate_left_compressed_free(7, 4, 2, [&](const Hypergraph& g) {
    EXPECT_TRUE(is_left_compressed(g));
    EXPECT_TRUE(is_matching_free(g, 2).free);
    EXPECT_TRUE(seen.insert(g.edges()).second);
    saw_k7 = saw_k7 || g == complete(7, 4);
  });
  EXPECT_TRUE(saw_k7);
  EXPECT_EQ(seen.size(), 352U);
}

TEST(Enumerate, ParallelMatchesSerial) {
  EnumerationConfig par;
  par.jobs = 4;
  EXPECT_EQ(count_left_compressed_free(8, 4, 2, par), count_left_compressed_free(8, 4, 2));
  EXPECT_EQ(count_left_compressed_free(7, 3, 2, par), count_left_compressed_free(7, 3, 2));
}

TEST(Enumerate, Guard) {
  EXPECT_THROW(count_left_compressed_free(10, 4, 2), UnsupportedSize);
  EXPECT_THROW(count_left_compressed_free(64, 4, 2, EnumerationConfig{1, 9, true}), UnsupportedSize);
  EXPECT_THROW(count_left_compressed_free(5, 4, 0), InvalidArgument);
}

TEST(ExtremalSearch, SevenVertices) {
  ExtremalSearch es = extremal_lambda_search(7, 4, 2);
  EXPECT_NEAR(es.max_lambda, 5.0 / 343, 1e-9);
  EXPECT_EQ(es.witness, complete(7, 4));
  EXPECT_FALSE(es.witness_is_star);
  EXPECT_TRUE(es.dichotomy_holds);
  EXPECT_LT(es.max_non_star_lambda, 0.0169);
  EXPECT_LE(es.max_star_lambda, es.star_bound + 1e-7);
  EXPECT_EQ(es.graphs, 352U);
}

TEST(ExtremalSearch, DeterministicAcrossJobs) {
  EnumerationConfig par;
  par.jobs = 3;
  ExtremalSearch a = extremal_lambda_search(7, 4, 2), b = extremal_lambda_search(7, 4, 2, {}, par);
  EXPECT_EQ(a.max_lambda, b.max_lambda);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.max_non_star_lambda, b.max_non_star_lambda);
}
