#include <gtest/gtest.h>

#include <random>

#include "hlag/error.hpp"
#include "hlag/families.hpp"
#include "hlag/partition.hpp"
#include "test_util.hpp"

using namespace hlag;

namespace {

VertexSet range(int lo, int hi) {
  VertexSet v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

}  // namespace

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_score(split(8, 4), {1, 2}), 0);
  PartitionScore k8 = classify_edges(complete(8, 4), {1, 2});
  EXPECT_EQ(k8.sigma, 30);
  EXPECT_EQ(k8.bad, 30U);
  EXPECT_EQ(k8.very_bad, 0U);
  EXPECT_EQ(k8.worst, 0U);
  EXPECT_EQ(k8.good, 40U);
  EXPECT_EQ(sigma_score(complete(7, 4), {}), 35);
  PartitionScore all = classify_edges(complete(6, 4), range(1, 6));
  EXPECT_EQ(all.worst, 15U);
  EXPECT_EQ(all.sigma, 45);
  PartitionScore three = classify_edges(complete(6, 4), {1, 2, 3});
  EXPECT_EQ(three.very_bad, 3U);
  EXPECT_THROW(classify_edges(complete(6, 4), {7}), InvalidArgument);
}

TEST(Sigma, ClassCountsSum) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    Hypergraph g = test::random_graph(rng, 8, 4, 0.3);
    VertexSet w1;
    for (Vertex v = 1; v <= 8; ++v)
      if (rng() & 1U) w1.push_back(v);
    PartitionScore s = classify_edges(g, w1);
    EXPECT_EQ(s.good + s.bad + s.very_bad + s.worst, g.edge_count());
    EXPECT_EQ(s.sigma, static_cast<std::int64_t>(s.bad + 2 * s.very_bad + 3 * s.worst));
    EXPECT_EQ(s.w1.size() + s.w2.size(), 8U);
  }
}

TEST(Sigma, ZeroIffEdgesHaveOneW1Vertex) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const int a = 1 + static_cast<int>(rng() % 3);
    Hypergraph full = split(9, 4, a);
    Hypergraph g = k % 2 ? test::random_subgraph(rng, full, 0.7) : test::random_graph(rng, 9, 4, 0.05);
    const VertexSet w1 = range(1, a);
    bool fits = true;
    for (const auto& e : g.edges()) {
      int c = 0;
      for (Vertex v : e) c += v <= a;
      fits = fits && c == 1;
    }
    EXPECT_EQ(sigma_score(g, w1) == 0, fits);
  }
}

TEST(Sigma, InvariantUnderRelabelingWithinSides) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    Hypergraph g = test::random_graph(rng, 8, 4, 0.3);
    // W1 = {1,2,3}; permute inside W1 and inside W2.
    std::vector<Vertex> a{1, 2, 3}, b{4, 5, 6, 7, 8};
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::vector<Vertex> perm;
    perm.insert(perm.end(), a.begin(), a.end());
    perm.insert(perm.end(), b.begin(), b.end());
    PartitionScore s = classify_edges(g, {1, 2, 3}), t = classify_edges(relabel(g, perm), {1, 2, 3});
    EXPECT_EQ(s.good, t.good);
    EXPECT_EQ(s.bad, t.bad);
    EXPECT_EQ(s.very_bad, t.very_bad);
    EXPECT_EQ(s.worst, t.worst);
  }
}

TEST(MinSigma, RecoversSplit) {
  PartitionConfig cfg;
  cfg.mode = PartitionConfig::Mode::Exhaustive;
  for (int n = 4; n <= 14; ++n) {
    PartitionScore s = min_sigma_partition(split(n, 4), cfg);
    EXPECT_EQ(s.sigma, 0) << n;
    EXPECT_EQ(s.w1, range(1, split_part_size(n, 4))) << n;
  }
}

TEST(MinSigma, LocalSearchFindsSplit) {
  PartitionConfig cfg;
  cfg.mode = PartitionConfig::Mode::LocalSearch;
  cfg.seed = 5;
  for (int n = 8; n <= 24; n += 4) {
    PartitionScore s = min_sigma_partition(split(n, 4), cfg);
    EXPECT_EQ(s.sigma, 0) << n;
    EXPECT_EQ(s.w1, range(1, split_part_size(n, 4))) << n;
  }
}

TEST(MinSigma, ExhaustiveIsOptimal) {
  std::mt19937_64 rng(4);
  PartitionConfig ex;
  ex.mode = PartitionConfig::Mode::Exhaustive;
  for (int k = 0; k < 20; ++k) {
    Hypergraph g = test::random_graph(rng, 8, 4, 0.2);
    PartitionScore best = min_sigma_partition(g, ex);
    for (std::uint32_t mask = 0; mask < 256; ++mask) {
      VertexSet w1;
      for (int b = 0; b < 8; ++b)
        if (mask >> b & 1U) w1.push_back(b + 1);
      EXPECT_LE(best.sigma, sigma_score(g, w1));
    }
    PartitionConfig ls;
    ls.mode = PartitionConfig::Mode::LocalSearch;
    EXPECT_GE(min_sigma_partition(g, ls).sigma, best.sigma);
  }
}

TEST(MinSigma, PerturbedSplitTwelve) {
  std::mt19937_64 rng(12);
  PartitionConfig cfg;
  cfg.mode = PartitionConfig::Mode::Exhaustive;
  const int a = split_part_size(12, 4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Edge> edges = split(12, 4).edges();
    auto sets = test::all_rsets(12, 4);
    std::shuffle(sets.begin(), sets.end(), rng);
    for (int k = 0; k < 3; ++k) {
      auto it = std::find(edges.begin(), edges.end(), sets[k]);
      if (it != edges.end())
        edges.erase(it);
      else
        edges.push_back(sets[k]);
    }
    PartitionScore s = min_sigma_partition(Hypergraph(4, 12, edges), cfg);
    EXPECT_LE(s.sigma, 3) << trial;
    EXPECT_LE(std::abs(static_cast<int>(s.w1.size()) - a), 1) << trial;
  }
}

TEST(MinSigma, EmptyAndDeterminism) {
  EXPECT_EQ(min_sigma_partition(Hypergraph(4, 6)).sigma, 0);
  PartitionConfig a, b;
  a.mode = b.mode = PartitionConfig::Mode::LocalSearch;
  a.seed = b.seed = 9;
  b.jobs = 4;
  Hypergraph g = complete(10, 4);
  PartitionScore x = min_sigma_partition(g, a), y = min_sigma_partition(g, b);
  EXPECT_EQ(x.w1, y.w1);
  EXPECT_EQ(x.sigma, y.sigma);
}

TEST(MinSigma, Errors) {
  PartitionConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(min_sigma_partition(star(6, 4), cfg), InvalidArgument);
  PartitionConfig ex;
  ex.mode = PartitionConfig::Mode::Exhaustive;
  EXPECT_THROW(min_sigma_partition(Hypergraph(4, 21), ex), UnsupportedSize);
}
