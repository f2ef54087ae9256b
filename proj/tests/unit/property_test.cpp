#include <gtest/gtest.h>

#include <random>

#include "hlag/compression.hpp"
#include "hlag/freeness.hpp"
#include "properties.hpp"

using namespace hlag;

namespace {

void expect_clean(const test::PropertyOutcome& o) {
  EXPECT_GE(o.instances, 200) << o.name;
  EXPECT_EQ(o.violations, 0) << o.name << " worst deviation " << o.worst;
}

}  // namespace

TEST(Properties, EulerIdentity) { expect_clean(test::euler_identity(101)); }
TEST(Properties, SubgraphMonotonicity) { expect_clean(test::subgraph_monotonicity(102)); }
TEST(Properties, CompressionEdgeCount) { expect_clean(test::compression_edge_count(103)); }
TEST(Properties, CompressionKeepsFreeness) { expect_clean(test::compression_keeps_freeness(104)); }
TEST(Properties, CompressionPointwise) { expect_clean(test::compression_pointwise(105)); }
TEST(Properties, BlowupInvariance) { expect_clean(test::blowup_invariance(106)); }
TEST(Properties, CoreHomAgreement) { expect_clean(test::core_hom_agreement(107)); }

TEST(Properties, DenseAndCompressDoesNotLowerLambda) {
  std::mt19937_64 rng(108);
  int instances = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = 6 + k % 4;
    Hypergraph g = test::random_free_graph(rng, n, 4, 2, 25);
    DenseCompressed dc = dense_and_compress(g, 2);
    EXPECT_GE(dc.result.value, maximize(g).value - 1e-7) << k;
    EXPECT_TRUE(is_left_compressed(dc.graph)) << k;
    ++instances;
  }
  EXPECT_EQ(instances, 200);
}
