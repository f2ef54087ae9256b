#pragma once

#include <cstdint>
#include <vector>

#include "hlag/hypergraph.hpp"

namespace hlag {

/// Edge classes of a bipartition (W1, W2) by c = |e ∩ W1|: good c = 1; bad
/// c = 2 or c = 0; very bad 3 <= c < r; worst c = r.
struct PartitionScore {
  VertexSet w1, w2;
  std::size_t good = 0, bad = 0, very_bad = 0, worst = 0;
  std::int64_t sigma = 0;  ///< bad + 2 very_bad + 3 worst
};

PartitionScore classify_edges(const Hypergraph& g, const VertexSet& w1);
std::int64_t sigma_score(const Hypergraph& g, const VertexSet& w1);

struct PartitionConfig {
  enum class Mode { Auto, Exhaustive, LocalSearch };
  Mode mode = Mode::Auto;       ///< Auto: exhaustive up to `exhaustive_limit`
  int exhaustive_limit = 20;
  int restarts = 32;
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Minimum Σ' bipartition. Exhaustive mode walks all 2^n subsets in Gray-code
/// order; local search runs steepest-descent single-vertex moves from seeded
/// random starts. Ties prefer smaller |W1|, then the lexicographically
/// smaller W1.
PartitionScore min_sigma_partition(const Hypergraph& g, const PartitionConfig& cfg = {});

}  // namespace hlag
