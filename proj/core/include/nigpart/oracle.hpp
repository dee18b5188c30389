#pragma once

#include <utility>
#include <vector>

#include "nigpart/graph.hpp"
#include "nigpart/hypergraph.hpp"
#include "nigpart/separator.hpp"

namespace nigpart {

// Exhaustive reference solvers for tiny instances. They share no code
// with the partitioning engine beyond the data structures.
struct OracleResult {
  bool feasible = false;
  Weight best_cutnet = 0;
  Weight best_connectivity = 0;
  Weight best_sep_weight = 0;
  std::vector<PartId> cutnet_witness;
  std::vector<PartId> connectivity_witness;
  std::vector<Side> separator_witness;
};

inline constexpr VertexId kMaxOracleBipartitionVertices = 16;
inline constexpr VertexId kMaxOracleSeparatorVertices = 12;
inline constexpr NetId kMaxOracleNigNets = 64;

// All 2^(n-1) bipartitions with vertex 0 in part 0 whose heavier part is
// at most (1+epsilon) times the average. Throws TooLarge for n > 16.
OracleResult optimal_bipartition(const Hypergraph& h, double epsilon);

// All 3^n labelings with no A-B edge and A/B balanced against
// target_ratio (with one heaviest-vertex slack, as in the engine);
// minimizes separator cost. Throws TooLarge for n > 12.
OracleResult optimal_separator(const CsrGraph& g, double epsilon, double target_ratio = 0.5);

// All-pairs pin-set intersection; pairs (i, j) with i < j, sorted.
std::vector<std::pair<NetId, NetId>> pairwise_nig(const Hypergraph& h);

}  // namespace nigpart
