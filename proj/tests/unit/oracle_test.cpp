#include <gtest/gtest.h>

#include <random>

#include "nigpart/oracle.hpp"
#include "nigpart/random_instances.hpp"

namespace nigpart {
namespace {

using Edges = std::vector<std::pair<VertexId, VertexId>>;

TEST(OptimalBipartition, H0) {
  const std::vector<Pin> pins = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}};
  OracleResult r = optimal_bipartition(Hypergraph::build(4, 3, pins), 0.1);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.best_cutnet, 1);
  EXPECT_EQ(r.best_connectivity, 1);
  EXPECT_EQ(r.cutnet_witness, (std::vector<PartId>{0, 0, 1, 1}));
}

TEST(OptimalBipartition, DisjointHalves) {
  const std::vector<Pin> pins = {{0, 0}, {0, 1}, {1, 2}, {1, 3}};
  OracleResult r = optimal_bipartition(Hypergraph::build(4, 2, pins), 0.0);
  EXPECT_EQ(r.best_cutnet, 0);
  EXPECT_EQ(r.best_connectivity, 0);
}

TEST(OptimalBipartition, OneNetOverEverything) {
  std::vector<Pin> pins;
  for (VertexId v = 0; v < 6; ++v) pins.push_back({0, v});
  OracleResult r = optimal_bipartition(Hypergraph::build(6, 1, pins), 0.1);
  EXPECT_EQ(r.best_cutnet, 1);
}

TEST(OptimalBipartition, InfeasibleBalance) {
  const std::vector<Pin> pins = {{0, 0}, {0, 1}};
  OracleResult r = optimal_bipartition(Hypergraph::build(2, 1, pins, {10, 1}), 0.1);
  EXPECT_FALSE(r.feasible);
}

TEST(OptimalBipartition, TooLarge) {
  EXPECT_THROW(optimal_bipartition(Hypergraph::build(17, 0, {}), 0.1), TooLarge);
}

TEST(OptimalSeparator, Examples) {
  const Edges p3 = {{0, 1}, {1, 2}};
  EXPECT_EQ(optimal_separator(CsrGraph::from_edges(3, p3), 0.1).best_sep_weight, 1);
  Edges k4;
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = u + 1; v < 4; ++v) k4.emplace_back(u, v);
  }
  EXPECT_EQ(optimal_separator(CsrGraph::from_edges(4, k4), 0.1).best_sep_weight, 2);
  EXPECT_EQ(optimal_separator(CsrGraph::from_edges(4, Edges{}), 0.1).best_sep_weight, 0);
}

TEST(OptimalSeparator, WitnessIsValid) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 30; ++i) {
    CsrGraph g = random_connected_graph(rng, 3 + i % 8, 0.3, 3);
    OracleResult r = optimal_separator(g, 0.2);
    ASSERT_TRUE(r.feasible);
    Separator s = Separator::from_labels(g, r.separator_witness);
    EXPECT_TRUE(s.separates(g));
    EXPECT_EQ(s.cost_s, r.best_sep_weight);
  }
}

TEST(OptimalSeparator, TooLarge) {
  EXPECT_THROW(optimal_separator(CsrGraph::from_edges(13, Edges{}), 0.1), TooLarge);
}

TEST(PairwiseNig, Examples) {
  const std::vector<Pin> h0 = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}};
  EXPECT_EQ(pairwise_nig(Hypergraph::build(4, 3, h0)),
            (std::vector<std::pair<NetId, NetId>>{{0, 1}, {1, 2}}));
  const std::vector<Pin> disjoint = {{0, 0}, {1, 1}, {2, 2}};
  EXPECT_TRUE(pairwise_nig(Hypergraph::build(3, 3, disjoint)).empty());
}

}  // namespace
}  // namespace nigpart
