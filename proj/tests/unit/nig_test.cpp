#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "nigpart/io.hpp"
#include "nigpart/nig.hpp"
#include "nigpart/oracle.hpp"
#include "nigpart/random_instances.hpp"

namespace nigpart {
namespace {

using EdgeList = std::vector<std::pair<NetId, NetId>>;

Hypergraph h0(std::vector<Weight> weights = {}) {
  const std::vector<Pin> pins = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}};
  return Hypergraph::build(4, 3, pins, std::move(weights));
}

EdgeList edges_of(const NigGraph& g) {
  EdgeList out;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.graph.neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// Off-diagonal A^T A by explicit triple loop.
EdgeList ata(const SparseMatrixPattern& m) {
  std::vector<std::vector<bool>> dense(m.rows, std::vector<bool>(m.cols, false));
  for (auto [r, c] : m.entries) dense[r][c] = true;
  EdgeList out;
  for (NetId i = 0; i < m.cols; ++i) {
    for (NetId j = i + 1; j < m.cols; ++j) {
      for (int r = 0; r < m.rows; ++r) {
        if (dense[r][i] && dense[r][j]) {
          out.emplace_back(i, j);
          break;
        }
      }
    }
  }
  return out;
}

TEST(BuildNig, H0IsAPath) {
  NigGraph g = build_nig(h0());
  EXPECT_EQ(edges_of(g), (EdgeList{{0, 1}, {1, 2}}));
  EXPECT_EQ(g.origin_net, (std::vector<NetId>{0, 1, 2}));
  g.graph.check_consistency();
}

TEST(BuildNig, StarGivesTriangle) {
  const std::vector<Pin> pins = {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 3}};
  NigGraph g = build_nig(Hypergraph::build(4, 3, pins));
  EXPECT_EQ(edges_of(g), (EdgeList{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(BuildNig, ColumnNetExampleMatchesAtA) {
  SparseMatrixPattern m;
  m.rows = 2;
  m.cols = 3;
  m.entries = {{0, 0}, {0, 1}, {1, 1}, {1, 2}};
  EXPECT_EQ(edges_of(build_nig(column_net_model(m))), (EdgeList{{0, 1}, {1, 2}}));
}

TEST(BuildNig, EdgesAreUnitWeight) {
  const std::vector<Pin> pins = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}};
  NigGraph g = build_nig(Hypergraph::build(3, 2, pins));
  ASSERT_EQ(g.graph.degree(0), 1u);
  EXPECT_EQ(g.graph.edge_weights(0)[0], 1);
}

TEST(BuildNig, VertexCostsAreNetCosts) {
  const std::vector<Pin> pins = {{0, 0}, {0, 1}, {1, 1}};
  NigGraph g = build_nig(Hypergraph::build(2, 2, pins, {}, {4, 9}));
  EXPECT_EQ(g.graph.cost(0), 4);
  EXPECT_EQ(g.graph.cost(1), 9);
}

TEST(BuildNig, MatchesPairwiseOracle) {
  std::mt19937_64 rng(21);
  RandomHypergraphSpec spec;
  spec.max_vertices = 64;
  spec.max_nets = 64;
  spec.max_net_size = 10;
  for (int i = 0; i < 300; ++i) {
    Hypergraph h = random_hypergraph(rng, spec);
    EXPECT_EQ(edges_of(build_nig(h)), pairwise_nig(h));
  }
}

TEST(BuildNig, ColumnNetMatchesAtAPattern) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    SparseMatrixPattern m = random_pattern(rng, 1 + i % 30, 1 + i % 25, 0.15);
    EXPECT_EQ(edges_of(build_nig(column_net_model(m))), ata(m));
  }
}

TEST(BuildNig, IndependentOfPinOrder) {
  std::mt19937_64 rng(23);
  RandomHypergraphSpec spec;
  spec.max_net_size = 6;
  for (int i = 0; i < 100; ++i) {
    Hypergraph h = random_hypergraph(rng, spec);
    std::vector<Pin> pins;
    for (NetId n = 0; n < h.num_nets(); ++n) {
      for (VertexId v : h.pins(n)) pins.push_back({n, v});
    }
    std::shuffle(pins.begin(), pins.end(), rng);
    Hypergraph shuffled = Hypergraph::build(h.num_vertices(), h.num_nets(), pins,
                                            h.vertex_weights(), h.net_costs());
    NigGraph a = build_nig(h);
    NigGraph b = build_nig(shuffled);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(a.origin_net, b.origin_net);
  }
}

TEST(BuildNig, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(24);
  SparseMatrixPattern m = random_pattern(rng, 400, 300, 0.02);
  Hypergraph h = column_net_model(m);
  NigGraph serial = build_nig(h);
  for (int threads : {2, 4, 7}) {
    NigOptions opts;
    opts.threads = threads;
    EXPECT_EQ(build_nig(h, opts).graph, serial.graph);
  }
}

TEST(BuildNig, CliqueWorkCap) {
  std::vector<Pin> pins;
  for (NetId n = 0; n < 50; ++n) pins.push_back({n, 0});
  Hypergraph h = Hypergraph::build(1, 50, pins);
  NigOptions opts;
  opts.max_clique_work = 100;
  EXPECT_THROW(build_nig(h, opts), CliqueBlowup);
  opts.max_clique_work = 2500;
  EXPECT_NO_THROW(build_nig(h, opts));
}

TEST(BuildNig, DropDegreeSkipsCliques) {
  const std::vector<Pin> pins = {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}};
  Hypergraph h = Hypergraph::build(2, 3, pins);
  NigOptions opts;
  opts.drop_degree_above = 2;
  NigGraph g = build_nig(h, opts);
  EXPECT_EQ(edges_of(g), (EdgeList{{0, 1}}));
  EXPECT_EQ(g.dropped_vertices, (std::vector<VertexId>{0}));
}

TEST(AssignWeights, Unit) {
  NigGraph g = assign_weights(build_nig(h0({5, 1, 7, 2})), h0({5, 1, 7, 2}), WeightScheme::kUnit);
  EXPECT_EQ(g.graph.vertex_weights(), (std::vector<Weight>{1, 1, 1}));
  EXPECT_EQ(g.graph.vertex_costs(), (std::vector<Weight>{1, 1, 1}));
}

TEST(AssignWeights, SharedHandExample) {
  Hypergraph h = h0();
  NigGraph g = assign_weights(build_nig(h), h, WeightScheme::kShared, 2);
  EXPECT_EQ(g.graph.vertex_weights(), (std::vector<Weight>{3, 2, 3}));
  EXPECT_EQ(g.graph.vertex_costs(), (std::vector<Weight>{1, 1, 1}));
}

TEST(AssignWeights, SharedConservesWeightUpToRounding) {
  std::mt19937_64 rng(25);
  RandomHypergraphSpec spec;
  spec.max_vertex_weight = 20;
  spec.max_net_size = 6;
  for (int i = 0; i < 300; ++i) {
    Hypergraph h = random_hypergraph(rng, spec);
    const std::int64_t scale = 1 + static_cast<std::int64_t>(rng() % 1024);
    NigGraph g = assign_weights(build_nig(h), h, WeightScheme::kShared, scale);
    Weight covered = 0;
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      if (h.degree(v) > 0) covered += scale * h.vertex_weight(v);
    }
    const Weight nets = h.num_nets();
    EXPECT_GE(g.graph.total_weight(), covered - nets);
    EXPECT_LE(g.graph.total_weight(), covered + nets);
  }
}

TEST(AssignWeights, Errors) {
  Hypergraph h = h0();
  NigGraph g = build_nig(h);
  const std::vector<Pin> pins = {{0, 0}};
  Hypergraph other = Hypergraph::build(1, 1, pins);
  EXPECT_THROW(assign_weights(g, other, WeightScheme::kShared), ModelMismatch);
  EXPECT_THROW(assign_weights(g, h, WeightScheme::kShared, 0), ConfigError);
}

}  // namespace
}  // namespace nigpart
