#pragma once

#include <cstdint>
#include <vector>

#include "nigpart/graph.hpp"
#include "nigpart/hypergraph.hpp"

namespace nigpart {

// Net intersection graph: one vertex per net, an edge wherever two nets
// share a pin. Vertex costs are the net costs; vertex weights come from a
// WeightScheme.
struct NigGraph {
  CsrGraph graph;
  std::vector<NetId> origin_net;
  // Hypergraph vertices left out of clique generation (degree cap).
  std::vector<VertexId> dropped_vertices;

  VertexId num_vertices() const { return graph.num_vertices(); }
};

enum class WeightScheme {
  // Every net weighs 1: balancing the graph balances internal-net counts.
  kUnit,
  // Each hypergraph vertex splits its weight evenly over its nets, scaled
  // to integers. This is our own approximation of vertex balance.
  kShared,
};

struct NigOptions {
  // Abort when sum over vertices of deg(v)^2 exceeds this.
  std::uint64_t max_clique_work = std::uint64_t{1} << 31;
  // Vertices with more nets than this do not generate cliques; 0 disables.
  std::size_t drop_degree_above = 0;
  int threads = 1;
};

NigGraph build_nig(const Hypergraph& h, const NigOptions& options = {});

// Returns g with vertex weights replaced according to `scheme`.
NigGraph assign_weights(NigGraph g, const Hypergraph& h, WeightScheme scheme,
                        std::int64_t scale = 1024);

}  // namespace nigpart
