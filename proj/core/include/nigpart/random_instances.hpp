#pragma once

#include <random>

#include "nigpart/graph.hpp"
#include "nigpart/hypergraph.hpp"
#include "nigpart/io.hpp"

namespace nigpart {

struct RandomHypergraphSpec {
  VertexId min_vertices = 1;
  VertexId max_vertices = 16;
  NetId min_nets = 1;
  NetId max_nets = 16;
  int max_net_size = 5;
  Weight max_vertex_weight = 1;  // 1 gives unit weights
  Weight max_net_cost = 1;
};

// Sizes are drawn uniformly from the given ranges; nets have 1..max_net_size
// distinct pins (empty nets appear only when max_net_size is 0).
Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomHypergraphSpec& spec);

// Random spanning tree plus independent extra edges with probability p.
CsrGraph random_connected_graph(std::mt19937_64& rng, VertexId n, double extra_edge_probability,
                                Weight max_vertex_weight = 1);

// Erdos-Renyi G(n, p), possibly disconnected.
CsrGraph random_graph(std::mt19937_64& rng, VertexId n, double edge_probability);

SparseMatrixPattern random_pattern(std::mt19937_64& rng, std::int32_t rows, std::int32_t cols,
                                   double density);

}  // namespace nigpart
