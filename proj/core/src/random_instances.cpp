#include "nigpart/random_instances.hpp"

#include <algorithm>
#include <numeric>

namespace nigpart {

namespace {

template <typename T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

}  // namespace

Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomHypergraphSpec& spec) {
  const VertexId nv = uniform<VertexId>(rng, spec.min_vertices, std::max(spec.min_vertices, spec.max_vertices));
  const NetId nn = uniform<NetId>(rng, spec.min_nets, std::max(spec.min_nets, spec.max_nets));
  std::vector<Pin> pins;
  std::vector<VertexId> pool(nv);
  std::iota(pool.begin(), pool.end(), 0);
  for (NetId n = 0; n < nn; ++n) {
    if (nv == 0 || spec.max_net_size <= 0) continue;
    const int size = uniform<int>(rng, 1, std::min<int>(spec.max_net_size, nv));
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int i = 0; i < size; ++i) pins.push_back({n, pool[i]});
  }
  std::vector<Weight> weights(nv), costs(nn);
  for (auto& w : weights) w = uniform<Weight>(rng, 1, std::max<Weight>(1, spec.max_vertex_weight));
  for (auto& c : costs) c = uniform<Weight>(rng, 1, std::max<Weight>(1, spec.max_net_cost));
  return Hypergraph::build(nv, nn, pins, std::move(weights), std::move(costs));
}

CsrGraph random_connected_graph(std::mt19937_64& rng, VertexId n, double p,
                                Weight max_vertex_weight) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(uniform<VertexId>(rng, 0, v - 1), v);
  std::bernoulli_distribution coin(p);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  // Relabel so the tree structure is not tied to vertex order.
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  std::vector<Weight> weights(n);
  for (auto& w : weights) w = uniform<Weight>(rng, 1, std::max<Weight>(1, max_vertex_weight));
  CsrGraph g = CsrGraph::from_edges(n, edges, std::move(weights));
  // from_edges sums duplicate edges; the tests want unit edge weights.
  return CsrGraph(g.offsets(), g.adjacency(), {}, g.vertex_weights());
}

CsrGraph random_graph(std::mt19937_64& rng, VertexId n, double p) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::bernoulli_distribution coin(p);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return CsrGraph::from_edges(n, edges);
}

SparseMatrixPattern random_pattern(std::mt19937_64& rng, std::int32_t rows, std::int32_t cols,
                                   double density) {
  SparseMatrixPattern m;
  m.rows = rows;
  m.cols = cols;
  std::bernoulli_distribution coin(density);
  for (std::int32_t i = 0; i < rows; ++i) {
    for (std::int32_t j = 0; j < cols; ++j) {
      if (coin(rng)) m.entries.emplace_back(i, j);
    }
  }
  return m;
}

}  // namespace nigpart
