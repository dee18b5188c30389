#pragma once

#include <span>
#include <utility>
#include <vector>

#include "nigpart/types.hpp"

namespace nigpart {

// Undirected weighted graph in CSR form. Neighbor lists are sorted and
// duplicate free; every edge is stored in both directions.
//
// Each vertex carries two numbers: a balance weight and a separator cost.
// The separator objective sums costs, the balance constraint sums weights.
// When no costs are given they equal the weights.
class CsrGraph {
 public:
  CsrGraph() = default;
  CsrGraph(std::vector<std::size_t> offsets, std::vector<VertexId> adjacency,
           std::vector<Weight> edge_weights, std::vector<Weight> vertex_weights,
           std::vector<Weight> vertex_costs = {});

  // Builds from an undirected edge list. Duplicates and reversed copies are
  // merged (their weights summed); self loops are dropped.
  static CsrGraph from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges,
                             std::vector<Weight> vertex_weights = {},
                             std::vector<Weight> vertex_costs = {});

  VertexId num_vertices() const { return static_cast<VertexId>(offsets_.size() - 1); }
  // Undirected edge count.
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::span<const Weight> edge_weights(VertexId v) const {
    return {edge_weights_.data() + offsets_[v], edge_weights_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  Weight weight(VertexId v) const { return vertex_weights_[v]; }
  Weight cost(VertexId v) const { return vertex_costs_[v]; }
  const std::vector<Weight>& vertex_weights() const { return vertex_weights_; }
  const std::vector<Weight>& vertex_costs() const { return vertex_costs_; }
  Weight total_weight() const { return total_weight_; }
  Weight max_weight() const { return max_weight_; }

  const std::vector<std::size_t>& offsets() const { return offsets_; }
  const std::vector<VertexId>& adjacency() const { return adjacency_; }

  // Symmetry, sortedness, no self loops, positive edge weights,
  // nonnegative vertex weights. Throws ConsistencyError.
  void check_consistency() const;

  // Subgraph induced by `vertices` (sorted, distinct); local id i maps to
  // vertices[i].
  CsrGraph induced(std::span<const VertexId> vertices) const;

  friend bool operator==(const CsrGraph&, const CsrGraph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<Weight> edge_weights_;
  std::vector<Weight> vertex_weights_;
  std::vector<Weight> vertex_costs_;
  Weight total_weight_ = 0;
  Weight max_weight_ = 0;
};

}  // namespace nigpart
