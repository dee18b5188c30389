#include "nigpart/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nigpart {

CsrGraph::CsrGraph(std::vector<std::size_t> offsets, std::vector<VertexId> adjacency,
                   std::vector<Weight> edge_weights, std::vector<Weight> vertex_weights,
                   std::vector<Weight> vertex_costs)
    : offsets_(std::move(offsets)),
      adjacency_(std::move(adjacency)),
      edge_weights_(std::move(edge_weights)),
      vertex_weights_(std::move(vertex_weights)),
      vertex_costs_(std::move(vertex_costs)) {
  if (offsets_.empty()) offsets_.push_back(0);
  const auto n = static_cast<std::size_t>(num_vertices());
  if (edge_weights_.empty()) edge_weights_.assign(adjacency_.size(), 1);
  if (vertex_weights_.empty()) vertex_weights_.assign(n, 1);
  if (vertex_costs_.empty()) vertex_costs_ = vertex_weights_;
  if (offsets_.back() != adjacency_.size() || edge_weights_.size() != adjacency_.size() ||
      vertex_weights_.size() != n || vertex_costs_.size() != n) {
    throw ConsistencyError("graph: array sizes disagree");
  }
  total_weight_ = std::accumulate(vertex_weights_.begin(), vertex_weights_.end(), Weight{0});
  for (Weight w : vertex_weights_) max_weight_ = std::max(max_weight_, w);
}

CsrGraph CsrGraph::from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges,
                              std::vector<Weight> vertex_weights,
                              std::vector<Weight> vertex_costs) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(2 * edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ConsistencyError("graph: edge out of range");
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<VertexId> adjacency;
  std::vector<Weight> ewgt;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0 && arcs[i] == arcs[i - 1]) {
      ++ewgt.back();
      continue;
    }
    adjacency.push_back(arcs[i].second);
    ewgt.push_back(1);
    ++offsets[arcs[i].first + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  return CsrGraph(std::move(offsets), std::move(adjacency), std::move(ewgt),
                  std::move(vertex_weights), std::move(vertex_costs));
}

void CsrGraph::check_consistency() const {
  auto fail = [](const std::string& what) { throw ConsistencyError("graph: " + what); };
  const VertexId n = num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    if (vertex_weights_[v] < 0 || vertex_costs_[v] < 0) fail("negative vertex weight");
    auto nb = neighbors(v);
    auto ew = edge_weights(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      VertexId u = nb[i];
      if (u < 0 || u >= n) fail("neighbor out of range");
      if (u == v) fail("self loop at " + std::to_string(v));
      if (i > 0 && nb[i - 1] >= u) fail("neighbor list not strictly sorted");
      if (ew[i] <= 0) fail("nonpositive edge weight");
      auto back = neighbors(u);
      auto it = std::lower_bound(back.begin(), back.end(), v);
      if (it == back.end() || *it != v) fail("asymmetric edge");
      if (edge_weights(u)[it - back.begin()] != ew[i]) fail("asymmetric edge weight");
    }
  }
}

CsrGraph CsrGraph::induced(std::span<const VertexId> vertices) const {
  const auto m = vertices.size();
  std::vector<VertexId> local(static_cast<std::size_t>(num_vertices()), -1);
  for (std::size_t i = 0; i < m; ++i) local[vertices[i]] = static_cast<VertexId>(i);

  std::vector<std::size_t> offsets(m + 1, 0);
  std::vector<VertexId> adjacency;
  std::vector<Weight> ewgt;
  std::vector<Weight> vwgt(m), vcost(m);
  for (std::size_t i = 0; i < m; ++i) {
    VertexId v = vertices[i];
    vwgt[i] = vertex_weights_[v];
    vcost[i] = vertex_costs_[v];
    auto nb = neighbors(v);
    auto ew = edge_weights(v);
    // Local ids are monotone in global ids, so the filtered list stays sorted.
    for (std::size_t j = 0; j < nb.size(); ++j) {
      VertexId u = local[nb[j]];
      if (u < 0) continue;
      adjacency.push_back(u);
      ewgt.push_back(ew[j]);
    }
    offsets[i + 1] = adjacency.size();
  }
  return CsrGraph(std::move(offsets), std::move(adjacency), std::move(ewgt), std::move(vwgt),
                  std::move(vcost));
}

}  // namespace nigpart
