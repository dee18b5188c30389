#pragma once

#include <span>
#include <vector>

#include "nigpart/types.hpp"

namespace nigpart {

struct Pin {
  NetId net;
  VertexId vertex;
};

// Immutable hypergraph stored as two CSR incidence arrays (net -> pins and
// vertex -> nets). Both lists are sorted and duplicate free.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Validates ids and weights, collapses duplicate pins and builds both
  // directions. Empty weight/cost vectors mean unit weights/costs.
  static Hypergraph build(VertexId num_vertices, NetId num_nets,
                          std::span<const Pin> pins,
                          std::vector<Weight> vertex_weights = {},
                          std::vector<Weight> net_costs = {});

  VertexId num_vertices() const { return num_vertices_; }
  NetId num_nets() const { return num_nets_; }
  std::size_t num_pins() const { return net_pins_.size(); }

  std::span<const VertexId> pins(NetId n) const {
    return {net_pins_.data() + net_begin_[n], net_pins_.data() + net_begin_[n + 1]};
  }
  std::span<const NetId> nets(VertexId v) const {
    return {vertex_nets_.data() + vertex_begin_[v],
            vertex_nets_.data() + vertex_begin_[v + 1]};
  }
  std::size_t net_size(NetId n) const { return net_begin_[n + 1] - net_begin_[n]; }
  std::size_t degree(VertexId v) const { return vertex_begin_[v + 1] - vertex_begin_[v]; }

  Weight vertex_weight(VertexId v) const { return vertex_weights_[v]; }
  Weight net_cost(NetId n) const { return net_costs_[n]; }
  const std::vector<Weight>& vertex_weights() const { return vertex_weights_; }
  const std::vector<Weight>& net_costs() const { return net_costs_; }
  Weight total_vertex_weight() const { return total_vertex_weight_; }

  // Number of duplicate pins dropped by build().
  std::size_t duplicate_pins() const { return duplicate_pins_; }

  // Checks the transpose/range/sortedness invariants; throws on violation.
  void check_consistency() const;

  // Structural equality: incidence, weights and costs. The duplicate counter
  // is ingest history and is not compared.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  VertexId num_vertices_ = 0;
  NetId num_nets_ = 0;
  std::vector<std::size_t> net_begin_{0};
  std::vector<VertexId> net_pins_;
  std::vector<std::size_t> vertex_begin_{0};
  std::vector<NetId> vertex_nets_;
  std::vector<Weight> vertex_weights_;
  std::vector<Weight> net_costs_;
  Weight total_vertex_weight_ = 0;
  std::size_t duplicate_pins_ = 0;
};

// K-way vertex partition with part weight bookkeeping.
class PartitionVector {
 public:
  PartitionVector() = default;
  PartitionVector(const Hypergraph& h, PartId k);

  // Wraps an existing assignment; ids must lie in [0,k) or be kUnassigned.
  static PartitionVector from_parts(const Hypergraph& h, PartId k,
                                    std::vector<PartId> part_of);

  PartId k() const { return k_; }
  std::size_t size() const { return part_of_.size(); }
  PartId operator[](VertexId v) const { return part_of_[v]; }
  const std::vector<PartId>& parts() const { return part_of_; }
  const std::vector<Weight>& part_weights() const { return part_weights_; }
  Weight part_weight(PartId p) const { return part_weights_[p]; }

  void assign(VertexId v, PartId p, Weight w);
  void move(VertexId v, PartId to, Weight w);
  bool complete() const;

  // Renumbers parts by first appearance in vertex order, so vertex 0 is
  // always in part 0. Parts that stay empty keep the highest ids.
  void canonicalize();

  friend bool operator==(const PartitionVector&, const PartitionVector&) = default;

 private:
  PartId k_ = 0;
  std::vector<PartId> part_of_;
  std::vector<Weight> part_weights_;
};

struct CutReport {
  Weight cutnet_cost = 0;
  Weight connectivity_minus1_cost = 0;
  // Number of distinct parts touched by each net; 0 for empty nets.
  std::vector<PartId> lambda_of;
  std::vector<Weight> part_weights;
  std::vector<std::int64_t> internal_nets_per_part;
  double max_imbalance_vertex = 0.0;
  double max_imbalance_internal_nets = 0.0;

  bool is_cut(NetId n) const { return lambda_of[n] > 1; }
};

// (max_k x_k) / (sum x / K) - 1, or 0 when the sum is 0.
double imbalance_ratio(std::span<const Weight> per_part);

CutReport evaluate(const Hypergraph& h, const PartitionVector& pv);

}  // namespace nigpart
