#pragma once

#include <cstdint>
#include <vector>

#include "nigpart/hypergraph.hpp"
#include "nigpart/nig.hpp"
#include "nigpart/separator.hpp"

namespace nigpart {

enum class Metric {
  kCutnet,        // separator vertices are removed from both children
  kConnectivity,  // separator vertices are copied into both children
};

struct RbConfig {
  PartId k = 2;
  Metric metric = Metric::kConnectivity;
  // Allowed imbalance of every bisection step.
  double epsilon = 0.10;
  WeightScheme scheme = WeightScheme::kUnit;
  std::int64_t weight_scale = 1024;
  bool postprocess = true;
  // Relative cutsize increase the balance pass may spend; 0 keeps both
  // cutsizes non-increasing.
  double allow_cut_degrade = 0.0;
  std::uint64_t rng_seed = 1;
  int threads = 1;
  GpvsConfig gpvs;
  NigOptions nig;
};

// One bisection step. Leaves have num_parts == 1 and no children.
struct RbNode {
  std::uint64_t id = 1;  // heap numbering: children of i are 2i and 2i+1
  int depth = 0;
  PartId first_part = 0;
  PartId num_parts = 1;
  // Sorted NIG vertex ids handled here; a copied separator vertex keeps its
  // id in both children.
  std::vector<VertexId> nig_vertices;
  // Label of nig_vertices[i]; empty at leaves.
  std::vector<Side> side_of;
  Weight separator_cost = 0;
  Weight weight_a = 0;
  Weight weight_b = 0;
  Weight weight_s = 0;
  double imbalance = 0.0;
  bool balanced = true;
  std::size_t num_edges = 0;
  int child[2] = {-1, -1};

  bool leaf() const { return num_parts == 1; }
  // Label of a NIG vertex present in this node.
  Side side_of_vertex(VertexId nig_vertex) const;
  bool contains(VertexId nig_vertex) const;
};

struct RbTree {
  Metric metric = Metric::kConnectivity;
  std::vector<RbNode> nodes;  // nodes[0] is the root

  Weight total_separator_cost() const;
  // Net ids (NIG vertex ids) that were in some separator.
  std::vector<NetId> separator_nets() const;
};

// Leaf parts reached by each net (through its copies, for connectivity).
struct NetAssignment {
  std::vector<std::vector<PartId>> part_sets_of_net;
  PartId lambda_hat(NetId n) const { return static_cast<PartId>(part_sets_of_net[n].size()); }
};

struct RbStats {
  double nig_build_ms = 0.0;
  double rb_ms = 0.0;
  double assign_ms = 0.0;
  double postprocess_ms = 0.0;
  VertexId nig_vertices = 0;
  std::size_t nig_edges = 0;
  std::size_t dropped_vertices = 0;
  std::size_t free_vertices = 0;
  std::size_t postprocess_moves = 0;
};

struct PartitionResult {
  PartitionVector partition;
  CutReport report;
  RbStats stats;
  RbTree tree;
  NetAssignment nets;
};

PartitionResult partition(const Hypergraph& h, const RbConfig& cfg);

// Recursive bisection of a weighted NIG into cfg.k leaves.
RbTree bisect_recursively(const NigGraph& nig, const RbConfig& cfg);

// Derives vertex parts from the RB tree. Vertices with no surviving nets
// (and those listed in `lenient`, e.g. degree-capped ones) are placed
// heaviest first on the lightest part they can reach.
PartitionVector assign_vertices(const Hypergraph& h, const RbTree& tree, PartId k,
                                std::size_t* free_vertices = nullptr,
                                const std::vector<VertexId>& lenient = {});

NetAssignment net_assignment(const Hypergraph& h, const RbTree& tree);

// Greedy boundary moves that lower the heavier of the two parts involved
// without increasing either cutsize (unless allow_cut_degrade permits).
// When `may_cut` is given, only nets flagged there may turn from internal
// to cut; partition() passes the separator nets so the cut set stays
// inside them.
PartitionVector postprocess_balance(const Hypergraph& h, PartitionVector pv,
                                    const RbConfig& cfg, std::size_t* moves = nullptr,
                                    const std::vector<bool>* may_cut = nullptr);

}  // namespace nigpart
