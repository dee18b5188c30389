#include <algorithm>
#include <numeric>
#include <string>

#include "nigpart/rb_partitioner.hpp"

namespace nigpart {

namespace {

class Reach {
 public:
  Reach(const RbTree& tree, bool lenient) : tree_(tree), lenient_(lenient) {}

  // Collects the leaf parts vertex v can land in, given the ids of its nets
  // present at `node`. Returns true when the nets forced a single path.
  void walk(int node_idx, const std::vector<NetId>& nets, VertexId v,
            std::vector<PartId>& leaves, bool& forced) const {
    const RbNode& node = tree_.nodes[node_idx];
    if (nets.empty()) {
      // Nothing pins v below here; every leaf of this subtree is fine.
      forced = false;
      for (PartId p = 0; p < node.num_parts; ++p) leaves.push_back(node.first_part + p);
      return;
    }
    if (node.leaf()) {
      leaves.push_back(node.first_part);
      return;
    }
    bool on_side[2] = {false, false};
    std::vector<NetId> child_nets[2];
    std::vector<NetId> separator;
    for (NetId n : nets) {
      const Side s = node.side_of_vertex(n);
      if (s == Side::kS) {
        separator.push_back(n);
      } else {
        on_side[static_cast<int>(s)] = true;
        child_nets[static_cast<int>(s)].push_back(n);
      }
    }
    if (tree_.metric == Metric::kConnectivity) {
      for (int c = 0; c < 2; ++c) {
        child_nets[c].insert(child_nets[c].end(), separator.begin(), separator.end());
        std::sort(child_nets[c].begin(), child_nets[c].end());
      }
    }
    if (on_side[0] && on_side[1] && !lenient_) {
      throw ConsistencyError("vertex " + std::to_string(v) + " has non-separator nets on both "
                             "sides of RB node " + std::to_string(node.id));
    }
    if (on_side[0] != on_side[1]) {
      const int c = on_side[0] ? 0 : 1;
      walk(node.child[c], child_nets[c], v, leaves, forced);
      return;
    }
    // All nets in the separator (or a lenient vertex straddling): both
    // children are reachable.
    forced = false;
    for (int c = 0; c < 2; ++c) walk(node.child[c], child_nets[c], v, leaves, forced);
  }

 private:
  const RbTree& tree_;
  bool lenient_;
};

}  // namespace

PartitionVector assign_vertices(const Hypergraph& h, const RbTree& tree, PartId k,
                                std::size_t* free_vertices,
                                const std::vector<VertexId>& lenient) {
  PartitionVector pv(h, k);
  if (k == 1) {
    for (VertexId v = 0; v < h.num_vertices(); ++v) pv.assign(v, 0, h.vertex_weight(v));
    if (free_vertices) *free_vertices = 0;
    return pv;
  }
  std::vector<bool> is_lenient(h.num_vertices(), false);
  for (VertexId v : lenient) is_lenient[v] = true;
  const Reach strict(tree, false);
  const Reach loose(tree, true);

  struct Pending {
    VertexId v;
    std::vector<PartId> candidates;
  };
  std::vector<Pending> pending;
  std::vector<NetId> nets;
  std::vector<PartId> leaves;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    auto vn = h.nets(v);
    nets.assign(vn.begin(), vn.end());
    // Nets removed above the root cannot exist, but the root may not hold
    // every net if the tree came from a sub-NIG.
    std::erase_if(nets, [&](NetId n) { return !tree.nodes[0].contains(n); });
    leaves.clear();
    bool forced = true;
    (is_lenient[v] ? loose : strict).walk(0, nets, v, leaves, forced);
    std::sort(leaves.begin(), leaves.end());
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    if (forced && leaves.size() == 1) {
      pv.assign(v, leaves.front(), h.vertex_weight(v));
    } else {
      pending.push_back({v, leaves});
    }
  }

  std::stable_sort(pending.begin(), pending.end(), [&](const Pending& a, const Pending& b) {
    return h.vertex_weight(a.v) > h.vertex_weight(b.v);
  });
  for (const auto& p : pending) {
    PartId best = p.candidates.front();
    for (PartId q : p.candidates) {
      if (pv.part_weight(q) < pv.part_weight(best)) best = q;
    }
    pv.assign(p.v, best, h.vertex_weight(p.v));
  }
  if (free_vertices) *free_vertices = pending.size();
  return pv;
}

}  // namespace nigpart
