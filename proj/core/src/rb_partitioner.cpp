#include "nigpart/rb_partitioner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace nigpart {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct ChildSets {
  std::vector<VertexId> vertices[2];
};

// Runs the separator on one node and returns the children's vertex sets.
ChildSets split_node(const NigGraph& nig, const RbConfig& cfg, RbNode& node) {
  const CsrGraph sub = nig.graph.induced(node.nig_vertices);
  node.num_edges = sub.num_edges();

  GpvsConfig gcfg = cfg.gpvs;
  gcfg.epsilon = cfg.epsilon;
  const PartId left = (node.num_parts + 1) / 2;
  gcfg.target_ratio = static_cast<double>(left) / static_cast<double>(node.num_parts);
  gcfg.rng_seed = mix_seed(cfg.rng_seed, node.id);

  Separator sep = find_separator(sub, gcfg);
  if (sep.side_of.size() != node.nig_vertices.size()) {
    sep = Separator::from_labels(sub, std::vector<Side>(node.nig_vertices.size(), Side::kA));
  }
  node.weight_a = sep.weight_a();
  node.weight_b = sep.weight_b();
  node.weight_s = sep.weight_s();
  node.separator_cost = sep.cost_s;
  node.imbalance = separator_imbalance(sep.weight_a(), sep.weight_b(), gcfg.target_ratio);
  node.balanced = separator_balanced(sep.weight_a(), sep.weight_b(), gcfg);

  ChildSets out;
  for (std::size_t i = 0; i < node.nig_vertices.size(); ++i) {
    const VertexId v = node.nig_vertices[i];
    switch (sep.side_of[i]) {
      case Side::kA:
        out.vertices[0].push_back(v);
        break;
      case Side::kB:
        out.vertices[1].push_back(v);
        break;
      case Side::kS:
        if (cfg.metric == Metric::kConnectivity) {
          out.vertices[0].push_back(v);
          out.vertices[1].push_back(v);
        }
        break;
    }
  }
  node.side_of = std::move(sep.side_of);
  return out;
}

}  // namespace

bool RbNode::contains(VertexId nig_vertex) const {
  return std::binary_search(nig_vertices.begin(), nig_vertices.end(), nig_vertex);
}

Side RbNode::side_of_vertex(VertexId nig_vertex) const {
  auto it = std::lower_bound(nig_vertices.begin(), nig_vertices.end(), nig_vertex);
  return side_of[static_cast<std::size_t>(it - nig_vertices.begin())];
}

Weight RbTree::total_separator_cost() const {
  Weight total = 0;
  for (const auto& node : nodes) total += node.separator_cost;
  return total;
}

std::vector<NetId> RbTree::separator_nets() const {
  std::vector<NetId> nets;
  for (const auto& node : nodes) {
    for (std::size_t i = 0; i < node.side_of.size(); ++i) {
      if (node.side_of[i] == Side::kS) nets.push_back(node.nig_vertices[i]);
    }
  }
  std::sort(nets.begin(), nets.end());
  nets.erase(std::unique(nets.begin(), nets.end()), nets.end());
  return nets;
}

RbTree bisect_recursively(const NigGraph& nig, const RbConfig& cfg) {
  if (cfg.k < 1) throw ConfigError("number of parts must be at least 1");
  RbTree tree;
  tree.metric = cfg.metric;
  RbNode root;
  root.num_parts = cfg.k;
  root.nig_vertices.resize(static_cast<std::size_t>(nig.num_vertices()));
  for (VertexId v = 0; v < nig.num_vertices(); ++v) root.nig_vertices[v] = v;
  tree.nodes.push_back(std::move(root));

  // Level-synchronous: nodes of one depth are independent. Children are
  // appended in node order afterwards, so thread count cannot change ids.
  std::vector<int> level{0};
  while (!level.empty()) {
    std::vector<int> work;
    for (int idx : level) {
      if (!tree.nodes[idx].leaf()) work.push_back(idx);
    }
    std::vector<ChildSets> children(work.size());
    const int threads = std::clamp(cfg.threads, 1, std::max<int>(1, static_cast<int>(work.size())));
    if (threads == 1) {
      for (std::size_t i = 0; i < work.size(); ++i) {
        children[i] = split_node(nig, cfg, tree.nodes[work[i]]);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < work.size(); i = next++) {
            children[i] = split_node(nig, cfg, tree.nodes[work[i]]);
          }
        });
      }
      for (auto& th : pool) th.join();
    }

    std::vector<int> next_level;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const int idx = work[i];
      const PartId left = (tree.nodes[idx].num_parts + 1) / 2;
      for (int c = 0; c < 2; ++c) {
        RbNode child;
        const RbNode& parent = tree.nodes[idx];
        child.id = 2 * parent.id + static_cast<std::uint64_t>(c);
        child.depth = parent.depth + 1;
        child.first_part = c == 0 ? parent.first_part : parent.first_part + left;
        child.num_parts = c == 0 ? left : parent.num_parts - left;
        child.nig_vertices = std::move(children[i].vertices[c]);
        tree.nodes.push_back(std::move(child));
        tree.nodes[idx].child[c] = static_cast<int>(tree.nodes.size() - 1);
        next_level.push_back(static_cast<int>(tree.nodes.size() - 1));
      }
    }
    level = std::move(next_level);
  }
  return tree;
}

NetAssignment net_assignment(const Hypergraph& h, const RbTree& tree) {
  NetAssignment out;
  out.part_sets_of_net.resize(static_cast<std::size_t>(h.num_nets()));
  for (const auto& node : tree.nodes) {
    if (!node.leaf()) continue;
    for (VertexId v : node.nig_vertices) out.part_sets_of_net[v].push_back(node.first_part);
  }
  for (auto& parts : out.part_sets_of_net) std::sort(parts.begin(), parts.end());
  return out;
}

PartitionResult partition(const Hypergraph& h, const RbConfig& cfg) {
  if (cfg.k < 1) throw ConfigError("number of parts must be at least 1");
  if (cfg.epsilon < 0.0) throw ConfigError("epsilon must be nonnegative");
  PartitionResult result;

  auto t0 = Clock::now();
  NigOptions nig_options = cfg.nig;
  nig_options.threads = std::max(nig_options.threads, cfg.threads);
  NigGraph nig = assign_weights(build_nig(h, nig_options), h, cfg.scheme, cfg.weight_scale);
  result.stats.nig_build_ms = elapsed_ms(t0);
  result.stats.nig_vertices = nig.num_vertices();
  result.stats.nig_edges = nig.graph.num_edges();
  result.stats.dropped_vertices = nig.dropped_vertices.size();

  t0 = Clock::now();
  result.tree = bisect_recursively(nig, cfg);
  result.stats.rb_ms = elapsed_ms(t0);

  t0 = Clock::now();
  result.partition =
      assign_vertices(h, result.tree, cfg.k, &result.stats.free_vertices, nig.dropped_vertices);
  result.nets = net_assignment(h, result.tree);
  result.stats.assign_ms = elapsed_ms(t0);

  t0 = Clock::now();
  if (cfg.postprocess && cfg.k > 1) {
    std::vector<bool> may_cut(static_cast<std::size_t>(h.num_nets()), false);
    for (NetId n : result.tree.separator_nets()) may_cut[n] = true;
    result.partition = postprocess_balance(h, std::move(result.partition), cfg,
                                           &result.stats.postprocess_moves, &may_cut);
  }
  result.stats.postprocess_ms = elapsed_ms(t0);

  result.report = evaluate(h, result.partition);
  return result;
}

}  // namespace nigpart
