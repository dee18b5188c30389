#include "nigpart/nig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

namespace nigpart {

namespace {

// Neighbor rows for nets [first, last), marking with a per-thread stamp
// array so every pair is emitted once per row.
void build_rows(const Hypergraph& h, const std::vector<bool>& dropped, NetId first, NetId last,
                std::vector<std::vector<VertexId>>& rows) {
  std::vector<NetId> stamp(h.num_nets(), -1);
  for (NetId n = first; n < last; ++n) {
    auto& row = rows[n];
    stamp[n] = n;
    for (VertexId v : h.pins(n)) {
      if (dropped[v]) continue;
      for (NetId m : h.nets(v)) {
        if (stamp[m] != n) {
          stamp[m] = n;
          row.push_back(m);
        }
      }
    }
    std::sort(row.begin(), row.end());
  }
}

}  // namespace

NigGraph build_nig(const Hypergraph& h, const NigOptions& options) {
  const NetId nn = h.num_nets();
  std::vector<bool> dropped(h.num_vertices(), false);
  NigGraph g;
  std::uint64_t work = 0;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const std::uint64_t d = h.degree(v);
    if (options.drop_degree_above > 0 && d > options.drop_degree_above) {
      dropped[v] = true;
      g.dropped_vertices.push_back(v);
      continue;
    }
    work += d * d;
  }
  if (work > options.max_clique_work) {
    throw CliqueBlowup("net intersection graph needs " + std::to_string(work) +
                       " clique entries, cap is " + std::to_string(options.max_clique_work));
  }

  std::vector<std::vector<VertexId>> rows(nn);
  const int threads = std::clamp(options.threads, 1, std::max(1, static_cast<int>(nn)));
  if (threads == 1) {
    build_rows(h, dropped, 0, nn, rows);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      const auto first = static_cast<NetId>(static_cast<std::int64_t>(nn) * t / threads);
      const auto last = static_cast<NetId>(static_cast<std::int64_t>(nn) * (t + 1) / threads);
      pool.emplace_back(build_rows, std::cref(h), std::cref(dropped), first, last,
                        std::ref(rows));
    }
    for (auto& th : pool) th.join();
  }

  std::vector<std::size_t> offsets(nn + 1, 0);
  for (NetId n = 0; n < nn; ++n) offsets[n + 1] = offsets[n] + rows[n].size();
  std::vector<VertexId> adjacency;
  adjacency.reserve(offsets.back());
  for (auto& row : rows) {
    adjacency.insert(adjacency.end(), row.begin(), row.end());
    std::vector<VertexId>().swap(row);
  }
  g.graph = CsrGraph(std::move(offsets), std::move(adjacency), {},
                     std::vector<Weight>(nn, 1), h.net_costs());
  g.origin_net.resize(nn);
  std::iota(g.origin_net.begin(), g.origin_net.end(), 0);
  return g;
}

NigGraph assign_weights(NigGraph g, const Hypergraph& h, WeightScheme scheme,
                        std::int64_t scale) {
  if (scale < 1) throw ConfigError("weight scale must be at least 1");
  const NetId nn = g.num_vertices();
  if (nn != h.num_nets() || g.origin_net.size() != static_cast<std::size_t>(nn)) {
    throw ModelMismatch("graph has " + std::to_string(nn) + " vertices, hypergraph has " +
                        std::to_string(h.num_nets()) + " nets");
  }
  for (NetId n : g.origin_net) {
    if (n < 0 || n >= h.num_nets()) throw ModelMismatch("origin net out of range");
  }

  std::vector<Weight> weights(nn, 1);
  if (scheme == WeightScheme::kShared) {
    const auto s = static_cast<double>(scale);
    for (NetId i = 0; i < nn; ++i) {
      double sum = 0.0;
      for (VertexId v : h.pins(g.origin_net[i])) {
        sum += s * static_cast<double>(h.vertex_weight(v)) / static_cast<double>(h.degree(v));
      }
      weights[i] = static_cast<Weight>(std::llround(sum));
    }
  }
  const auto& cg = g.graph;
  g.graph = CsrGraph(cg.offsets(), cg.adjacency(),
                     std::vector<Weight>(cg.adjacency().size(), 1), std::move(weights),
                     cg.vertex_costs());
  return g;
}

}  // namespace nigpart
