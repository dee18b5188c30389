#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "nigpart/separator.hpp"

namespace nigpart {

namespace {

// Heavy-edge matching. Returns match[v] (== v for unmatched vertices).
std::vector<VertexId> heavy_edge_matching(const CsrGraph& g, Weight max_vertex_weight,
                                          std::mt19937_64& rng) {
  const VertexId n = g.num_vertices();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<VertexId> match(n, -1);
  for (VertexId v : order) {
    if (match[v] != -1) continue;
    VertexId best = -1;
    Weight best_weight = 0;
    auto nb = g.neighbors(v);
    auto ew = g.edge_weights(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      VertexId u = nb[i];
      if (match[u] != -1 || g.weight(u) + g.weight(v) > max_vertex_weight) continue;
      // Neighbor lists are sorted, so the first maximum has the smallest id.
      if (best == -1 || ew[i] > best_weight) {
        best = u;
        best_weight = ew[i];
      }
    }
    if (best == -1) {
      match[v] = v;
    } else {
      match[v] = best;
      match[best] = v;
    }
  }
  return match;
}

CoarseLevel contract(const CsrGraph& g, const std::vector<VertexId>& match) {
  const VertexId n = g.num_vertices();
  std::vector<VertexId> cmap(n, -1);
  VertexId cn = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (cmap[v] != -1) continue;
    cmap[v] = cn;
    cmap[match[v]] = cn;
    ++cn;
  }

  std::vector<std::size_t> offsets(cn + 1, 0);
  std::vector<VertexId> adjacency;
  std::vector<Weight> ewgt;
  std::vector<Weight> vwgt(cn, 0), vcost(cn, 0);
  adjacency.reserve(g.adjacency().size());
  ewgt.reserve(g.adjacency().size());

  // slot[c] = position of coarse neighbor c in the current row, or -1.
  std::vector<std::ptrdiff_t> slot(cn, -1);
  std::vector<std::pair<VertexId, Weight>> row;
  VertexId c = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (cmap[v] != c) continue;  // only the smaller id of a pair opens a row
    row.clear();
    const VertexId members[2] = {v, match[v]};
    const int count = match[v] == v ? 1 : 2;
    for (int m = 0; m < count; ++m) {
      VertexId x = members[m];
      vwgt[c] += g.weight(x);
      vcost[c] += g.cost(x);
      auto nb = g.neighbors(x);
      auto ew = g.edge_weights(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        VertexId cu = cmap[nb[i]];
        if (cu == c) continue;
        if (slot[cu] == -1) {
          slot[cu] = static_cast<std::ptrdiff_t>(row.size());
          row.emplace_back(cu, ew[i]);
        } else {
          row[slot[cu]].second += ew[i];
        }
      }
    }
    std::sort(row.begin(), row.end());
    for (auto [cu, w] : row) {
      adjacency.push_back(cu);
      ewgt.push_back(w);
      slot[cu] = -1;
    }
    offsets[c + 1] = adjacency.size();
    ++c;
  }
  return {CsrGraph(std::move(offsets), std::move(adjacency), std::move(ewgt), std::move(vwgt),
                   std::move(vcost)),
          std::move(cmap)};
}

}  // namespace

std::vector<CoarseLevel> coarsen(const CsrGraph& g, const GpvsConfig& cfg) {
  std::vector<CoarseLevel> levels;
  levels.push_back({g, {}});
  std::mt19937_64 rng(mix_seed(cfg.rng_seed, 0xC0A25E));

  const VertexId limit = std::max<VertexId>(cfg.coarsen_until, 1);
  // Cap on merged vertex weight so the coarsest graph can still be split.
  Weight heaviest = 0;
  for (Weight w : g.vertex_weights()) heaviest = std::max(heaviest, w);
  const auto cap_share = static_cast<Weight>(
      std::ceil(1.5 * static_cast<double>(g.total_weight()) / static_cast<double>(limit)));
  const Weight max_vertex_weight = std::max({heaviest, cap_share, Weight{1}});

  while (levels.back().graph.num_vertices() > limit) {
    const CsrGraph& cur = levels.back().graph;
    auto match = heavy_edge_matching(cur, max_vertex_weight, rng);
    CoarseLevel next = contract(cur, match);
    const auto before = static_cast<double>(cur.num_vertices());
    const auto after = static_cast<double>(next.graph.num_vertices());
    if (after > 0.9 * before) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace nigpart
