#include <algorithm>
#include <numeric>

#include "nigpart/rb_partitioner.hpp"

namespace nigpart {

PartitionVector postprocess_balance(const Hypergraph& h, PartitionVector pv, const RbConfig& cfg,
                                    std::size_t* moves, const std::vector<bool>* may_cut) {
  const PartId k = pv.k();
  if (moves) *moves = 0;
  if (k <= 1 || !pv.complete()) return pv;

  const auto kk = static_cast<std::size_t>(k);
  // pins_in[n * k + p]: pins of net n currently in part p.
  std::vector<std::int32_t> pins_in(static_cast<std::size_t>(h.num_nets()) * kk, 0);
  std::vector<PartId> lambda(h.num_nets(), 0);
  Weight cut = 0, conn = 0;
  for (NetId n = 0; n < h.num_nets(); ++n) {
    for (VertexId v : h.pins(n)) {
      if (pins_in[n * kk + pv[v]]++ == 0) ++lambda[n];
    }
    if (lambda[n] > 1) {
      cut += h.net_cost(n);
      conn += h.net_cost(n) * (lambda[n] - 1);
    }
  }
  const bool degrade = cfg.allow_cut_degrade > 0.0;
  const auto cut_budget = static_cast<Weight>(static_cast<double>(cut) * (1.0 + cfg.allow_cut_degrade));
  const auto conn_budget = static_cast<Weight>(static_cast<double>(conn) * (1.0 + cfg.allow_cut_degrade));

  std::vector<VertexId> order;
  for (int pass = 0; pass < 10; ++pass) {
    order.clear();
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      auto vn = h.nets(v);
      if (std::any_of(vn.begin(), vn.end(), [&](NetId n) { return lambda[n] > 1; })) {
        order.push_back(v);
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return h.vertex_weight(a) > h.vertex_weight(b);
    });

    bool moved = false;
    for (VertexId v : order) {
      const PartId from = pv[v];
      const Weight w = h.vertex_weight(v);
      auto vn = h.nets(v);
      PartId best = kUnassigned;
      Weight best_dcut = 0, best_dconn = 0;
      for (PartId q = 0; q < k; ++q) {
        if (q == from || pv.part_weight(q) + w >= pv.part_weight(from)) continue;
        Weight dcut = 0, dconn = 0;
        bool allowed = true;
        for (NetId n : vn) {
          const bool leaves = pins_in[n * kk + from] == 1;
          const bool enters = pins_in[n * kk + q] == 0;
          if (lambda[n] == 1 && enters && may_cut && !(*may_cut)[n]) allowed = false;
          const PartId after = lambda[n] - (leaves ? 1 : 0) + (enters ? 1 : 0);
          dconn += h.net_cost(n) * ((std::max(after, PartId{1}) - 1) - (lambda[n] - 1));
          dcut += h.net_cost(n) * ((after > 1 ? 1 : 0) - (lambda[n] > 1 ? 1 : 0));
        }
        if (!degrade) {
          if (!allowed || dcut > 0 || dconn > 0) continue;
        } else if (cut + dcut > cut_budget || conn + dconn > conn_budget) {
          continue;
        }
        const bool take =
            best == kUnassigned ||
            (degrade && dconn + dcut < best_dconn + best_dcut) ||
            ((!degrade || dconn + dcut == best_dconn + best_dcut) &&
             pv.part_weight(q) < pv.part_weight(best));
        if (take) {
          best = q;
          best_dcut = dcut;
          best_dconn = dconn;
        }
      }
      if (best == kUnassigned) continue;

      for (NetId n : vn) {
        if (--pins_in[n * kk + from] == 0) --lambda[n];
        if (pins_in[n * kk + best]++ == 0) ++lambda[n];
      }
      cut += best_dcut;
      conn += best_dconn;
      pv.move(v, best, w);
      moved = true;
      if (moves) ++*moves;
    }
    if (!moved) break;
  }
  return pv;
}

}  // namespace nigpart
