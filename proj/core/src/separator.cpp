#include <algorithm>

#include "nigpart/separator.hpp"

namespace nigpart {

Separator Separator::from_labels(const CsrGraph& g, std::vector<Side> labels) {
  if (labels.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw InvalidSeparator("label count does not match vertex count");
  }
  Separator s;
  s.side_of = std::move(labels);
  s.recompute(g);
  return s;
}

void Separator::recompute(const CsrGraph& g) {
  weight = {0, 0, 0};
  cost_s = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto side = static_cast<std::size_t>(side_of[v]);
    weight[side] += g.weight(v);
    if (side_of[v] == Side::kS) cost_s += g.cost(v);
  }
}

bool Separator::separates(const CsrGraph& g) const {
  if (side_of.size() != static_cast<std::size_t>(g.num_vertices())) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (side_of[v] == Side::kS) continue;
    const Side other = opposite(side_of[v]);
    for (VertexId u : g.neighbors(v)) {
      if (side_of[u] == other) return false;
    }
  }
  return true;
}

bool Separator::weights_match(const CsrGraph& g) const {
  Separator copy;
  copy.side_of = side_of;
  copy.recompute(g);
  return copy.weight == weight && copy.cost_s == cost_s;
}

double separator_imbalance(Weight a, Weight b, double target_ratio) {
  const Weight total = a + b;
  if (total == 0) return 0.0;
  const double t = static_cast<double>(total);
  const double load_a = target_ratio > 0.0 ? static_cast<double>(a) / (target_ratio * t) : 0.0;
  const double load_b =
      target_ratio < 1.0 ? static_cast<double>(b) / ((1.0 - target_ratio) * t) : 0.0;
  return std::max(load_a, load_b) - 1.0;
}

bool separator_balanced(Weight a, Weight b, const GpvsConfig& cfg, Weight slack) {
  const auto total = static_cast<double>(a + b);
  const double limit_a = (1.0 + cfg.epsilon) * cfg.target_ratio * total + static_cast<double>(slack);
  const double limit_b =
      (1.0 + cfg.epsilon) * (1.0 - cfg.target_ratio) * total + static_cast<double>(slack);
  return static_cast<double>(a) <= limit_a + 1e-9 && static_cast<double>(b) <= limit_b + 1e-9;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool separator_better(const Separator& x, const Separator& y, const GpvsConfig& cfg,
                      Weight slack) {
  const bool bx = separator_balanced(x.weight_a(), x.weight_b(), cfg, slack);
  const bool by = separator_balanced(y.weight_a(), y.weight_b(), cfg, slack);
  if (bx != by) return bx;
  const double ix = separator_imbalance(x.weight_a(), x.weight_b(), cfg.target_ratio);
  const double iy = separator_imbalance(y.weight_a(), y.weight_b(), cfg.target_ratio);
  if (bx) {
    if (x.cost_s != y.cost_s) return x.cost_s < y.cost_s;
    return ix < iy;
  }
  if (ix != iy) return ix < iy;
  return x.cost_s < y.cost_s;
}

}  // namespace nigpart
