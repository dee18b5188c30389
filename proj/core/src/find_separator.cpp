#include "nigpart/separator.hpp"

namespace nigpart {

Separator find_separator(const CsrGraph& g, const GpvsConfig& config,
                         const SeparatorTrace& trace) {
  if (g.num_vertices() == 0) return Separator{};
  GpvsConfig cfg = config;
  cfg.balance_slack = balance_slack(g, config);

  auto levels = coarsen(g, cfg);
  std::size_t level = levels.size() - 1;
  Separator sep = initial_separator(levels[level].graph, cfg);
  if (trace) trace(level, levels[level].graph, sep);

  while (level > 0) {
    const auto& map = levels[level].fine_to_coarse;
    const CsrGraph& fine = levels[level - 1].graph;
    std::vector<Side> labels(map.size());
    for (std::size_t v = 0; v < map.size(); ++v) labels[v] = sep.side_of[map[v]];
    sep = Separator::from_labels(fine, std::move(labels));

    sep = refine(fine, std::move(sep), cfg);
    if (!separator_balanced(sep.weight_a(), sep.weight_b(), cfg, cfg.balance_slack)) {
      Separator fresh = initial_separator(fine, cfg);
      if (separator_better(fresh, sep, cfg, cfg.balance_slack)) sep = std::move(fresh);
    }
    --level;
    if (trace) trace(level, levels[level].graph, sep);
  }
  return sep;
}

}  // namespace nigpart
