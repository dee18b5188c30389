#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>

#include "nigpart/separator.hpp"

namespace nigpart {

namespace {

// Breadth-first region growing from `start` until side A holds about
// target_ratio of the total weight. Disconnected remainders are entered in
// `restart_order`.
std::vector<Side> grow_bisection(const CsrGraph& g, VertexId start,
                                 const std::vector<VertexId>& restart_order, double target) {
  const VertexId n = g.num_vertices();
  std::vector<Side> side(n, Side::kB);
  std::vector<bool> queued(n, false);
  std::deque<VertexId> queue{start};
  queued[start] = true;
  Weight wa = 0;
  std::size_t restart = 0;
  while (true) {
    if (queue.empty()) {
      while (restart < restart_order.size() && queued[restart_order[restart]]) ++restart;
      if (restart == restart_order.size()) break;
      queue.push_back(restart_order[restart]);
      queued[restart_order[restart]] = true;
    }
    VertexId v = queue.front();
    queue.pop_front();
    const double before = std::abs(static_cast<double>(wa) - target);
    const double after = std::abs(static_cast<double>(wa + g.weight(v)) - target);
    if (after > before) break;
    side[v] = Side::kA;
    wa += g.weight(v);
    for (VertexId u : g.neighbors(v)) {
      if (!queued[u]) {
        queued[u] = true;
        queue.push_back(u);
      }
    }
  }
  return side;
}

// Turns an edge bisection into a vertex separator: each cut edge not yet
// covered sends its cheaper endpoint to S (ties: the A endpoint).
void cover_cut_edges(const CsrGraph& g, std::vector<Side>& side) {
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (side[u] != Side::kA) continue;
    for (VertexId b : g.neighbors(u)) {
      if (side[b] != Side::kB) continue;
      if (g.cost(b) < g.cost(u)) {
        side[b] = Side::kS;
      } else {
        side[u] = Side::kS;
        break;
      }
    }
  }
}

// Grows A one vertex at a time in breadth-first order, keeping S as the
// frontier (every B neighbor of a new A vertex joins S). Returns the
// labeling at the prefix that `better` ranks highest.
template <class Better>
std::vector<Side> grow_separator(const CsrGraph& g, const std::vector<VertexId>& order,
                                 double target_ratio, const Better& better_state) {
  const VertexId n = g.num_vertices();
  std::vector<Side> side(n, Side::kB);
  std::vector<VertexId> grown;
  std::deque<VertexId> frontier;
  Separator state = Separator::from_labels(g, side);
  Separator best = state;
  std::size_t best_steps = 0;
  std::size_t next = 0;
  while (true) {
    const double a = static_cast<double>(state.weight_a());
    const double b = static_cast<double>(state.weight_b());
    if (a + b > 0 && a >= target_ratio * (a + b)) break;
    VertexId v = -1;
    while (!frontier.empty() && v < 0) {
      if (side[frontier.front()] == Side::kS) v = frontier.front();
      frontier.pop_front();
    }
    while (v < 0 && next < order.size()) {
      if (side[order[next]] == Side::kB) v = order[next];
      ++next;
    }
    if (v < 0) break;
    const Side was = side[v];
    side[v] = Side::kA;
    state.weight[static_cast<int>(was)] -= g.weight(v);
    state.weight[0] += g.weight(v);
    if (was == Side::kS) state.cost_s -= g.cost(v);
    for (VertexId u : g.neighbors(v)) {
      if (side[u] != Side::kB) continue;
      side[u] = Side::kS;
      state.weight[1] -= g.weight(u);
      state.weight[2] += g.weight(u);
      state.cost_s += g.cost(u);
      frontier.push_back(u);
    }
    grown.push_back(v);
    if (better_state(state, best)) {
      best = state;
      best_steps = grown.size();
    }
  }
  std::vector<Side> out(n, Side::kB);
  for (std::size_t i = 0; i < best_steps; ++i) {
    const VertexId v = grown[i];
    out[v] = Side::kA;
    for (VertexId u : g.neighbors(v)) {
      if (out[u] == Side::kB) out[u] = Side::kS;
    }
  }
  return out;
}

}  // namespace

Separator initial_separator(const CsrGraph& g, const GpvsConfig& cfg) {
  const VertexId n = g.num_vertices();
  if (n == 0) return Separator{};
  const double target = cfg.target_ratio * static_cast<double>(g.total_weight());

  Separator best;
  bool have_best = false;
  const int tries = std::max(cfg.num_initial_tries, 1);
  for (int t = 0; t < tries; ++t) {
    std::mt19937_64 rng(mix_seed(cfg.rng_seed, 0x1A17 + static_cast<std::uint64_t>(t)));
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    auto side = grow_bisection(g, order.front(), order, target);
    cover_cut_edges(g, side);
    const auto rank = [&](const Separator& x, const Separator& y) {
      return separator_better(x, y, cfg, balance_slack(g, cfg));
    };
    std::vector<Side> grown = grow_separator(g, order, cfg.target_ratio, rank);
    for (std::vector<Side>* labels : {&side, &grown}) {
      Separator sep = Separator::from_labels(g, std::move(*labels));
      GpvsConfig try_cfg = cfg;
      try_cfg.rng_seed = mix_seed(cfg.rng_seed, 0x2B00 + static_cast<std::uint64_t>(t));
      sep = refine(g, std::move(sep), try_cfg);
      if (!have_best || rank(sep, best)) {
        best = std::move(sep);
        have_best = true;
      }
    }
  }
  return best;
}

}  // namespace nigpart
