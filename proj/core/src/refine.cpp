#include <algorithm>
#include <set>

#include "nigpart/separator.hpp"

namespace nigpart {

namespace {

constexpr std::size_t kSideA = 0;
constexpr std::size_t kSideB = 1;

// Max-gain queue; equal gains pop the smaller vertex id first.
class GainQueue {
 public:
  void insert(VertexId v, Weight gain) { set_.emplace(-gain, v); }
  void erase(VertexId v, Weight gain) { set_.erase({-gain, v}); }
  bool empty() const { return set_.empty(); }
  VertexId top() const { return set_.begin()->second; }
  Weight top_gain() const { return -set_.begin()->first; }

 private:
  std::set<std::pair<Weight, VertexId>> set_;
};

struct Move {
  VertexId vertex;
  std::size_t to;
  std::size_t pulled_begin;
  std::size_t pulled_end;
};

class SeparatorFm {
 public:
  SeparatorFm(const CsrGraph& g, Separator& sep, const GpvsConfig& cfg)
      : g_(g), sep_(sep), cfg_(cfg) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    gain_[kSideA].assign(n, 0);
    gain_[kSideB].assign(n, 0);
    in_queue_[kSideA].assign(n, false);
    in_queue_[kSideB].assign(n, false);
    locked_.assign(n, false);
  }

  // One pass; returns true when the separator got cheaper or, at equal
  // cost, better balanced.
  bool pass() {
    const VertexId n = g_.num_vertices();
    std::fill(locked_.begin(), locked_.end(), false);
    for (VertexId v = 0; v < n; ++v) {
      if (sep_.side_of[v] == Side::kS) enqueue(v);
    }

    const Weight start_cost = sep_.cost_s;
    const double start_imb = imbalance();
    Weight best_cost = start_cost;
    double best_imb = start_imb;
    std::size_t best_prefix = 0;
    moves_.clear();
    pulled_.clear();

    const std::size_t stall_limit =
        std::max<std::size_t>(50, static_cast<std::size_t>(n) / 20);
    std::size_t stall = 0;

    while (true) {
      const int to = pick_side();
      if (to < 0) break;
      apply(queue_[to].top(), static_cast<std::size_t>(to));

      const double imb = imbalance();
      if (sep_.cost_s < best_cost || (sep_.cost_s == best_cost && imb < best_imb - 1e-12)) {
        best_cost = sep_.cost_s;
        best_imb = imb;
        best_prefix = moves_.size();
        stall = 0;
      } else if (++stall > stall_limit) {
        break;
      }
    }

    while (moves_.size() > best_prefix) {
      undo(moves_.back());
      moves_.pop_back();
    }
    for (std::size_t s : {kSideA, kSideB}) {
      for (VertexId v = 0; v < n; ++v) {
        if (in_queue_[s][v]) {
          queue_[s].erase(v, gain_[s][v]);
          in_queue_[s][v] = false;
        }
      }
    }
    return best_cost < start_cost || (best_cost == start_cost && best_imb < start_imb - 1e-12);
  }

 private:
  double imbalance() const {
    return separator_imbalance(sep_.weight_a(), sep_.weight_b(), cfg_.target_ratio);
  }

  Side side(VertexId v) const { return sep_.side_of[v]; }

  // gain(v -> s) = cost(v) - cost of the neighbors on the opposite side,
  // which would be pulled into the separator.
  Weight fresh_gain(VertexId v, std::size_t s) const {
    const Side pulled = s == kSideA ? Side::kB : Side::kA;
    Weight g = g_.cost(v);
    for (VertexId u : g_.neighbors(v)) {
      if (side(u) == pulled) g -= g_.cost(u);
    }
    return g;
  }

  void enqueue(VertexId v) {
    if (locked_[v]) return;
    for (std::size_t s : {kSideA, kSideB}) {
      if (in_queue_[s][v]) queue_[s].erase(v, gain_[s][v]);
      gain_[s][v] = fresh_gain(v, s);
      queue_[s].insert(v, gain_[s][v]);
      in_queue_[s][v] = true;
    }
  }

  void dequeue(VertexId v) {
    for (std::size_t s : {kSideA, kSideB}) {
      if (in_queue_[s][v]) {
        queue_[s].erase(v, gain_[s][v]);
        in_queue_[s][v] = false;
      }
    }
  }

  void adjust_gain(VertexId v, std::size_t s, Weight delta) {
    if (in_queue_[s][v]) queue_[s].erase(v, gain_[s][v]);
    gain_[s][v] += delta;
    if (in_queue_[s][v]) queue_[s].insert(v, gain_[s][v]);
  }

  // A/B weights after moving separator vertex v to side s.
  std::pair<Weight, Weight> weights_after(VertexId v, std::size_t s) const {
    const Side pulled = s == kSideA ? Side::kB : Side::kA;
    Weight lost = 0;
    for (VertexId u : g_.neighbors(v)) {
      if (side(u) == pulled) lost += g_.weight(u);
    }
    Weight w[2] = {sep_.weight_a(), sep_.weight_b()};
    w[s] += g_.weight(v);
    w[1 - s] -= lost;
    return {w[0], w[1]};
  }

  // Highest-gain admissible move; the lighter side wins gain ties. A move
  // is admissible when it leaves A/B balanced or strictly improves the
  // imbalance; others are dropped from that side's queue for the pass.
  int pick_side() {
    const double cur = imbalance();
    while (true) {
      const bool has_a = !queue_[kSideA].empty();
      const bool has_b = !queue_[kSideB].empty();
      if (!has_a && !has_b) return -1;
      int first;
      if (has_a && has_b) {
        const Weight ga = queue_[kSideA].top_gain();
        const Weight gb = queue_[kSideB].top_gain();
        if (ga != gb) {
          first = ga > gb ? 0 : 1;
        } else {
          const double load_a = static_cast<double>(sep_.weight_a()) / cfg_.target_ratio;
          const double load_b = static_cast<double>(sep_.weight_b()) / (1.0 - cfg_.target_ratio);
          first = load_a <= load_b ? 0 : 1;
        }
      } else {
        first = has_a ? 0 : 1;
      }
      const auto s = static_cast<std::size_t>(first);
      const VertexId v = queue_[s].top();
      const auto [wa, wb] = weights_after(v, s);
      if (separator_balanced(wa, wb, cfg_, balance_slack(g_, cfg_)) ||
          separator_imbalance(wa, wb, cfg_.target_ratio) < cur - 1e-12) {
        return first;
      }
      queue_[s].erase(v, gain_[s][v]);
      in_queue_[s][v] = false;
    }
  }

  void apply(VertexId v, std::size_t to) {
    const Side to_side = to == kSideA ? Side::kA : Side::kB;
    const Side from_side = opposite(to_side);
    const std::size_t other = 1 - to;

    dequeue(v);
    locked_[v] = true;
    sep_.side_of[v] = to_side;
    sep_.weight[2] -= g_.weight(v);
    sep_.cost_s -= g_.cost(v);
    sep_.weight[to] += g_.weight(v);

    // v joined `to`: separator neighbors now pay for it when moving away.
    for (VertexId u : g_.neighbors(v)) {
      if (side(u) == Side::kS) adjust_gain(u, other, -g_.cost(v));
    }

    Move m{v, to, pulled_.size(), 0};
    for (VertexId u : g_.neighbors(v)) {
      if (side(u) != from_side) continue;
      sep_.side_of[u] = Side::kS;
      sep_.weight[other] -= g_.weight(u);
      sep_.weight[2] += g_.weight(u);
      sep_.cost_s += g_.cost(u);
      pulled_.push_back(u);
      // u left the opposite side: separator neighbors moving to `to` no
      // longer pull it.
      for (VertexId x : g_.neighbors(u)) {
        if (side(x) == Side::kS && x != u) adjust_gain(x, to, g_.cost(u));
      }
      enqueue(u);
    }
    m.pulled_end = pulled_.size();
    moves_.push_back(m);
  }

  void undo(const Move& m) {
    const Side from_side = m.to == kSideA ? Side::kB : Side::kA;
    const std::size_t other = 1 - m.to;
    for (std::size_t i = m.pulled_begin; i < m.pulled_end; ++i) {
      VertexId u = pulled_[i];
      sep_.side_of[u] = from_side;
      sep_.weight[2] -= g_.weight(u);
      sep_.cost_s -= g_.cost(u);
      sep_.weight[other] += g_.weight(u);
    }
    pulled_.resize(m.pulled_begin);
    VertexId v = m.vertex;
    sep_.side_of[v] = Side::kS;
    sep_.weight[m.to] -= g_.weight(v);
    sep_.weight[2] += g_.weight(v);
    sep_.cost_s += g_.cost(v);
  }

  const CsrGraph& g_;
  Separator& sep_;
  const GpvsConfig& cfg_;
  std::vector<Weight> gain_[2];
  std::vector<bool> in_queue_[2];
  std::vector<bool> locked_;
  GainQueue queue_[2];
  std::vector<Move> moves_;
  std::vector<VertexId> pulled_;
};

}  // namespace

Separator refine(const CsrGraph& g, Separator sep, const GpvsConfig& cfg) {
  if (!sep.separates(g)) throw InvalidSeparator("refine: input has an A-B edge");
  sep.recompute(g);
  SeparatorFm fm(g, sep, cfg);
  for (int p = 0; p < cfg.max_refine_passes; ++p) {
    if (!fm.pass()) break;
  }
  return sep;
}

}  // namespace nigpart
