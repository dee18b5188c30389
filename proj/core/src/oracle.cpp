#include "nigpart/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace nigpart {

OracleResult optimal_bipartition(const Hypergraph& h, double epsilon) {
  const VertexId n = h.num_vertices();
  if (n > kMaxOracleBipartitionVertices) {
    throw TooLarge("bipartition oracle handles at most 16 vertices, got " + std::to_string(n));
  }
  OracleResult r;
  if (n == 0) {
    r.feasible = true;
    return r;
  }
  std::vector<std::uint32_t> net_mask(h.num_nets(), 0);
  for (NetId e = 0; e < h.num_nets(); ++e) {
    for (VertexId v : h.pins(e)) net_mask[e] |= std::uint32_t{1} << v;
  }
  const double limit = (1.0 + epsilon) * static_cast<double>(h.total_vertex_weight()) / 2.0;
  const std::uint32_t all = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);

  // Bit v set means vertex v is in part 1; bit 0 stays clear.
  for (std::uint32_t mask = 0; mask <= all; mask += 2) {
    Weight w1 = 0;
    for (VertexId v = 1; v < n; ++v) {
      if (mask >> v & 1u) w1 += h.vertex_weight(v);
    }
    const Weight w0 = h.total_vertex_weight() - w1;
    if (static_cast<double>(std::max(w0, w1)) > limit + 1e-9) continue;
    Weight cut = 0;
    for (NetId e = 0; e < h.num_nets(); ++e) {
      const std::uint32_t in1 = net_mask[e] & mask;
      if (in1 != 0 && in1 != net_mask[e]) cut += h.net_cost(e);
    }
    if (!r.feasible || cut < r.best_cutnet) {
      r.feasible = true;
      r.best_cutnet = cut;
      r.best_connectivity = cut;  // lambda - 1 == 1 for every cut net when K = 2
      r.cutnet_witness.assign(n, 0);
      for (VertexId v = 0; v < n; ++v) r.cutnet_witness[v] = static_cast<PartId>(mask >> v & 1u);
      r.connectivity_witness = r.cutnet_witness;
    }
  }
  return r;
}

namespace {

class SeparatorSearch {
 public:
  SeparatorSearch(const CsrGraph& g, double epsilon, double target)
      : g_(g), epsilon_(epsilon), target_(target), label_(g.num_vertices(), Side::kA) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) slack_ = std::max(slack_, g.weight(v));
  }

  OracleResult run() {
    descend(0, 0, 0, 0);
    return result_;
  }

 private:
  // Each side within (1+eps) of its share of a+b, plus one heaviest vertex.
  bool balanced(Weight a, Weight b) const {
    const auto t = static_cast<double>(a + b);
    const auto slack = static_cast<double>(slack_);
    return static_cast<double>(a) <= (1.0 + epsilon_) * target_ * t + slack + 1e-9 &&
           static_cast<double>(b) <= (1.0 + epsilon_) * (1.0 - target_) * t + slack + 1e-9;
  }

  void descend(VertexId v, Weight a, Weight b, Weight cost) {
    if (result_.feasible && cost > result_.best_sep_weight) return;
    if (v == g_.num_vertices()) {
      if (!balanced(a, b)) return;
      if (!result_.feasible || cost < result_.best_sep_weight) {
        result_.feasible = true;
        result_.best_sep_weight = cost;
        result_.separator_witness = label_;
      }
      return;
    }
    for (Side s : {Side::kA, Side::kB, Side::kS}) {
      if (s != Side::kS) {
        const Side forbidden = s == Side::kA ? Side::kB : Side::kA;
        bool ok = true;
        for (VertexId u : g_.neighbors(v)) {
          if (u < v && label_[u] == forbidden) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      label_[v] = s;
      descend(v + 1, a + (s == Side::kA ? g_.weight(v) : 0), b + (s == Side::kB ? g_.weight(v) : 0),
              cost + (s == Side::kS ? g_.cost(v) : 0));
    }
    label_[v] = Side::kA;
  }

  const CsrGraph& g_;
  double epsilon_;
  double target_;
  Weight slack_ = 0;
  std::vector<Side> label_;
  OracleResult result_;
};

}  // namespace

OracleResult optimal_separator(const CsrGraph& g, double epsilon, double target_ratio) {
  if (g.num_vertices() > kMaxOracleSeparatorVertices) {
    throw TooLarge("separator oracle handles at most 12 vertices, got " +
                   std::to_string(g.num_vertices()));
  }
  return SeparatorSearch(g, epsilon, target_ratio).run();
}

std::vector<std::pair<NetId, NetId>> pairwise_nig(const Hypergraph& h) {
  if (h.num_nets() > kMaxOracleNigNets) {
    throw TooLarge("pairwise NIG oracle handles at most 64 nets, got " +
                   std::to_string(h.num_nets()));
  }
  std::vector<std::pair<NetId, NetId>> edges;
  for (NetId i = 0; i < h.num_nets(); ++i) {
    for (NetId j = i + 1; j < h.num_nets(); ++j) {
      auto a = h.pins(i);
      auto b = h.pins(j);
      bool shared = false;
      for (VertexId x : a) {
        for (VertexId y : b) shared |= (x == y);
      }
      if (shared) edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace nigpart
