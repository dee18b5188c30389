#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "nigpart/graph.hpp"

namespace nigpart {

enum class Side : std::uint8_t { kA = 0, kB = 1, kS = 2 };

inline Side opposite(Side s) { return s == Side::kA ? Side::kB : Side::kA; }

// Three-way labeling (A, B, S) of graph vertices. Weights are balance
// weights per label; cost_s is the separator objective.
struct Separator {
  std::vector<Side> side_of;
  std::array<Weight, 3> weight{0, 0, 0};
  Weight cost_s = 0;

  Weight weight_a() const { return weight[0]; }
  Weight weight_b() const { return weight[1]; }
  Weight weight_s() const { return weight[2]; }

  static Separator from_labels(const CsrGraph& g, std::vector<Side> labels);
  void recompute(const CsrGraph& g);

  // No edge joins an A vertex to a B vertex.
  bool separates(const CsrGraph& g) const;
  // Stored weights agree with a recount from side_of.
  bool weights_match(const CsrGraph& g) const;
};

struct GpvsConfig {
  double epsilon = 0.10;
  VertexId coarsen_until = 100;
  int num_initial_tries = 4;
  int max_refine_passes = 10;
  std::uint64_t rng_seed = 1;
  // Desired weight_A / (weight_A + weight_B).
  double target_ratio = 0.5;
  // Per-side allowance added to the balance bound. Negative means the
  // heaviest vertex of the graph at hand; find_separator pins it to the
  // input graph so coarse levels are not judged more loosely.
  Weight balance_slack = -1;
};

// Relative overload of the heavier of A and B against its target share;
// S does not take part. Zero when A and B are both empty.
double separator_imbalance(Weight a, Weight b, double target_ratio);

// A and B each stay within (1+epsilon) of their target share of a+b, plus
// `slack` (the heaviest vertex weight of the graph, so that tiny and coarse
// graphs are not held to a bound their granularity cannot meet).
bool separator_balanced(Weight a, Weight b, const GpvsConfig& cfg, Weight slack = 0);

// Ranking of candidate separators: balanced before unbalanced; among
// balanced ones cheaper first, then better balance; among unbalanced ones
// better balance first, then cheaper.
bool separator_better(const Separator& x, const Separator& y, const GpvsConfig& cfg,
                      Weight slack);

inline Weight balance_slack(const CsrGraph& g, const GpvsConfig& cfg) {
  return cfg.balance_slack >= 0 ? cfg.balance_slack : g.max_weight();
}

struct CoarseLevel {
  CsrGraph graph;
  // Maps vertices of the previous (finer) level to this level. Empty for
  // level 0, which holds the input graph.
  std::vector<VertexId> fine_to_coarse;
};

// Heavy-edge matching hierarchy, finest first.
std::vector<CoarseLevel> coarsen(const CsrGraph& g, const GpvsConfig& cfg);

// Best of 2 * cfg.num_initial_tries candidates (an edge bisection with its
// cut covered, and a grown A with S as its frontier, per try), each cleaned up
// by refine() before comparison.
Separator initial_separator(const CsrGraph& g, const GpvsConfig& cfg);

// FM-style separator refinement. Never increases cost_s.
Separator refine(const CsrGraph& g, Separator sep, const GpvsConfig& cfg);

// Called after the initial separator and after every projection+refine
// step; level 0 is the input graph.
using SeparatorTrace = std::function<void(std::size_t level, const CsrGraph&, const Separator&)>;

// Multilevel driver. An unbalanced projection is compared against a fresh
// initial separator of the finer level, since coarse levels of dense graphs
// may admit no balanced separator at all.
Separator find_separator(const CsrGraph& g, const GpvsConfig& cfg,
                         const SeparatorTrace& trace = {});

// splitmix64 finalizer; derives independent seeds from (seed, salt).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace nigpart
