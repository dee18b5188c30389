#include <algorithm>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "nigpart/nig.hpp"
#include "nigpart/oracle.hpp"
#include "nigpart/random_instances.hpp"

namespace nigpart::cli {

namespace {

std::vector<std::pair<NetId, NetId>> nig_edges(const NigGraph& g) {
  std::vector<std::pair<NetId, NetId>> edges;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.graph.neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::string check_nig(std::mt19937_64& rng, int max_size) {
  RandomHypergraphSpec spec;
  spec.max_vertices = max_size;
  spec.max_nets = std::min(max_size, static_cast<int>(kMaxOracleNigNets));
  spec.max_net_size = std::max(1, max_size / 2);
  Hypergraph h = random_hypergraph(rng, spec);
  if (nig_edges(build_nig(h)) != pairwise_nig(h)) return "NIG edge set differs from pairwise oracle";
  return {};
}

std::string check_gpvs(std::mt19937_64& rng, int max_size) {
  const VertexId n = std::uniform_int_distribution<VertexId>(
      1, std::min<VertexId>(max_size, kMaxOracleSeparatorVertices))(rng);
  const double p = std::uniform_real_distribution<double>(0.0, 0.4)(rng);
  CsrGraph g = random_connected_graph(rng, n, p);
  GpvsConfig cfg;
  cfg.epsilon = 0.2;
  cfg.coarsen_until = 4;
  cfg.rng_seed = rng();
  std::string problem;
  Separator sep = find_separator(g, cfg, [&](std::size_t level, const CsrGraph& lg, const Separator& s) {
    if (problem.empty() && !s.separates(lg)) problem = "A-B edge at level " + std::to_string(level);
    if (problem.empty() && !s.weights_match(lg)) problem = "weight mismatch at level " + std::to_string(level);
    if (problem.empty() && s.weight_a() + s.weight_b() + s.weight_s() != lg.total_weight()) {
      problem = "weight not conserved at level " + std::to_string(level);
    }
  });
  if (!problem.empty()) return problem;
  if (!sep.separates(g)) return "final separator has an A-B edge";
  OracleResult opt = optimal_separator(g, cfg.epsilon);
  if (separator_balanced(sep.weight_a(), sep.weight_b(), cfg, g.max_weight()) && sep.cost_s < opt.best_sep_weight) {
    return "balanced separator beats the exhaustive optimum";
  }
  return {};
}

std::string check_hp(std::mt19937_64& rng, int max_size) {
  RandomHypergraphSpec spec;
  spec.max_vertices = std::min<VertexId>(max_size, kMaxOracleBipartitionVertices);
  spec.max_nets = std::max(1, max_size);
  spec.max_net_size = 4;
  Hypergraph h = random_hypergraph(rng, spec);
  RbConfig cfg;
  cfg.k = 2;
  cfg.rng_seed = rng();
  for (Metric metric : {Metric::kCutnet, Metric::kConnectivity}) {
    cfg.metric = metric;
    PartitionResult res = partition(h, cfg);
    if (!res.partition.complete()) return "unassigned vertex";
    const Weight sep_cost = res.tree.total_separator_cost();
    if (metric == Metric::kCutnet) {
      auto seps = res.tree.separator_nets();
      for (NetId n = 0; n < h.num_nets(); ++n) {
        if (res.report.is_cut(n) && !std::binary_search(seps.begin(), seps.end(), n)) {
          return "cut net " + std::to_string(n) + " is not a separator net";
        }
      }
      if (res.report.cutnet_cost > sep_cost) return "cutnet cost exceeds separator cost";
      const double eps = std::max(0.1, res.report.max_imbalance_vertex);
      OracleResult opt = optimal_bipartition(h, eps + 1e-9);
      if (opt.feasible && res.report.cutnet_cost < opt.best_cutnet) {
        return "partition beats the exhaustive optimum at its own balance";
      }
    } else if (res.report.connectivity_minus1_cost > sep_cost) {
      return "connectivity-1 cost exceeds separator cost";
    }
  }
  return {};
}

}  // namespace

VerifyOutcome run_verify_suite(const std::string& suite, std::size_t count, int max_size,
                               std::uint64_t seed) {
  VerifyOutcome out;
  if (max_size <= 0) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::string problem;
    try {
      if (suite == "nig") {
        problem = check_nig(rng, max_size);
      } else if (suite == "gpvs") {
        problem = check_gpvs(rng, max_size);
      } else if (suite == "hp") {
        problem = check_hp(rng, max_size);
      } else {
        throw ConfigError("unknown suite " + suite);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    ++out.total;
    if (problem.empty()) {
      ++out.passed;
    } else {
      out.failures.push_back(suite + " instance " + std::to_string(i) + ": " + problem);
    }
  }
  return out;
}

}  // namespace nigpart::cli
