#include "nigpart/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nigpart {

Hypergraph Hypergraph::build(VertexId num_vertices, NetId num_nets,
                             std::span<const Pin> pins,
                             std::vector<Weight> vertex_weights,
                             std::vector<Weight> net_costs) {
  if (num_vertices < 0 || num_nets < 0) {
    throw InvalidPin("negative vertex or net count");
  }
  if (vertex_weights.empty()) vertex_weights.assign(num_vertices, 1);
  if (net_costs.empty()) net_costs.assign(num_nets, 1);
  if (vertex_weights.size() != static_cast<std::size_t>(num_vertices)) {
    throw InvalidWeight("vertex weight count does not match vertex count");
  }
  if (net_costs.size() != static_cast<std::size_t>(num_nets)) {
    throw InvalidWeight("net cost count does not match net count");
  }
  for (VertexId v = 0; v < num_vertices; ++v) {
    if (vertex_weights[v] < 0) {
      throw InvalidWeight("negative weight on vertex " + std::to_string(v));
    }
  }
  for (NetId n = 0; n < num_nets; ++n) {
    if (net_costs[n] < 0) throw InvalidWeight("negative cost on net " + std::to_string(n));
  }

  Hypergraph h;
  h.num_vertices_ = num_vertices;
  h.num_nets_ = num_nets;

  // Counting sort by net, then sort + unique inside each net.
  std::vector<std::size_t> begin(num_nets + 1, 0);
  for (const Pin& p : pins) {
    if (p.net < 0 || p.net >= num_nets || p.vertex < 0 || p.vertex >= num_vertices) {
      throw InvalidPin("pin (" + std::to_string(p.net) + "," + std::to_string(p.vertex) +
                       ") out of range");
    }
    ++begin[p.net + 1];
  }
  std::partial_sum(begin.begin(), begin.end(), begin.begin());
  std::vector<VertexId> raw(pins.size());
  {
    std::vector<std::size_t> fill(begin.begin(), begin.end() - 1);
    for (const Pin& p : pins) raw[fill[p.net]++] = p.vertex;
  }
  h.net_begin_.assign(num_nets + 1, 0);
  h.net_pins_.reserve(raw.size());
  for (NetId n = 0; n < num_nets; ++n) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(begin[n]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(begin[n + 1]);
    std::sort(first, last);
    auto uend = std::unique(first, last);
    h.duplicate_pins_ += static_cast<std::size_t>(last - uend);
    h.net_pins_.insert(h.net_pins_.end(), first, uend);
    h.net_begin_[n + 1] = h.net_pins_.size();
  }

  // Transpose. Visiting nets in increasing order keeps vertex lists sorted.
  h.vertex_begin_.assign(num_vertices + 1, 0);
  for (VertexId v : h.net_pins_) ++h.vertex_begin_[v + 1];
  std::partial_sum(h.vertex_begin_.begin(), h.vertex_begin_.end(), h.vertex_begin_.begin());
  h.vertex_nets_.resize(h.net_pins_.size());
  std::vector<std::size_t> fill(h.vertex_begin_.begin(), h.vertex_begin_.end() - 1);
  for (NetId n = 0; n < num_nets; ++n) {
    for (VertexId v : h.pins(n)) h.vertex_nets_[fill[v]++] = n;
  }

  h.vertex_weights_ = std::move(vertex_weights);
  h.net_costs_ = std::move(net_costs);
  h.total_vertex_weight_ =
      std::accumulate(h.vertex_weights_.begin(), h.vertex_weights_.end(), Weight{0});
  return h;
}

void Hypergraph::check_consistency() const {
  auto fail = [](const std::string& what) { throw ConsistencyError("hypergraph: " + what); };
  if (net_begin_.size() != static_cast<std::size_t>(num_nets_) + 1) fail("net offsets");
  if (vertex_begin_.size() != static_cast<std::size_t>(num_vertices_) + 1) fail("vertex offsets");
  if (net_pins_.size() != vertex_nets_.size()) fail("pin counts differ between directions");
  for (NetId n = 0; n < num_nets_; ++n) {
    auto p = pins(n);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= num_vertices_) fail("pin out of range");
      if (i > 0 && p[i - 1] >= p[i]) fail("pin list not strictly sorted");
      auto vn = nets(p[i]);
      if (!std::binary_search(vn.begin(), vn.end(), n)) fail("transpose mismatch");
    }
  }
  for (VertexId v = 0; v < num_vertices_; ++v) {
    auto vn = nets(v);
    for (std::size_t i = 1; i < vn.size(); ++i) {
      if (vn[i - 1] >= vn[i]) fail("net list not strictly sorted");
    }
  }
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  return a.num_vertices_ == b.num_vertices_ && a.num_nets_ == b.num_nets_ &&
         a.net_begin_ == b.net_begin_ && a.net_pins_ == b.net_pins_ &&
         a.vertex_weights_ == b.vertex_weights_ && a.net_costs_ == b.net_costs_;
}

PartitionVector::PartitionVector(const Hypergraph& h, PartId k)
    : k_(k), part_of_(h.num_vertices(), kUnassigned), part_weights_(k, 0) {
  if (k < 1) throw ConfigError("number of parts must be at least 1");
}

PartitionVector PartitionVector::from_parts(const Hypergraph& h, PartId k,
                                            std::vector<PartId> part_of) {
  if (part_of.size() != static_cast<std::size_t>(h.num_vertices())) {
    throw IncompletePartition("partition has " + std::to_string(part_of.size()) +
                              " entries, hypergraph has " +
                              std::to_string(h.num_vertices()) + " vertices");
  }
  PartitionVector pv(h, k);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    PartId p = part_of[v];
    if (p == kUnassigned) continue;
    if (p < 0 || p >= k) {
      throw ConfigError("part id " + std::to_string(p) + " outside [0," + std::to_string(k) + ")");
    }
    pv.assign(v, p, h.vertex_weight(v));
  }
  return pv;
}

void PartitionVector::assign(VertexId v, PartId p, Weight w) {
  part_of_[v] = p;
  part_weights_[p] += w;
}

void PartitionVector::move(VertexId v, PartId to, Weight w) {
  part_weights_[part_of_[v]] -= w;
  part_of_[v] = to;
  part_weights_[to] += w;
}

bool PartitionVector::complete() const {
  return std::none_of(part_of_.begin(), part_of_.end(),
                      [](PartId p) { return p == kUnassigned; });
}

void PartitionVector::canonicalize() {
  std::vector<PartId> relabel(k_, kUnassigned);
  PartId next = 0;
  for (PartId p : part_of_) {
    if (p != kUnassigned && relabel[p] == kUnassigned) relabel[p] = next++;
  }
  for (PartId p = 0; p < k_; ++p) {
    if (relabel[p] == kUnassigned) relabel[p] = next++;
  }
  std::vector<Weight> weights(k_, 0);
  for (PartId p = 0; p < k_; ++p) weights[relabel[p]] = part_weights_[p];
  for (PartId& p : part_of_) {
    if (p != kUnassigned) p = relabel[p];
  }
  part_weights_ = std::move(weights);
}

double imbalance_ratio(std::span<const Weight> per_part) {
  if (per_part.empty()) return 0.0;
  Weight total = 0;
  Weight heaviest = 0;
  for (Weight w : per_part) {
    total += w;
    heaviest = std::max(heaviest, w);
  }
  if (total == 0) return 0.0;
  const double average = static_cast<double>(total) / static_cast<double>(per_part.size());
  return static_cast<double>(heaviest) / average - 1.0;
}

CutReport evaluate(const Hypergraph& h, const PartitionVector& pv) {
  if (pv.k() < 1) throw ConfigError("number of parts must be at least 1");
  if (pv.size() != static_cast<std::size_t>(h.num_vertices())) {
    throw IncompletePartition("partition size does not match vertex count");
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (pv[v] == kUnassigned) {
      throw IncompletePartition("vertex " + std::to_string(v) + " is unassigned");
    }
  }

  CutReport r;
  r.lambda_of.assign(h.num_nets(), 0);
  r.internal_nets_per_part.assign(pv.k(), 0);
  r.part_weights.assign(pv.k(), 0);
  for (VertexId v = 0; v < h.num_vertices(); ++v) r.part_weights[pv[v]] += h.vertex_weight(v);

  // Stamp array: seen[p] == n marks part p as already counted for net n.
  std::vector<NetId> seen(pv.k(), -1);
  for (NetId n = 0; n < h.num_nets(); ++n) {
    PartId lambda = 0;
    for (VertexId v : h.pins(n)) {
      PartId p = pv[v];
      if (seen[p] != n) {
        seen[p] = n;
        ++lambda;
      }
    }
    r.lambda_of[n] = lambda;
    if (lambda > 1) {
      r.cutnet_cost += h.net_cost(n);
      r.connectivity_minus1_cost += h.net_cost(n) * (lambda - 1);
    } else if (lambda == 1) {
      ++r.internal_nets_per_part[pv[h.pins(n).front()]];
    }
  }
  r.max_imbalance_vertex = imbalance_ratio(r.part_weights);
  r.max_imbalance_internal_nets = imbalance_ratio(r.internal_nets_per_part);
  return r;
}

}  // namespace nigpart
