#include <vector>

#include "nigpart/io.hpp"

namespace nigpart {

Hypergraph column_net_model(const SparseMatrixPattern& m, bool unit_weights) {
  std::vector<Pin> pins;
  pins.reserve(m.entries.size());
  std::vector<Weight> weights(m.rows, unit_weights ? 1 : 0);
  for (auto [i, j] : m.entries) {
    pins.push_back({j, i});
    if (!unit_weights) ++weights[i];
  }
  return Hypergraph::build(m.rows, m.cols, pins, std::move(weights));
}

Hypergraph row_net_model(const SparseMatrixPattern& m, bool unit_weights) {
  return column_net_model(transpose(m), unit_weights);
}

}  // namespace nigpart
