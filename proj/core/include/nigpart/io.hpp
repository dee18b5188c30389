#pragma once

#include <filesystem>
#include <iosfwd>
#include <utility>
#include <vector>

#include "nigpart/hypergraph.hpp"

namespace nigpart {

// Nonzero structure of a sparse matrix, 0-based, sorted row-major and
// duplicate free.
struct SparseMatrixPattern {
  std::int32_t rows = 0;
  std::int32_t cols = 0;
  std::vector<std::pair<std::int32_t, std::int32_t>> entries;

  std::size_t nnz() const { return entries.size(); }

  // Sorts and removes duplicate coordinates.
  void normalize();
  friend bool operator==(const SparseMatrixPattern&, const SparseMatrixPattern&) = default;
};

SparseMatrixPattern transpose(const SparseMatrixPattern& m);

// Matrix Market coordinate reader. Values are discarded; symmetric,
// skew-symmetric and hermitian files are expanded to both triangles.
SparseMatrixPattern read_matrix_market(std::istream& in);
SparseMatrixPattern read_matrix_market(const std::filesystem::path& path);
void write_matrix_market(const SparseMatrixPattern& m, std::ostream& out);

// Rows become vertices and columns become nets. Vertex weight is the row
// nonzero count unless unit_weights is set; net costs are 1.
Hypergraph column_net_model(const SparseMatrixPattern& m, bool unit_weights = false);
// Columns become vertices and rows become nets.
Hypergraph row_net_model(const SparseMatrixPattern& m, bool unit_weights = false);

// Text hypergraph format:
//   B V N P F          index base, vertices, nets, pins, weight flags
//   [cost] pin pin ... one line per net (cost present when F & 1)
//   w                  one line per vertex (present when F & 2)
// Lines starting with '%' are comments.
Hypergraph read_hypergraph_text(std::istream& in);
Hypergraph read_hypergraph_text(const std::filesystem::path& path);
void write_hypergraph_text(const Hypergraph& h, std::ostream& out, int index_base = 1);
void write_hypergraph_text(const Hypergraph& h, const std::filesystem::path& path,
                           int index_base = 1);

}  // namespace nigpart
