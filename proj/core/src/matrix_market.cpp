#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "nigpart/io.hpp"

namespace nigpart {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

enum class Symmetry { kGeneral, kSymmetric, kSkew, kHermitian };

}  // namespace

void SparseMatrixPattern::normalize() {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
}

SparseMatrixPattern transpose(const SparseMatrixPattern& m) {
  SparseMatrixPattern t;
  t.rows = m.cols;
  t.cols = m.rows;
  t.entries.reserve(m.entries.size());
  for (auto [i, j] : m.entries) t.entries.emplace_back(j, i);
  t.normalize();
  return t;
}

SparseMatrixPattern read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("matrix market: empty input");
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lowercase(object) != "matrix" ||
      lowercase(format) != "coordinate") {
    throw FormatError("matrix market: expected '%%MatrixMarket matrix coordinate' header");
  }
  field = lowercase(field);
  if (field != "real" && field != "integer" && field != "complex" && field != "pattern") {
    throw FormatError("matrix market: unknown field type '" + field + "'");
  }
  Symmetry sym;
  symmetry = lowercase(symmetry);
  if (symmetry == "general") {
    sym = Symmetry::kGeneral;
  } else if (symmetry == "symmetric") {
    sym = Symmetry::kSymmetric;
  } else if (symmetry == "skew-symmetric") {
    sym = Symmetry::kSkew;
  } else if (symmetry == "hermitian") {
    sym = Symmetry::kHermitian;
  } else {
    throw FormatError("matrix market: unknown symmetry '" + symmetry + "'");
  }

  do {
    if (!std::getline(in, line)) throw FormatError("matrix market: missing size line");
  } while (line.empty() || line[0] == '%');

  long long rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream size(line);
    if (!(size >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0) {
      throw FormatError("matrix market: malformed size line");
    }
  }
  if (rows > INT32_MAX || cols > INT32_MAX) throw FormatError("matrix market: matrix too large");
  if (sym != Symmetry::kGeneral && rows != cols) {
    throw FormatError("matrix market: symmetric matrix must be square");
  }

  SparseMatrixPattern m;
  m.rows = static_cast<std::int32_t>(rows);
  m.cols = static_cast<std::int32_t>(cols);
  m.entries.reserve(static_cast<std::size_t>(sym == Symmetry::kGeneral ? nnz : 2 * nnz));
  long long read = 0;
  while (read < nnz && std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream entry(line);
    long long i = 0, j = 0;
    if (!(entry >> i >> j)) throw FormatError("matrix market: malformed entry '" + line + "'");
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw FormatError("matrix market: entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") outside declared " + std::to_string(rows) + "x" +
                        std::to_string(cols));
    }
    auto r = static_cast<std::int32_t>(i - 1);
    auto c = static_cast<std::int32_t>(j - 1);
    m.entries.emplace_back(r, c);
    if (sym != Symmetry::kGeneral && r != c) m.entries.emplace_back(c, r);
    ++read;
  }
  if (read != nnz) {
    throw FormatError("matrix market: expected " + std::to_string(nnz) + " entries, found " +
                      std::to_string(read));
  }
  m.normalize();
  return m;
}

SparseMatrixPattern read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_matrix_market(in);
}

void write_matrix_market(const SparseMatrixPattern& m, std::ostream& out) {
  out << "%%MatrixMarket matrix coordinate pattern general\n";
  out << m.rows << ' ' << m.cols << ' ' << m.entries.size() << '\n';
  for (auto [i, j] : m.entries) out << i + 1 << ' ' << j + 1 << '\n';
}

}  // namespace nigpart
