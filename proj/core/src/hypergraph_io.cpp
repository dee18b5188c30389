#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "nigpart/io.hpp"

namespace nigpart {

namespace {

// Returns false at end of input. Comment lines are skipped; blank lines are
// returned because an empty net is written as an empty line.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '%') continue;
    return true;
  }
  return false;
}

bool next_nonblank_line(std::istream& in, std::string& line) {
  while (next_line(in, line)) {
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Hypergraph read_hypergraph_text(std::istream& in) {
  std::string line;
  if (!next_nonblank_line(in, line)) throw FormatError("hypergraph: missing header");
  long long base = 0, nv = 0, nn = 0, np = 0, flags = 0;
  {
    std::istringstream header(line);
    if (!(header >> base >> nv >> nn >> np)) throw FormatError("hypergraph: malformed header");
    if (!(header >> flags)) flags = 0;
    std::string extra;
    if (header >> extra) throw FormatError("hypergraph: trailing data in header");
  }
  if (base != 0 && base != 1) throw FormatError("hypergraph: index base must be 0 or 1");
  if (nv < 0 || nn < 0 || np < 0 || nv > INT32_MAX || nn > INT32_MAX) {
    throw FormatError("hypergraph: bad counts in header");
  }
  if (flags < 0 || flags > 3) throw FormatError("hypergraph: flags must be in [0,3]");
  const bool has_costs = (flags & 1) != 0;
  const bool has_weights = (flags & 2) != 0;

  std::vector<Pin> pins;
  pins.reserve(static_cast<std::size_t>(np));
  std::vector<Weight> costs(static_cast<std::size_t>(nn), 1);
  for (long long n = 0; n < nn; ++n) {
    if (!next_line(in, line)) {
      throw FormatError("hypergraph: expected " + std::to_string(nn) + " net lines, found " +
                        std::to_string(n));
    }
    std::istringstream net(line);
    if (has_costs) {
      long long c = 0;
      if (!(net >> c)) throw FormatError("hypergraph: net " + std::to_string(n) + " lacks a cost");
      if (c < 0) throw FormatError("hypergraph: negative cost on net " + std::to_string(n));
      costs[n] = c;
    }
    long long v = 0;
    while (net >> v) {
      v -= base;
      if (v < 0 || v >= nv) {
        throw FormatError("hypergraph: pin " + std::to_string(v + base) + " on net " +
                          std::to_string(n) + " out of range");
      }
      pins.push_back({static_cast<NetId>(n), static_cast<VertexId>(v)});
    }
    if (!net.eof()) throw FormatError("hypergraph: non-numeric token on net line");
  }
  if (static_cast<long long>(pins.size()) != np) {
    throw FormatError("hypergraph: header declares " + std::to_string(np) + " pins, nets list " +
                      std::to_string(pins.size()));
  }

  std::vector<Weight> weights(static_cast<std::size_t>(nv), 1);
  if (has_weights) {
    for (long long v = 0; v < nv; ++v) {
      if (!next_nonblank_line(in, line)) throw FormatError("hypergraph: missing vertex weights");
      std::istringstream w(line);
      long long x = 0;
      if (!(w >> x) || x < 0) throw FormatError("hypergraph: bad weight for vertex " + std::to_string(v));
      weights[v] = x;
    }
  }
  if (next_nonblank_line(in, line)) throw FormatError("hypergraph: trailing data after last section");

  return Hypergraph::build(static_cast<VertexId>(nv), static_cast<NetId>(nn), pins,
                           std::move(weights), std::move(costs));
}

Hypergraph read_hypergraph_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_hypergraph_text(in);
}

void write_hypergraph_text(const Hypergraph& h, std::ostream& out, int index_base) {
  bool has_costs = false;
  for (Weight c : h.net_costs()) has_costs |= (c != 1);
  bool has_weights = false;
  for (Weight w : h.vertex_weights()) has_weights |= (w != 1);
  const int flags = (has_costs ? 1 : 0) | (has_weights ? 2 : 0);

  out << index_base << ' ' << h.num_vertices() << ' ' << h.num_nets() << ' ' << h.num_pins()
      << ' ' << flags << '\n';
  for (NetId n = 0; n < h.num_nets(); ++n) {
    bool first = true;
    if (has_costs) {
      out << h.net_cost(n);
      first = false;
    }
    for (VertexId v : h.pins(n)) {
      if (!first) out << ' ';
      out << v + index_base;
      first = false;
    }
    out << '\n';
  }
  if (has_weights) {
    for (VertexId v = 0; v < h.num_vertices(); ++v) out << h.vertex_weight(v) << '\n';
  }
}

void write_hypergraph_text(const Hypergraph& h, const std::filesystem::path& path,
                           int index_base) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  write_hypergraph_text(h, out, index_base);
}

}  // namespace nigpart
