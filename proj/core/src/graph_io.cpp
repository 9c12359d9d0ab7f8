#include "forge/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace forge {

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  auto es = g.edges();
  for (auto& [u, v] : es)
    if (u > v) std::swap(u, v);
  std::sort(es.begin(), es.end());
  out << "d-regular-multigraph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const MultiGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_edge_list(out, g);
}

MultiGraph read_edge_list(std::istream& in) {
  std::string magic;
  std::size_t n = 0, m = 0;
  if (!(in >> magic >> n >> m) || magic != "d-regular-multigraph")
    throw std::runtime_error("bad edge-list header");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vertex u, v;
    if (!(in >> u >> v)) throw std::runtime_error("truncated edge list");
    edges.emplace_back(u, v);
  }
  return MultiGraph(n, std::move(edges));
}

MultiGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_edge_list(in);
}

std::uint64_t graph_fingerprint(const MultiGraph& g) {
  auto es = g.edges();
  for (auto& [u, v] : es)
    if (u > v) std::swap(u, v);
  std::sort(es.begin(), es.end());
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(g.vertex_count());
  mix(g.edge_count());
  for (const auto& [u, v] : es) {
    mix(u);
    mix(v);
  }
  return h;
}

}  // namespace forge
