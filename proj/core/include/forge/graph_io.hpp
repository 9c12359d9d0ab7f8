#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "forge/multigraph.hpp"

namespace forge {

// Text format: header `d-regular-multigraph <n> <m>`, then m lines `<u> <v>`
// with u <= v, 0-based; loops as `u u`, parallel edges repeated; output lines
// in sorted (u,v) order.  The reader accepts unsorted bodies.
void write_edge_list(std::ostream& out, const MultiGraph& g);
void write_edge_list_file(const std::string& path, const MultiGraph& g);
MultiGraph read_edge_list(std::istream& in);
MultiGraph read_edge_list_file(const std::string& path);

// FNV-1a over (n, m, sorted edge pairs); stable across platforms.
std::uint64_t graph_fingerprint(const MultiGraph& g);

}  // namespace forge
