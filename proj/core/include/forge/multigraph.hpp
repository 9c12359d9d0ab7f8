#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

namespace forge {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Sentinel for "no finite distance / acyclic".
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/**
   Finite multigraph with loops and parallel edges.

   Edges are stored as an indexed multiset of unordered pairs; each vertex
   keeps the list of incident edge ids (a loop appears once in its endpoint's
   list but contributes 2 to the degree).  Immutable after construction.
 */
class MultiGraph {
public:
  MultiGraph() = default;
  MultiGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

  static MultiGraph from_edge_list(std::size_t n,
                                   const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return MultiGraph(n, edges);
  }

  std::size_t vertex_count() const { return incident_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::pair<Vertex, Vertex>& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  bool is_loop(EdgeId e) const { return edges_[e].first == edges_[e].second; }

  // Incident edge ids (loops listed once).
  const std::vector<EdgeId>& incident_edges(Vertex v) const { return incident_[v]; }
  // The endpoint of e that is not v (v itself for a loop).
  Vertex other_endpoint(EdgeId e, Vertex v) const {
    const auto& [a, b] = edges_[e];
    return a == v ? b : a;
  }

  // Loops count twice.
  int degree(Vertex v) const { return degree_[v]; }
  int max_degree() const;

  // Neighbor multiset: loops once per loop, parallel edges repeated.
  std::vector<Vertex> neighbors(Vertex v) const;

  // Edge multiset equality (order-insensitive).
  bool same_edge_multiset(const MultiGraph& other) const;

private:
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<int> degree_;
};

/**
   Metric ball around a center set, with the induced edge set.
 */
struct BfsBall {
  std::vector<Vertex> centers;
  int radius = 0;
  std::vector<Vertex> vertices;            // sorted
  std::vector<EdgeId> edges;               // induced edges, each id once
  std::unordered_map<Vertex, int> distance_map;
  int components = 0;                      // of the induced subgraph

  bool contains(Vertex v) const { return distance_map.count(v) != 0; }
  // |E| - |V| + #components: number of independent cycles in the ball.
  long long excess() const {
    return static_cast<long long>(edges.size()) -
           static_cast<long long>(vertices.size()) + components;
  }
};

BfsBall bfs_ball(const MultiGraph& g, const std::vector<Vertex>& centers, int r);

// Length of the shortest cycle: loops count 1, parallel pairs 2, kInfinity on forests.
int girth(const MultiGraph& g);

struct TangleReport {
  bool tangle_free = true;
  std::vector<Vertex> offending_centers;  // balls with excess > 1
};
TangleReport is_tangle_free(const MultiGraph& g, int r);

int distance(const MultiGraph& g, const std::vector<Vertex>& a,
             const std::vector<Vertex>& b);

struct DeletionResult {
  MultiGraph graph;                    // induced subgraph on the complement
  std::vector<std::int64_t> old_to_new;  // -1 for deleted vertices
  std::vector<Vertex> new_to_old;
};
DeletionResult delete_vertices(const MultiGraph& g, const std::vector<Vertex>& to_delete);

}  // namespace forge
