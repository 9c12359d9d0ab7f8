#include "forge/multigraph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace forge {

MultiGraph::MultiGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges)
    : edges_(std::move(edges)), incident_(n), degree_(n, 0) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    incident_[u].push_back(e);
    if (v != u) incident_[v].push_back(e);
    degree_[u] += (u == v) ? 2 : 1;
    if (v != u) degree_[v] += 1;
  }
  assert(std::accumulate(degree_.begin(), degree_.end(), std::size_t{0}) ==
         2 * edges_.size());
}

int MultiGraph::max_degree() const {
  int m = 0;
  for (int d : degree_) m = std::max(m, d);
  return m;
}

std::vector<Vertex> MultiGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(incident_[v].size());
  for (EdgeId e : incident_[v]) out.push_back(other_endpoint(e, v));
  return out;
}

bool MultiGraph::same_edge_multiset(const MultiGraph& other) const {
  if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count())
    return false;
  auto canon = [](std::vector<std::pair<Vertex, Vertex>> es) {
    for (auto& [u, v] : es)
      if (u > v) std::swap(u, v);
    std::sort(es.begin(), es.end());
    return es;
  };
  return canon(edges_) == canon(other.edges_);
}

BfsBall bfs_ball(const MultiGraph& g, const std::vector<Vertex>& centers, int r) {
  if (centers.empty()) throw std::invalid_argument("bfs_ball: empty center set");
  if (r < 0) throw std::invalid_argument("bfs_ball: negative radius");
  BfsBall ball;
  ball.centers = centers;
  ball.radius = r;
  std::deque<Vertex> queue;
  for (Vertex c : centers) {
    if (!ball.distance_map.count(c)) {
      ball.distance_map[c] = 0;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    int dv = ball.distance_map[v];
    if (dv == r) continue;
    for (EdgeId e : g.incident_edges(v)) {
      Vertex w = g.other_endpoint(e, v);
      if (!ball.distance_map.count(w)) {
        ball.distance_map[w] = dv + 1;
        queue.push_back(w);
      }
    }
  }
  for (const auto& [v, d] : ball.distance_map) ball.vertices.push_back(v);
  std::sort(ball.vertices.begin(), ball.vertices.end());

  // Induced edges and component count via union-find over ball vertices.
  std::unordered_map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) index[ball.vertices[i]] = i;
  std::vector<std::size_t> parent(ball.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex v : ball.vertices) {
    for (EdgeId e : g.incident_edges(v)) {
      auto [a, b] = g.edge(e);
      if (a != v) continue;  // visit each edge id from its first endpoint only
      auto itb = index.find(b);
      if (itb == index.end()) continue;
      ball.edges.push_back(e);
      parent[find(index[a])] = find(itb->second);
    }
  }
  std::sort(ball.edges.begin(), ball.edges.end());
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) ++ball.components;
  return ball;
}

int girth(const MultiGraph& g) {
  // Loops and parallel pairs first.
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) return 1;
  {
    auto es = g.edges();
    for (auto& [u, v] : es)
      if (u > v) std::swap(u, v);
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return 2;
  }
  // Simple-graph girth: BFS from every vertex, tracking the parent edge.
  const std::size_t n = g.vertex_count();
  int best = kInfinity;
  std::vector<int> dist(n);
  std::vector<EdgeId> parent_edge(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (best == 3) break;
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    parent_edge[s] = static_cast<EdgeId>(-1);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      if (best != kInfinity && 2 * dist[v] + 1 >= best) continue;
      for (EdgeId e : g.incident_edges(v)) {
        if (e == parent_edge[v]) continue;
        Vertex w = g.other_endpoint(e, v);
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent_edge[w] = e;
          queue.push_back(w);
        } else if (dist[w] >= dist[v]) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

TangleReport is_tangle_free(const MultiGraph& g, int r) {
  TangleReport report;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    BfsBall ball = bfs_ball(g, {v}, r);
    if (ball.excess() > 1) {
      report.tangle_free = false;
      report.offending_centers.push_back(v);
    }
  }
  return report;
}

int distance(const MultiGraph& g, const std::vector<Vertex>& a,
             const std::vector<Vertex>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("distance: empty vertex set");
  std::vector<char> target(g.vertex_count(), 0);
  for (Vertex v : b) target[v] = 1;
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  for (Vertex v : a) {
    if (target[v]) return 0;
    if (dist[v] == -1) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (EdgeId e : g.incident_edges(v)) {
      Vertex w = g.other_endpoint(e, v);
      if (dist[w] == -1) {
        if (target[w]) return dist[v] + 1;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return kInfinity;
}

DeletionResult delete_vertices(const MultiGraph& g, const std::vector<Vertex>& to_delete) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (Vertex v : to_delete) {
    if (v >= g.vertex_count()) throw std::invalid_argument("delete_vertices: id out of range");
    gone[v] = 1;
  }
  DeletionResult res;
  res.old_to_new.assign(g.vertex_count(), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) {
      res.old_to_new[v] = static_cast<std::int64_t>(res.new_to_old.size());
      res.new_to_old.push_back(v);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (!gone[u] && !gone[v])
      edges.emplace_back(static_cast<Vertex>(res.old_to_new[u]),
                         static_cast<Vertex>(res.old_to_new[v]));
  }
  res.graph = MultiGraph(res.new_to_old.size(), std::move(edges));
  return res;
}

}  // namespace forge
