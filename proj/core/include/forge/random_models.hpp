#pragma once

#include <cstdint>
#include <vector>

#include "forge/multigraph.hpp"
#include "forge/rng.hpp"

namespace forge {

// Uniform matching on the n*d half-edges; d-regular counting loops twice.
MultiGraph sample_configuration_model(std::size_t n, int d, RngSpec rng);

// Keep each edge copy independently with probability p (loops are one trial).
MultiGraph percolate(const MultiGraph& h, double p, RngSpec rng);

// Percolated (d-1)-ary tree from the root: Z[l] = number of depth-l vertices
// still connected to the root.  Returns the profile Z_0..Z_depth.
std::vector<long long> sample_branching_tree(int d, double p, int depth, RngSpec rng);

struct BranchingStats {
  int d = 0;
  double p = 0;
  int depth = 0;
  long long trials = 0;
  std::vector<double> normalized_sizes;  // Z_depth / (p(d-1))^depth per trial
  double mean = 0;
  double variance = 0;
  struct Tail {
    double x;
    long long count;  // trials with normalized size >= x
  };
  std::vector<Tail> tail_counts;  // x-grid {1,2,4,8}
  bool subcritical_warning = false;  // p <= 1/sqrt(d-1)
};

BranchingStats kesten_stigum_stats(int d, double p, int depth, long long trials,
                                   RngSpec rng);

struct OrientedEdge {
  Vertex tail = 0;
  Vertex head = 0;
  EdgeId id = 0;  // underlying undirected edge
};

// One resampling datum around a center: the boundary edges (l_a, a_a) of the
// radius-ell ball, uniformly drawn partner edges (b_a, c_a) off the ball, and
// the admissible index set W.
struct ResamplingData {
  Vertex o = 0;
  int ell = 0;
  int R = 4;  // indicator radius parameter (balls of radius R/4)
  std::vector<OrientedEdge> boundary;
  std::vector<OrientedEdge> partners;
  std::vector<std::size_t> W;
  std::vector<Vertex> T_vertices;  // ball vertex set, sorted
};

// R < 0 selects the floor default R = 4.
ResamplingData build_resampling_data(const MultiGraph& g, const std::vector<Vertex>& V0,
                                     Vertex o, int ell, RngSpec rng, int R = -1);

// Admissibility of index alpha: the R/4-ball of {a,b,c} in g minus the center
// ball, plus the edge {a,b}, is a tree; and every other triple is further
// than R/4 away in that graph.
bool switch_indicator(const MultiGraph& g, const ResamplingData& data, std::size_t alpha);

// For each alpha in W replace {l,a},{b,c} by {l,c},{a,b}; degrees and the
// center ball are preserved (asserted).  Edge ids are kept stable: the new
// {l,c} sits at the old boundary id and {a,b} at the old partner id.
MultiGraph apply_local_resampling(const MultiGraph& g, const ResamplingData& data);

// Reversal datum on the switched graph: boundary (l,c), partner (b,a); W is
// recomputed from the indicator (and equals data.W on admissible draws).
ResamplingData build_reversed_data(const MultiGraph& g_switched,
                                   const std::vector<Vertex>& V0,
                                   const ResamplingData& data);

}  // namespace forge
