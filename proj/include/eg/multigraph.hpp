#pragma once

#include <utility>
#include <vector>

#include "eg/errors.hpp"

namespace eg {

/// Loopless multigraph on vertices 0..p-1. Edge identity is the position in
/// `edges` (1-based in the text format and in messages); parallel edges are
/// distinct positions with equal endpoint pairs.
struct MultiGraph {
  int p = 0;
  std::vector<std::pair<int, int>> edges;

  int q() const { return static_cast<int>(edges.size()); }
};

/// Throws DegenerateInput unless p >= 1, every endpoint is in [0, p) and no
/// edge is a loop.
void validate(const MultiGraph& g);

std::vector<int> degrees(const MultiGraph& g);

struct RegularityInfo {
  bool is_regular = false;
  int degree = -1;  // common degree when regular
  int r = -1;       // degree / 2 when the common degree is even, else -1
};

RegularityInfo regularity(const MultiGraph& g);

/// The cycle C_n, edges (i, i+1 mod n) in index order. Requires n >= 3.
MultiGraph cycle(int n);

/// C_n with an edge for every vertex pair at cycle distance <= k; each
/// antipodal pair (even n, distance n/2) contributes exactly one edge.
/// Edges ordered by distance, then by smaller endpoint.
MultiGraph cycle_power(int n, int k);

/// Cartesian product. Vertex (a, b) has index a * h.p + b; all g-layer
/// edges come first (by h-vertex, then g-edge index), then the h-layer
/// edges (by g-vertex, then h-edge index).
MultiGraph cartesian_product(const MultiGraph& g, const MultiGraph& h);

/// k disjoint copies; vertex v of copy j (1-based) gets index (j-1)p + v and
/// edge e of copy j gets index (j-1)q + e, so edge order is copy-major.
MultiGraph disjoint_union(const MultiGraph& g, int k);

// Index maps used by disjoint_union; copies are 1-based, vertices and edge
// positions 0-based. All four are total inverses of each other.
inline int union_vertex(int p, int copy_j, int v) { return (copy_j - 1) * p + v; }
inline int union_edge(int q, int copy_j, int e) { return (copy_j - 1) * q + e; }
inline int copy_of_vertex(int p, int uv) { return uv / p + 1; }
inline int base_vertex(int p, int uv) { return uv % p; }
inline int copy_of_edge(int q, int ue) { return ue / q + 1; }
inline int base_edge(int q, int ue) { return ue % q; }

}  // namespace eg
