#include "eg/multigraph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace eg {

void validate(const MultiGraph& g) {
  if (g.p < 1) throw DegenerateInput("graph must have at least one vertex");
  for (int i = 0; i < g.q(); ++i) {
    auto [u, v] = g.edges[i];
    if (u < 0 || u >= g.p || v < 0 || v >= g.p)
      throw DegenerateInput("edge " + std::to_string(i + 1) + " endpoint out of range");
    if (u == v)
      throw DegenerateInput("edge " + std::to_string(i + 1) + " is a loop");
  }
}

std::vector<int> degrees(const MultiGraph& g) {
  std::vector<int> deg(g.p, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

RegularityInfo regularity(const MultiGraph& g) {
  RegularityInfo info;
  const std::vector<int> deg = degrees(g);
  if (!std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg[0]; }))
    return info;
  info.is_regular = true;
  info.degree = deg.empty() ? 0 : deg[0];
  if (info.degree % 2 == 0) info.r = info.degree / 2;
  return info;
}

MultiGraph cycle(int n) {
  if (n < 3) throw DegenerateInput("cycle needs n >= 3");
  MultiGraph g;
  g.p = n;
  g.edges.reserve(n);
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

MultiGraph cycle_power(int n, int k) {
  if (n < 3) throw DegenerateInput("cycle power needs n >= 3");
  if (k < 1) throw DegenerateInput("cycle power needs k >= 1");
  MultiGraph g;
  g.p = n;
  const int max_d = std::min(k, n / 2);
  for (int d = 1; d <= max_d; ++d) {
    // One edge per unordered pair at cycle distance d; the set collapses the
    // antipodal duplicates when n is even and d = n/2.
    std::set<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      int v = (u + d) % n;
      pairs.emplace(std::min(u, v), std::max(u, v));
    }
    g.edges.insert(g.edges.end(), pairs.begin(), pairs.end());
  }
  return g;
}

MultiGraph cartesian_product(const MultiGraph& g, const MultiGraph& h) {
  validate(g);
  validate(h);
  MultiGraph out;
  out.p = g.p * h.p;
  out.edges.reserve(static_cast<size_t>(g.q()) * h.p + static_cast<size_t>(h.q()) * g.p);
  for (int b = 0; b < h.p; ++b)
    for (auto [u, v] : g.edges) out.edges.emplace_back(u * h.p + b, v * h.p + b);
  for (int a = 0; a < g.p; ++a)
    for (auto [x, y] : h.edges) out.edges.emplace_back(a * h.p + x, a * h.p + y);
  return out;
}

MultiGraph disjoint_union(const MultiGraph& g, int k) {
  if (k < 1) throw DegenerateInput("disjoint union needs k >= 1");
  validate(g);
  MultiGraph out;
  out.p = k * g.p;
  out.edges.reserve(static_cast<size_t>(k) * g.q());
  for (int j = 1; j <= k; ++j)
    for (auto [u, v] : g.edges)
      out.edges.emplace_back(union_vertex(g.p, j, u), union_vertex(g.p, j, v));
  return out;
}

}  // namespace eg
