#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "eg/multigraph.hpp"

using eg::MultiGraph;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

MultiGraph path3() {
  MultiGraph g;
  g.p = 3;
  g.edges = {{0, 1}, {1, 2}};
  return g;
}

}  // namespace

TEST_CASE("cycle builds consecutive edges in index order") {
  const MultiGraph c3 = eg::cycle(3);
  CHECK(c3.p == 3);
  CHECK(c3.edges == EdgeList{{0, 1}, {1, 2}, {2, 0}});

  const MultiGraph c5 = eg::cycle(5);
  CHECK(c5.q() == 5);
  CHECK(c5.edges.back() == std::pair{4, 0});

  CHECK_THROWS_AS(eg::cycle(2), eg::DegenerateInput);
}

TEST_CASE("cycle_power orders edges by distance then smaller endpoint") {
  const MultiGraph k5 = eg::cycle_power(5, 2);
  CHECK(k5.p == 5);
  CHECK(k5.edges == EdgeList{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4},
                             {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
}

TEST_CASE("cycle_power collapses antipodal pairs once") {
  const MultiGraph g = eg::cycle_power(6, 3);
  CHECK(g.q() == 6 + 6 + 3);
  const auto deg = eg::degrees(g);
  CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 5; }));
  const auto reg = eg::regularity(g);
  CHECK(reg.is_regular);
  CHECK(reg.degree == 5);
  CHECK(reg.r == -1);  // odd degree has no r
}

TEST_CASE("cycle_power saturates at the complete graph") {
  const MultiGraph a = eg::cycle_power(5, 2);
  const MultiGraph b = eg::cycle_power(5, 7);
  CHECK(a.edges == b.edges);
  CHECK_THROWS_AS(eg::cycle_power(5, 0), eg::DegenerateInput);
}

TEST_CASE("cycle_power is 2k-regular below the antipodal threshold") {
  for (int n : {7, 9, 11}) {
    for (int k = 1; 2 * k < n; ++k) {
      const auto reg = eg::regularity(eg::cycle_power(n, k));
      CHECK(reg.is_regular);
      CHECK(reg.degree == 2 * k);
      CHECK(reg.r == k);
    }
  }
}

TEST_CASE("cartesian product emits g-layer edges then h-layer edges") {
  const MultiGraph c3 = eg::cycle(3);
  const MultiGraph t = eg::cartesian_product(c3, c3);
  CHECK(t.p == 9);
  CHECK(t.edges == EdgeList{{0, 3}, {3, 6}, {6, 0}, {1, 4}, {4, 7}, {7, 1},
                            {2, 5}, {5, 8}, {8, 2}, {0, 1}, {1, 2}, {2, 0},
                            {3, 4}, {4, 5}, {5, 3}, {6, 7}, {7, 8}, {8, 6}});
  const auto reg = eg::regularity(t);
  CHECK(reg.r == 2);
}

TEST_CASE("disjoint union is copy-major") {
  const MultiGraph u = eg::disjoint_union(eg::cycle(3), 2);
  CHECK(u.p == 6);
  CHECK(u.edges == EdgeList{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_THROWS_AS(eg::disjoint_union(eg::cycle(3), 0), eg::DegenerateInput);
}

TEST_CASE("union index maps invert each other") {
  const int p = 7, q = 21, k = 5;
  for (int j = 1; j <= k; ++j) {
    for (int v = 0; v < p; ++v) {
      const int uv = eg::union_vertex(p, j, v);
      CHECK(eg::copy_of_vertex(p, uv) == j);
      CHECK(eg::base_vertex(p, uv) == v);
    }
    for (int e = 0; e < q; ++e) {
      const int ue = eg::union_edge(q, j, e);
      CHECK(eg::copy_of_edge(q, ue) == j);
      CHECK(eg::base_edge(q, ue) == e);
    }
  }
  // and they are jointly a bijection onto 0..kp-1
  std::vector<bool> hit(k * p, false);
  for (int j = 1; j <= k; ++j)
    for (int v = 0; v < p; ++v) hit[eg::union_vertex(p, j, v)] = true;
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
}

TEST_CASE("degree sum equals twice the edge count") {
  std::mt19937 rng(20260819);
  for (int trial = 0; trial < 50; ++trial) {
    MultiGraph g;
    g.p = 2 + static_cast<int>(rng() % 9);
    const int q = static_cast<int>(rng() % 20);
    for (int i = 0; i < q; ++i) {
      const int u = static_cast<int>(rng() % g.p);
      int v = static_cast<int>(rng() % g.p);
      if (v == u) v = (v + 1) % g.p;
      g.edges.emplace_back(u, v);
    }
    const auto deg = eg::degrees(g);
    CHECK(std::accumulate(deg.begin(), deg.end(), 0) == 2 * g.q());
  }
}

TEST_CASE("validate rejects degenerate inputs") {
  MultiGraph empty;
  CHECK_THROWS_AS(eg::validate(empty), eg::DegenerateInput);

  MultiGraph loop;
  loop.p = 2;
  loop.edges = {{1, 1}};
  CHECK_THROWS_AS(eg::validate(loop), eg::DegenerateInput);

  MultiGraph range;
  range.p = 2;
  range.edges = {{0, 2}};
  CHECK_THROWS_AS(eg::validate(range), eg::DegenerateInput);

  CHECK_NOTHROW(eg::validate(eg::cycle(4)));
}

TEST_CASE("regularity sees parallel edges and non-regular graphs") {
  CHECK_FALSE(eg::regularity(path3()).is_regular);

  MultiGraph doubled;  // two vertices joined by two parallel edges
  doubled.p = 2;
  doubled.edges = {{0, 1}, {0, 1}};
  const auto reg = eg::regularity(doubled);
  CHECK(reg.is_regular);
  CHECK(reg.r == 1);
}

TEST_CASE("generators are deterministic") {
  CHECK(eg::cycle_power(9, 3).edges == eg::cycle_power(9, 3).edges);
  const MultiGraph a = eg::cartesian_product(eg::cycle(3), eg::cycle(5));
  const MultiGraph b = eg::cartesian_product(eg::cycle(3), eg::cycle(5));
  CHECK(a.edges == b.edges);
}
