#include "eg/two_factor.hpp"

#include <algorithm>

namespace eg {

bool is_two_factorization(const MultiGraph& g, const TwoFactorization& f) {
  std::vector<int> seen(g.q(), 0);
  for (const auto& factor : f.factors) {
    std::vector<int> deg(g.p, 0);
    for (int ei : factor) {
      if (ei < 0 || ei >= g.q()) return false;
      if (seen[ei]++) return false;
      ++deg[g.edges[ei].first];
      ++deg[g.edges[ei].second];
    }
    if (static_cast<int>(factor.size()) != g.p) return false;
    if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

namespace {

// Shared state of the peeling enumeration. Factors are grown by an
// include/exclude DFS over the remaining edges in index order; the excluded
// edges become the pool for the next factor.
struct Enumerator {
  const MultiGraph& g;
  std::uint64_t max_nodes;
  const std::function<bool(const TwoFactorization&)>& visit;
  std::uint64_t& nodes;
  int r;
  std::vector<std::vector<int>> factors;
  bool stopped = false;
  bool budget_hit = false;

  bool spend() {
    if (++nodes > max_nodes) {
      budget_hit = true;
      return false;
    }
    return true;
  }

  // Emits every way to split `pool` into one spanning 2-regular factor plus
  // a remainder, then recurses on the remainder.
  void peel(const std::vector<int>& pool, int depth) {
    if (depth == r) {
      if (pool.empty()) {
        TwoFactorization f{factors};
        if (!visit(f)) stopped = true;
      }
      return;
    }
    std::vector<int> fdeg(g.p, 0), avail(g.p, 0);
    for (int ei : pool) {
      ++avail[g.edges[ei].first];
      ++avail[g.edges[ei].second];
    }
    std::vector<int> chosen, rest;
    chosen.reserve(g.p);
    rest.reserve(pool.size());

    auto dfs = [&](auto&& self, size_t i) -> void {
      if (stopped || budget_hit) return;
      if (i == pool.size()) {
        if (std::all_of(fdeg.begin(), fdeg.end(), [](int d) { return d == 2; })) {
          factors.push_back(chosen);
          peel(rest, depth + 1);
          factors.pop_back();
        }
        return;
      }
      const int ei = pool[i];
      auto [u, v] = g.edges[ei];
      --avail[u];
      --avail[v];
      if (fdeg[u] < 2 && fdeg[v] < 2) {
        if (!spend()) {
          ++avail[u];
          ++avail[v];
          return;
        }
        ++fdeg[u];
        ++fdeg[v];
        chosen.push_back(ei);
        self(self, i + 1);
        chosen.pop_back();
        --fdeg[u];
        --fdeg[v];
      }
      if (!stopped && !budget_hit && fdeg[u] + avail[u] >= 2 && fdeg[v] + avail[v] >= 2) {
        if (!spend()) {
          ++avail[u];
          ++avail[v];
          return;
        }
        rest.push_back(ei);
        self(self, i + 1);
        rest.pop_back();
      }
      ++avail[u];
      ++avail[v];
    };
    dfs(dfs, 0);
  }
};

}  // namespace

EnumResult for_each_two_factorization(const MultiGraph& g, std::uint64_t max_nodes,
                                      const std::function<bool(const TwoFactorization&)>& visit,
                                      std::uint64_t* nodes) {
  validate(g);
  const RegularityInfo reg = regularity(g);
  if (!reg.is_regular || reg.r < 0)
    throw PreconditionViolated("two-factorization requires a 2r-regular graph");

  std::uint64_t local = 0;
  std::uint64_t& counter = nodes ? *nodes : local;
  Enumerator en{g, max_nodes, visit, counter, reg.r, {}, false, false};
  std::vector<int> all(g.q());
  for (int i = 0; i < g.q(); ++i) all[i] = i;
  en.peel(all, 0);
  if (en.budget_hit) return EnumResult::budget;
  return en.stopped ? EnumResult::stopped : EnumResult::complete;
}

std::optional<TwoFactorization> two_factorize(const MultiGraph& g, std::uint64_t max_nodes) {
  std::optional<TwoFactorization> result;
  for_each_two_factorization(g, max_nodes, [&](const TwoFactorization& f) {
    result = f;
    return false;
  });
  return result;
}

}  // namespace eg
