#include "eg/search.hpp"

#include <limits>

namespace eg {

namespace {

std::uint64_t node_cap(const SearchBudget& budget) {
  if (budget.exhaustive) return std::numeric_limits<std::uint64_t>::max();
  if (budget.max_nodes < 1)
    throw ConfigError("search budget needs max_nodes >= 1 unless exhaustive");
  return budget.max_nodes;
}

// Depth-first label assignment, edges in index order, labels ascending.
// A node is one label actually placed; placements that an earlier-used label
// or an already-taken stria residue would forbid are skipped without cost.
struct LabelSearch {
  const MultiGraph& g;
  const std::vector<int>* stria_of;  // stria per edge (0-based), or nullptr
  std::uint64_t cap;
  std::uint64_t& nodes;

  int p, q;
  std::vector<long long> sums;
  std::vector<int> remaining;
  std::vector<bool> used;
  std::vector<bool> residue_taken;
  std::vector<std::vector<bool>> stria_rep_taken;
  std::vector<int> labels;
  bool budget_hit = false;
  bool impossible = false;

  LabelSearch(const MultiGraph& graph, const std::vector<int>* striae, int num_striae,
              std::uint64_t node_limit, std::uint64_t& counter)
      : g(graph), stria_of(striae), cap(node_limit), nodes(counter),
        p(graph.p), q(graph.q()),
        sums(p, 0), remaining(p, 0), used(q + 1, false), residue_taken(p, false),
        labels(q, 0) {
    if (striae) stria_rep_taken.assign(num_striae, std::vector<bool>(p + 1, false));
    for (auto [u, v] : g.edges) {
      ++remaining[u];
      ++remaining[v];
    }
    // Isolated vertices are complete before any label is placed; two of them
    // already collide at residue 0.
    for (int v = 0; v < p; ++v) {
      if (remaining[v] == 0) {
        if (residue_taken[0]) {
          impossible = true;
          return;
        }
        residue_taken[0] = true;
      }
    }
  }

  bool run() { return !impossible && dfs(0); }

  bool dfs(int e) {
    if (e == q) return true;
    const auto [u, v] = g.edges[e];
    const int j = stria_of ? (*stria_of)[e] : -1;
    for (int lab = 1; lab <= q; ++lab) {
      if (used[lab]) continue;
      int rep = 0;
      if (j >= 0) {
        rep = residue_rep(lab, p);
        if (stria_rep_taken[j][rep]) continue;
      }
      if (++nodes > cap) {
        budget_hit = true;
        return false;
      }
      used[lab] = true;
      if (j >= 0) stria_rep_taken[j][rep] = true;
      sums[u] += lab;
      sums[v] += lab;
      --remaining[u];
      --remaining[v];
      labels[e] = lab;

      bool ok = true;
      int taken_u = -1, taken_v = -1;
      if (remaining[u] == 0) {
        const int res = static_cast<int>(sums[u] % p);
        if (residue_taken[res]) ok = false;
        else residue_taken[res] = true, taken_u = res;
      }
      if (ok && remaining[v] == 0) {
        const int res = static_cast<int>(sums[v] % p);
        if (residue_taken[res]) ok = false;
        else residue_taken[res] = true, taken_v = res;
      }

      if (ok && dfs(e + 1)) return true;
      if (budget_hit) return false;

      if (taken_v >= 0) residue_taken[taken_v] = false;
      if (taken_u >= 0) residue_taken[taken_u] = false;
      sums[u] -= lab;
      sums[v] -= lab;
      ++remaining[u];
      ++remaining[v];
      used[lab] = false;
      if (j >= 0) stria_rep_taken[j][rep] = false;
    }
    return false;
  }
};

}  // namespace

SearchOutcome search_edge_graceful(const MultiGraph& g, const SearchBudget& budget) {
  validate(g);
  const std::uint64_t cap = node_cap(budget);
  SearchOutcome outcome;
  LabelSearch search(g, nullptr, 0, cap, outcome.nodes_explored);
  if (search.run()) {
    outcome.status = SearchOutcome::Status::found;
    outcome.labeling = EdgeLabeling{search.labels, g.p};
    if (!verify_edge_graceful(g, *outcome.labeling))
      throw ConstructionCheckFailed("search witness failed verification");
  } else if (search.budget_hit) {
    outcome.status = SearchOutcome::Status::budget_exhausted;
  } else {
    outcome.status = SearchOutcome::Status::none_exists;
  }
  return outcome;
}

SearchOutcome search_striation(const MultiGraph& g, const SearchBudget& budget) {
  validate(g);
  const std::uint64_t cap = node_cap(budget);
  SearchOutcome outcome;
  bool budget_hit = false;

  // Factorizations are enumerated lazily; each candidate is handed straight
  // to the constrained label search, so a dead factorization costs only its
  // own failed search. One node counter spans both phases.
  const EnumResult er = for_each_two_factorization(
      g, cap,
      [&](const TwoFactorization& f) {
        std::vector<int> stria_of(g.q(), -1);
        for (int j = 0; j < f.r(); ++j)
          for (int ei : f.factors[j]) stria_of[ei] = j;
        LabelSearch search(g, &stria_of, f.r(), cap, outcome.nodes_explored);
        if (search.run()) {
          outcome.striation = Striation{f, EdgeLabeling{search.labels, g.p}};
          return false;
        }
        if (search.budget_hit) {
          budget_hit = true;
          return false;
        }
        return true;
      },
      &outcome.nodes_explored);

  if (outcome.striation) {
    outcome.status = SearchOutcome::Status::found;
    if (!verify_striation(g, *outcome.striation))
      throw ConstructionCheckFailed("striation search witness failed verification");
  } else if (budget_hit || er == EnumResult::budget) {
    outcome.status = SearchOutcome::Status::budget_exhausted;
  } else {
    outcome.status = SearchOutcome::Status::none_exists;
  }
  return outcome;
}

}  // namespace eg
