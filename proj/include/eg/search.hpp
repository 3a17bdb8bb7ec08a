#pragma once

#include <cstdint>
#include <optional>

#include "eg/striation.hpp"

namespace eg {

/// Node limit for the backtracking searches. A node is one decision applied
/// (a label placed on an edge, or an include/exclude choice while peeling
/// 2-factors). With exhaustive set the limit is ignored and completeness is
/// guaranteed.
struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000;
  bool exhaustive = false;

  static SearchBudget unlimited() { return {0, true}; }
};

struct SearchOutcome {
  enum class Status { found, none_exists, budget_exhausted };

  Status status = Status::budget_exhausted;
  std::optional<EdgeLabeling> labeling;   // witness of search_edge_graceful
  std::optional<Striation> striation;     // witness of search_striation
  std::uint64_t nodes_explored = 0;

  bool found() const { return status == Status::found; }
};

/// Backtracking over edge-label assignments, edges in index order, labels
/// tried ascending; a branch is cut when a vertex with all incident edges
/// labeled collides with another completed vertex. The witness is the
/// lexicographically least valid labeling; none_exists is a completeness
/// certificate.
SearchOutcome search_edge_graceful(const MultiGraph& g, const SearchBudget& budget);

/// Interleaves 2-factorization enumeration with a label search constrained
/// so each stria's labels hit p distinct residues; the first factorization
/// admitting a labeling wins, with the lexicographically least labeling for
/// it. Throws PreconditionViolated unless g is 2r-regular.
SearchOutcome search_striation(const MultiGraph& g, const SearchBudget& budget);

}  // namespace eg
