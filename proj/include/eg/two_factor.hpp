#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "eg/multigraph.hpp"

namespace eg {

/// Partition of the edge set of a 2r-regular graph into r spanning
/// 2-regular subgraphs. Each factor lists ascending edge indices and has
/// exactly p of them.
struct TwoFactorization {
  std::vector<std::vector<int>> factors;

  int r() const { return static_cast<int>(factors.size()); }
};

/// Checks the TwoFactorization invariants against g: factors partition the
/// edge set and every vertex has exactly two incident edges per factor.
bool is_two_factorization(const MultiGraph& g, const TwoFactorization& f);

enum class EnumResult { complete, stopped, budget };

/// Enumerates 2-factorizations in a fixed order: factors are peeled one at a
/// time by depth-first search over the remaining edges in index order,
/// include tried before exclude. `visit` returns false to stop early. Each
/// include/exclude decision adds one to *nodes; enumeration aborts once
/// *nodes reaches max_nodes (pass ~0 for no limit).
/// Throws PreconditionViolated unless g is 2r-regular.
EnumResult for_each_two_factorization(const MultiGraph& g, std::uint64_t max_nodes,
                                      const std::function<bool(const TwoFactorization&)>& visit,
                                      std::uint64_t* nodes = nullptr);

/// First 2-factorization under the enumeration order, or nullopt if the node
/// budget ran out first. A 2r-regular loopless multigraph always has one, so
/// exhaustion without a find cannot occur.
std::optional<TwoFactorization> two_factorize(const MultiGraph& g,
                                              std::uint64_t max_nodes = std::uint64_t(1) << 32);

}  // namespace eg
