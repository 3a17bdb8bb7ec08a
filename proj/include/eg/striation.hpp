#pragma once

#include <string>
#include <vector>

#include "eg/labeling.hpp"
#include "eg/two_factor.hpp"

namespace eg {

/// A 2-factorization (the striae S_1..S_r, order significant downstream)
/// together with an edge-graceful labeling such that each stria's p labels,
/// reduced mod p to representatives 1..p, cover {1..p} exactly.
struct Striation {
  TwoFactorization factorization;
  EdgeLabeling labeling;
};

/// Representative of x mod p in the range 1..p. Requires x >= 1, p >= 1.
inline int residue_rep(long long x, int p) {
  return static_cast<int>((x - 1) % p) + 1;
}

struct StriationVerdict {
  enum class Status { valid, factorization_invalid, not_edge_graceful, missing_residue };

  Status status = Status::valid;
  int stria = -1;    // 1-based, set for missing_residue
  int residue = -1;  // in 1..p, set for missing_residue
  std::string detail;

  explicit operator bool() const { return status == Status::valid; }
};

/// Checks the Striation invariants in a fixed order: factorization structure
/// first, then edge-gracefulness, then per-stria residue cover (ascending
/// stria, ascending residue). Stria order never affects validity. Throws
/// ShapeMismatch when s does not pair with g.
StriationVerdict verify_striation(const MultiGraph& g, const Striation& s);

/// Row j-1 lists stria j's edges ascending, each with its label reduced to
/// 1..p. Every row of a valid striation is a permutation of 1..p.
struct StriaTable {
  struct Entry {
    int edge;  // 0-based edge index in the underlying graph
    int base;  // label reduced to 1..p
  };
  std::vector<std::vector<Entry>> rows;
};

/// Throws PreconditionViolated when verify_striation rejects s.
StriaTable extract_stria_bases(const MultiGraph& g, const Striation& s);

}  // namespace eg
