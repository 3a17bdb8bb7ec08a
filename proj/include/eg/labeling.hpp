#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eg/multigraph.hpp"

namespace eg {

/// labels[i] holds the label of edge index i; induced vertex labels are
/// judged modulo `modulus`, the vertex count of the paired graph. A well
/// formed labeling is a bijection onto 1..q, but the struct may carry any
/// values so that verifiers can report violations as verdicts.
struct EdgeLabeling {
  std::vector<int> labels;
  int modulus = 0;

  int q() const { return static_cast<int>(labels.size()); }
};

/// True iff labels is a permutation of 1..labels.size().
bool is_label_bijection(const std::vector<int>& labels);

/// values[v] = sum of labels on edges incident to v, mod p (in [0, p)).
struct InducedLabels {
  std::vector<int> values;
};

/// Throws ShapeMismatch if l does not pair with g, InvalidLabeling if the
/// labels are not a bijection onto 1..q.
InducedLabels induced_vertex_labels(const MultiGraph& g, const EdgeLabeling& l);

struct GracefulVerdict {
  enum class Status { valid, duplicate, invalid_labeling };

  Status status = Status::valid;
  // First collision under ascending vertex order: v is the first vertex
  // whose induced label was already taken, u the earliest vertex with that
  // label. Set only for duplicate.
  int u = -1;
  int v = -1;
  std::string detail;

  explicit operator bool() const { return status == Status::valid; }
};

/// Valid iff the induced labels are pairwise distinct, i.e. a permutation of
/// 0..p-1. Non-bijective labels yield the invalid_labeling verdict; only a
/// shape mismatch throws.
GracefulVerdict verify_edge_graceful(const MultiGraph& g, const EdgeLabeling& l);

/// Necessary-condition verdicts. The parity verdicts are set only when the
/// corresponding requirement applies (p odd: 2r-regular graphs; k odd:
/// disjoint-union queries).
struct ConditionReport {
  long long p = 0;
  long long q = 0;
  long long k = 1;
  long long lo_value = 0;      // q^2 + q - p(p-1)/2
  long long lo_remainder = 0;  // lo_value mod p, in [0, p)
  bool lo_divides = false;
  std::optional<bool> p_odd_ok;
  std::optional<bool> k_odd_ok;

  bool all_pass() const {
    return lo_divides && p_odd_ok.value_or(true) && k_odd_ok.value_or(true);
  }
};

/// Divisibility screen p | q^2 + q - p(p-1)/2, exact integer arithmetic.
/// Takes the parameters directly so hypothetical (p, q) pairs can be
/// screened before any graph is built.
ConditionReport lo_condition(long long p, long long q);

/// Feasibility of kG for 2r-regular g: p parity, k parity, and the
/// divisibility screen evaluated at (kp, kq). Throws PreconditionViolated
/// when g is not 2r-regular.
ConditionReport union_feasibility(const MultiGraph& g, int k);

}  // namespace eg
