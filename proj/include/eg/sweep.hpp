#pragma once

#include <string>
#include <vector>

#include "eg/search.hpp"

namespace eg {

/// One member of a sweep family, keyed by the spec string that produced it.
struct FamilyMember {
  std::string id;
  MultiGraph graph;
};

/// Parses a comma-separated family spec. Each item is `C<n>`, `C<n>^<k>`,
/// `K<n>`, or a product of such terms joined with `x` (e.g. "C3,C5^2,C3xC3").
/// Throws ConfigError on anything else.
std::vector<FamilyMember> parse_family(const std::string& spec);

enum class MethodVerdict { ok, fail, skip, budget };

const char* to_string(MethodVerdict v);

struct SweepRow {
  std::string graph_id;
  int p = 0;
  int r = -1;  // -1 when not 2r-regular
  int k = 0;
  MethodVerdict feasible = MethodVerdict::skip;
  MethodVerdict theorem2 = MethodVerdict::skip;
  MethodVerdict striaeform = MethodVerdict::skip;
  MethodVerdict direct_search = MethodVerdict::skip;
  // Informational: whether each found stria, taken alone as a (p, p) graph,
  // is itself edge graceful.
  MethodVerdict factors_graceful = MethodVerdict::skip;
};

/// For each (G, k): feasibility screen, shift lift when coprime, striation
/// search plus striation lift, and direct search on kG when small enough.
/// Tabulates instance evidence only; proves nothing.
std::vector<SweepRow> conjecture_sweep(const std::vector<FamilyMember>& family,
                                       const std::vector<int>& k_values,
                                       const SearchBudget& budget);

/// Tab-separated table, one header line then one line per row.
std::string render_sweep_table(const std::vector<SweepRow>& rows);

}  // namespace eg
