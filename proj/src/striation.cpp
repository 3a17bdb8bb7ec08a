#include "eg/striation.hpp"

#include <algorithm>

namespace eg {

namespace {

void check_pairing(const MultiGraph& g, const Striation& s) {
  if (s.labeling.q() != g.q() || s.labeling.modulus != g.p)
    throw ShapeMismatch("striation labeling does not pair with the graph");
  for (const auto& factor : s.factorization.factors)
    for (int ei : factor)
      if (ei < 0 || ei >= g.q())
        throw ShapeMismatch("striation factor references edge index " + std::to_string(ei + 1) +
                            " outside 1.." + std::to_string(g.q()));
}

}  // namespace

StriationVerdict verify_striation(const MultiGraph& g, const Striation& s) {
  check_pairing(g, s);
  StriationVerdict verdict;
  if (!is_two_factorization(g, s.factorization)) {
    verdict.status = StriationVerdict::Status::factorization_invalid;
    verdict.detail = "factors are not a partition into spanning 2-regular subgraphs";
    return verdict;
  }
  const GracefulVerdict gv = verify_edge_graceful(g, s.labeling);
  if (!gv) {
    verdict.status = StriationVerdict::Status::not_edge_graceful;
    verdict.detail = gv.detail;
    return verdict;
  }
  const int p = g.p;
  for (int j = 0; j < s.factorization.r(); ++j) {
    std::vector<bool> covered(p + 1, false);
    for (int ei : s.factorization.factors[j])
      covered[residue_rep(s.labeling.labels[ei], p)] = true;
    for (int m = 1; m <= p; ++m) {
      if (!covered[m]) {
        verdict.status = StriationVerdict::Status::missing_residue;
        verdict.stria = j + 1;
        verdict.residue = m;
        verdict.detail = "stria " + std::to_string(j + 1) + " misses residue " + std::to_string(m);
        return verdict;
      }
    }
  }
  return verdict;
}

StriaTable extract_stria_bases(const MultiGraph& g, const Striation& s) {
  const StriationVerdict verdict = verify_striation(g, s);
  if (!verdict)
    throw PreconditionViolated("stria bases require a valid striation: " + verdict.detail);
  StriaTable table;
  table.rows.resize(s.factorization.r());
  for (int j = 0; j < s.factorization.r(); ++j) {
    std::vector<int> edges = s.factorization.factors[j];
    std::sort(edges.begin(), edges.end());
    table.rows[j].reserve(edges.size());
    for (int ei : edges)
      table.rows[j].push_back({ei, residue_rep(s.labeling.labels[ei], g.p)});
  }
  return table;
}

}  // namespace eg
