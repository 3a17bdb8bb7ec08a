#include "eg/labeling.hpp"

#include <string>

namespace eg {

bool is_label_bijection(const std::vector<int>& labels) {
  const int q = static_cast<int>(labels.size());
  std::vector<bool> seen(q + 1, false);
  for (int lab : labels) {
    if (lab < 1 || lab > q || seen[lab]) return false;
    seen[lab] = true;
  }
  return true;
}

namespace {

void check_pairing(const MultiGraph& g, const EdgeLabeling& l) {
  if (l.q() != g.q())
    throw ShapeMismatch("labeling has " + std::to_string(l.q()) + " labels, graph has " +
                        std::to_string(g.q()) + " edges");
  if (l.modulus != g.p)
    throw ShapeMismatch("labeling modulus " + std::to_string(l.modulus) +
                        " does not match vertex count " + std::to_string(g.p));
}

std::vector<int> residues_unchecked(const MultiGraph& g, const EdgeLabeling& l) {
  std::vector<long long> sums(g.p, 0);
  for (int i = 0; i < g.q(); ++i) {
    sums[g.edges[i].first] += l.labels[i];
    sums[g.edges[i].second] += l.labels[i];
  }
  std::vector<int> out(g.p);
  for (int v = 0; v < g.p; ++v) out[v] = static_cast<int>(sums[v] % g.p);
  return out;
}

}  // namespace

InducedLabels induced_vertex_labels(const MultiGraph& g, const EdgeLabeling& l) {
  check_pairing(g, l);
  if (!is_label_bijection(l.labels))
    throw InvalidLabeling("labels are not a bijection onto 1..q");
  return InducedLabels{residues_unchecked(g, l)};
}

GracefulVerdict verify_edge_graceful(const MultiGraph& g, const EdgeLabeling& l) {
  check_pairing(g, l);
  GracefulVerdict verdict;
  if (!is_label_bijection(l.labels)) {
    verdict.status = GracefulVerdict::Status::invalid_labeling;
    verdict.detail = "labels are not a bijection onto 1..q";
    return verdict;
  }
  const std::vector<int> res = residues_unchecked(g, l);
  std::vector<int> first_seen(g.p, -1);
  for (int v = 0; v < g.p; ++v) {
    if (first_seen[res[v]] >= 0) {
      verdict.status = GracefulVerdict::Status::duplicate;
      verdict.u = first_seen[res[v]];
      verdict.v = v;
      verdict.detail = "vertices " + std::to_string(verdict.u) + " and " + std::to_string(v) +
                       " share induced label " + std::to_string(res[v]);
      return verdict;
    }
    first_seen[res[v]] = v;
  }
  return verdict;
}

ConditionReport lo_condition(long long p, long long q) {
  if (p < 1 || q < 0) throw DegenerateInput("lo condition needs p >= 1, q >= 0");
  ConditionReport report;
  report.p = p;
  report.q = q;
  report.lo_value = q * q + q - p * (p - 1) / 2;
  report.lo_remainder = ((report.lo_value % p) + p) % p;
  report.lo_divides = report.lo_remainder == 0;
  return report;
}

ConditionReport union_feasibility(const MultiGraph& g, int k) {
  validate(g);
  const RegularityInfo reg = regularity(g);
  if (!reg.is_regular || reg.r < 0)
    throw PreconditionViolated("union feasibility applies to 2r-regular graphs only");
  ConditionReport report = lo_condition(static_cast<long long>(k) * g.p,
                                        static_cast<long long>(k) * g.q());
  report.k = k;
  report.p_odd_ok = g.p % 2 == 1;
  report.k_odd_ok = k % 2 == 1;
  return report;
}

}  // namespace eg
