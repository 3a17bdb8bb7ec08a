#include "eg/lifting.hpp"

#include <numeric>
#include <string>

namespace eg {

namespace {

LiftPlan derive(LiftPlan::Method method, int k, int r, int p) {
  LiftPlan plan;
  plan.method = method;
  plan.k = k;
  plan.r = r;
  plan.p = p;
  plan.q = r * p;
  plan.kp = k * p;
  plan.kq = k * plan.q;
  return plan;
}

void require_odd(int k) {
  if (k < 1) throw PreconditionViolated("copy count k must be positive");
  if (k % 2 == 0)
    throw PreconditionViolated("copy count k must be odd: even k admits no edge graceful union");
}

// Construction output is checked against the verifier before anything is
// returned; the construction never gets the benefit of the doubt.
void check_output(const MultiGraph& g, int k, const EdgeLabeling& lifted, const char* which) {
  if (!is_label_bijection(lifted.labels))
    throw ConstructionCheckFailed(std::string(which) +
                                  " produced labels that are not a bijection onto 1..kq");
  const MultiGraph kg = disjoint_union(g, k);
  const GracefulVerdict verdict = verify_edge_graceful(kg, lifted);
  if (!verdict)
    throw ConstructionCheckFailed(std::string(which) + " output failed verification: " +
                                  verdict.detail);
}

}  // namespace

LiftPlan plan_shift_lift(const MultiGraph& g, const EdgeLabeling& base, int k) {
  validate(g);
  const RegularityInfo reg = regularity(g);
  if (!reg.is_regular || reg.r < 0)
    throw PreconditionViolated("shift lift requires a 2r-regular graph");
  const GracefulVerdict gv = verify_edge_graceful(g, base);
  if (!gv)
    throw PreconditionViolated("base labeling is not edge graceful: " + gv.detail);
  require_odd(k);
  if (std::gcd(static_cast<long long>(reg.r), static_cast<long long>(k) * g.p) != 1)
    throw PreconditionViolated("r = " + std::to_string(reg.r) + " and kp = " +
                               std::to_string(static_cast<long long>(k) * g.p) +
                               " must be coprime");
  return derive(LiftPlan::Method::shift, k, reg.r, g.p);
}

LiftPlan plan_striation_lift(const MultiGraph& g, const Striation& s, int k) {
  validate(g);
  const StriationVerdict sv = verify_striation(g, s);
  if (!sv) throw PreconditionViolated("striation invalid: " + sv.detail);
  require_odd(k);
  const int r = s.factorization.r();
  if (r < 1) throw PreconditionViolated("striation lift requires r >= 1");
  return derive(LiftPlan::Method::striation, k, r, g.p);
}

EdgeLabeling lift_shift(const MultiGraph& g, const EdgeLabeling& base, int k) {
  const LiftPlan plan = plan_shift_lift(g, base, k);
  EdgeLabeling out;
  out.modulus = plan.kp;
  out.labels.resize(plan.kq);
  for (int j = 1; j <= k; ++j)
    for (int i = 0; i < plan.q; ++i)
      out.labels[union_edge(plan.q, j, i)] = base.labels[i] + (j - 1) * plan.q;
  check_output(g, k, out, "shift lift");
  return out;
}

EdgeLabeling lift_striation(const MultiGraph& g, const Striation& s, int k) {
  const LiftPlan plan = plan_striation_lift(g, s, k);
  const StriaTable table = extract_stria_bases(g, s);
  const int p = plan.p;
  const int kp = plan.kp;
  const int r = plan.r;

  EdgeLabeling out;
  out.modulus = kp;
  out.labels.assign(plan.kq, 0);

  if (r % 2 == 1) {
    // r = 2t+1: striae 1..t+1 start at the bottom of blocks 1..t+1 and step
    // +p per copy; striae t+2..2t+1 start at the top of blocks 2t+1..t+2 and
    // step -p. No label ever leaves its block, which the final bijection
    // check confirms.
    const int t = (r - 1) / 2;
    for (int j = 1; j <= r; ++j) {
      const bool ascending = j <= t + 1;
      for (const auto& entry : table.rows[j - 1]) {
        const int first = ascending ? entry.base + (j - 1) * kp
                                    : entry.base + (3 * t + 3 - j) * kp - p;
        for (int s_copy = 1; s_copy <= k; ++s_copy) {
          const int label = first + (s_copy - 1) * (ascending ? p : -p);
          out.labels[union_edge(plan.q, s_copy, entry.edge)] = label;
        }
      }
    }
  } else {
    // r = 2t: striae 1..t ascend from blocks 1..t, striae t+1..2t descend
    // from blocks 2t..t+1. Stria 1 steps +2p and is the only stria whose
    // labels wrap; the per-copy step is applied to the offset inside the
    // stria's block, modulo kp with representatives 1..kp.
    const int t = r / 2;
    for (int j = 1; j <= r; ++j) {
      const bool ascending = j <= t;
      const int block_base = ascending ? (j - 1) * kp : (3 * t - j) * kp;
      const int step = !ascending ? -p : (j == 1 ? 2 * p : p);
      for (const auto& entry : table.rows[j - 1]) {
        const int first = ascending ? entry.base + (j - 1) * kp
                                    : entry.base + (3 * t + 1 - j) * kp - p;
        const int offset = first - block_base;  // in 1..kp
        for (int s_copy = 1; s_copy <= k; ++s_copy) {
          const long long stepped = offset + static_cast<long long>(s_copy - 1) * step;
          const int wrapped = static_cast<int>(((stepped % kp) + kp - 1) % kp) + 1;
          out.labels[union_edge(plan.q, s_copy, entry.edge)] = block_base + wrapped;
        }
      }
    }
  }

  check_output(g, k, out, "striation lift");
  return out;
}

bool induced_shift_check(const MultiGraph& g, const Striation& s, int k,
                         const EdgeLabeling& lifted) {
  validate(g);
  if (s.labeling.q() != g.q() || s.labeling.modulus != g.p)
    throw ShapeMismatch("striation does not pair with the graph");
  if (k < 1) throw ShapeMismatch("copy count must be positive");
  const MultiGraph kg = disjoint_union(g, k);
  if (lifted.q() != kg.q() || lifted.modulus != kg.p)
    throw ShapeMismatch("lifted labeling does not pair with the union graph");
  const InducedLabels induced = induced_vertex_labels(kg, lifted);
  const int kp = k * g.p;
  for (int s_copy = 2; s_copy <= k; ++s_copy) {
    for (int v = 0; v < g.p; ++v) {
      const int prev = induced.values[union_vertex(g.p, s_copy - 1, v)];
      const int cur = induced.values[union_vertex(g.p, s_copy, v)];
      if ((prev + 2 * g.p) % kp != cur) return false;
    }
  }
  return true;
}

}  // namespace eg
