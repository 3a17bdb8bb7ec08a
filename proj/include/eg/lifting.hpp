#pragma once

#include "eg/striation.hpp"

namespace eg {

/// Validated parameters of a lift from G to kG. Building one runs every
/// precondition check; the lift constructions start from a plan.
struct LiftPlan {
  enum class Method { shift, striation };

  Method method;
  int k = 0;
  int r = 0;
  int p = 0;
  int q = 0;   // r * p
  int kp = 0;  // modulus of the lifted labeling
  int kq = 0;  // edge count of kG
};

/// Requires: g 2r-regular, base edge graceful on g, k odd, gcd(r, kp) = 1.
LiftPlan plan_shift_lift(const MultiGraph& g, const EdgeLabeling& base, int k);

/// Requires: s a valid striation of g, k odd, r >= 1.
LiftPlan plan_striation_lift(const MultiGraph& g, const Striation& s, int k);

/// Shift lift: the edge of copy j (1-based) corresponding to base edge i
/// gets label l_i + (j-1)q. Output labels are exactly 1..kq and the result
/// is verified edge graceful mod kp before returning; a discrepancy throws
/// ConstructionCheckFailed.
EdgeLabeling lift_shift(const MultiGraph& g, const EdgeLabeling& base, int k);

/// Striation lift: each stria's kp labels occupy one block of kp
/// consecutive values, positioned by the stria's 1..p base labels in the
/// first copy and stepped per copy by +p (ascending striae), -p (descending
/// striae) or +2p with wrap-around inside the block (stria 1 when r is
/// even). Output labels are exactly 1..krp and the result is verified edge
/// graceful mod kp before returning; a discrepancy throws
/// ConstructionCheckFailed.
EdgeLabeling lift_striation(const MultiGraph& g, const Striation& s, int k);

/// True iff for every vertex and every copy s >= 2 the induced label in
/// copy s equals the copy s-1 value plus 2p, mod kp. Vacuous for k = 1.
/// Throws ShapeMismatch when the shapes do not line up.
bool induced_shift_check(const MultiGraph& g, const Striation& s, int k,
                         const EdgeLabeling& lifted);

}  // namespace eg
