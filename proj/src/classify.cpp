#include "qsteer/classify.hpp"

#include <cmath>

namespace qsteer {

std::string to_string(OperatorClass c) {
  switch (c) {
    case OperatorClass::A: return "A";
    case OperatorClass::B: return "B";
    case OperatorClass::C: return "C";
    case OperatorClass::D: return "D";
    case OperatorClass::NotBlockPositive: return "NotBlockPositive";
  }
  return "?";
}

namespace {

struct BoundaryValues {
  double lhs_minus = 0.0;
  double lhs_plus = 0.0;
  double u = 0.0, q = 0.0, r = 0.0;
  double c_norm = 0.0;
};

BoundaryValues boundary_values(const EllipsoidRep& e) {
  BoundaryValues bv;
  const Mat3& q = e.Q;
  bv.c_norm = e.c.norm();
  const double c2 = bv.c_norm * bv.c_norm;
  const double tr_q = q.trace();
  const double tr_q2 = (q * q).trace();
  // The skew term enters only multiplied by c^2, so c = 0 is a removable
  // singularity; define it as 0 there.
  double skew = 0.0;
  if (bv.c_norm > 0.0) {
    const Vec3 ch = e.c * (1.0 / bv.c_norm);
    skew = ch.dot(q * ch);
  }
  bv.u = 1.0 - tr_q + 2.0 * skew;
  bv.q = 1.0 + 2.0 * tr_q2 - 2.0 * tr_q - tr_q * tr_q;
  const SymEig3 qe = eig_sym3(q);
  const double det_q = std::max(0.0, qe.values[0]) *
                       std::max(0.0, qe.values[1]) *
                       std::max(0.0, qe.values[2]);
  bv.r = 8.0 * std::sqrt(det_q);
  const double base = c2 * c2 - 2.0 * bv.u * c2 + bv.q;
  bv.lhs_minus = base - e.chi * bv.r;
  bv.lhs_plus = base + e.chi * bv.r;
  return bv;
}

// Sign with a dead band: values within tol of zero resolve to the
// non-negative (state) side and are flagged marginal.
bool nonneg(double v, double tol, bool& marginal) {
  if (std::abs(v) <= tol) {
    marginal = true;
    return true;
  }
  return v > 0.0;
}

ClassLabel classify_signs(double d1, double d2, double tol) {
  ClassLabel out;
  bool marginal = false;
  const bool p1 = nonneg(d1, tol, marginal);
  const bool p2 = nonneg(d2, tol, marginal);
  out.marginal = marginal;
  if (p1 && p2)
    out.value = OperatorClass::A;
  else if (p1)
    out.value = OperatorClass::B;
  else if (p2)
    out.value = OperatorClass::C;
  else
    out.value = OperatorClass::D;
  return out;
}

}  // namespace

ClassInvariants compute_invariants(const EllipsoidRep& e,
                                   const TwoQubitOperator& b,
                                   const Tolerances& tol) {
  const BoundaryValues bv = boundary_values(e);
  ClassInvariants inv;
  inv.c_norm = bv.c_norm;
  if (bv.c_norm > 0.0) inv.c_hat = e.c * (1.0 / bv.c_norm);
  inv.gamma_b = e.gamma_b;
  inv.u = bv.u;
  inv.q = bv.q;
  inv.r = bv.r;
  inv.lhs_minus = bv.lhs_minus;
  inv.lhs_plus = bv.lhs_plus;
  inv.det_B = det4(b);
  inv.det_B_TB = det4(partial_transpose_B(b));
  (void)tol;
  return inv;
}

ClassLabel classify_by_determinants(const TwoQubitOperator& b,
                                    const Tolerances& tol) {
  const EllipsoidRep e = ellipsoid_of(b, tol);
  if (is_inside_bloch_sphere(e, tol) == SphereContainment::Outside)
    return {OperatorClass::NotBlockPositive, false};
  return classify_signs(det4(b), det4(partial_transpose_B(b)), tol.cls);
}

ClassLabel classify_by_ellipsoid(const EllipsoidRep& e,
                                 const Tolerances& tol) {
  if (is_inside_bloch_sphere(e, tol) == SphereContainment::Outside)
    return {OperatorClass::NotBlockPositive, false};
  const BoundaryValues bv = boundary_values(e);
  return classify_signs(bv.lhs_minus, bv.lhs_plus, tol.cls);
}

}  // namespace qsteer
