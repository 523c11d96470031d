#pragma once

#include <optional>
#include <string>

#include "qsteer/ellipsoid.hpp"
#include "qsteer/pauli.hpp"
#include "qsteer/tolerances.hpp"

// Four-class scheme for block positive two-qubit operators, decided by the
// signs of det B and det B^TB:
//   A: both >= 0   (B and B^TB separable states)
//   B: det B >= 0, det B^TB < 0   (entangled state; PT is a witness)
//   C: det B < 0, det B^TB >= 0   (witness; PT is an entangled state)
//   D: both < 0    (witness in both forms)
// The same classes follow from the ellipsoid parameters alone through the
// boundary quantities c^4 - 2uc^2 + q -/+ chi*r, which reproduce
// 256 * det of the canonical operator and of its partial transpose.

namespace qsteer {

enum class OperatorClass { A, B, C, D, NotBlockPositive };

std::string to_string(OperatorClass c);

struct ClassLabel {
  OperatorClass value = OperatorClass::NotBlockPositive;
  bool marginal = false;  // a deciding quantity sat within tol.cls of zero
};

struct ClassInvariants {
  double c_norm = 0.0;
  std::optional<Vec3> c_hat;  // undefined at c = 0
  double gamma_b = 1.0;
  double u = 0.0;
  double q = 0.0;
  double r = 0.0;
  double lhs_minus = 0.0;  // c^4 - 2uc^2 + q - chi*r
  double lhs_plus = 0.0;   // c^4 - 2uc^2 + q + chi*r
  double det_B = 0.0;
  double det_B_TB = 0.0;
};

/// Ellipsoid-side invariants plus both 4x4 determinants. Pre: e was
/// computed from b.
ClassInvariants compute_invariants(const EllipsoidRep& e,
                                   const TwoQubitOperator& b,
                                   const Tolerances& tol = {});

/// Classification by the signs of det B and det B^TB. Block positivity is
/// gated through the geometric route (max_radius); non-block-positive
/// inputs yield NotBlockPositive.
ClassLabel classify_by_determinants(const TwoQubitOperator& b,
                                    const Tolerances& tol = {});

/// Classification from the ellipsoid parameters alone.
ClassLabel classify_by_ellipsoid(const EllipsoidRep& e,
                                 const Tolerances& tol = {});

}  // namespace qsteer
