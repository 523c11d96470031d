#pragma once

#include <array>

#include "qsteer/pauli.hpp"
#include "qsteer/tolerances.hpp"

// Ellipsoid representation of a two-qubit operator inside the Bloch
// sphere: centre c, matrix Q (squared semiaxes), canonical correlation
// matrix T~ and chirality chi = sign(det T~). The surface is the image
// of the unit sphere under nu -> c + T~ nu.

namespace qsteer {

struct EllipsoidRep {
  Vec3 c;
  Mat3 Q;
  Mat3 T_tilde;
  int chi = 0;             // sign(det T~), 0 when |det| <= tol.chi
  double det_T_tilde = 0;  // raw determinant, kept for marginal calls
  bool degenerate = false;     // rank Q < 3  (equivalent to chi == 0)
  bool singular_b = false;     // |b| = 1 branch: the ellipsoid is the point a
  bool bob_indefinite = false; // tr_A R has a negative eigenvalue; no
                               // ellipsoid representation exists and the
                               // operator cannot be block positive
  double gamma_b = 1.0;        // 1/sqrt(1-b^2); +inf on the singular branch
};

enum class SphereContainment { Inside, Touching, Outside };

/// Local filtering (1 x (2 R_B)^{-1/2}) R (1 x (2 R_B)^{-1/2}) that sets
/// Bob's marginal to 1/2. Throws SingularMarginalError when R_B has an
/// eigenvalue <= tol.sing.
TwoQubitOperator canonical_filter(const TwoQubitOperator& r,
                                  const Tolerances& tol = {});

EllipsoidRep ellipsoid_of(const TwoQubitOperator& r,
                          const Tolerances& tol = {});

/// r^(nu) = c + T~ nu, a surface point parametrised by a unit vector.
/// Throws DegenerateFrameError on the point-ellipsoid branch.
Vec3 surface_point(const EllipsoidRep& e, const Vec3& nu,
                   const Tolerances& tol = {});

struct Semiaxis {
  double length = 0.0;
  Vec3 direction;
};

/// Semiaxis lengths (sqrt of Q eigenvalues) in descending order with
/// orthonormal directions.
std::array<Semiaxis, 3> semiaxes(const EllipsoidRep& e);

/// Exact max of |c + T~ nu| over unit nu, via the stationarity (secular)
/// equation with safeguarded bisection/Newton; absolute accuracy ~1e-9.
/// Returns |c| on the point branch.
double max_radius(const EllipsoidRep& e);

SphereContainment is_inside_bloch_sphere(const EllipsoidRep& e,
                                         const Tolerances& tol = {});

}  // namespace qsteer
