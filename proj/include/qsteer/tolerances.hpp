#pragma once

namespace qsteer {

/// Numerical tolerances. All operators handled here are 4x4 with entries
/// O(1), so double precision leaves several orders of headroom above the
/// defaults; override only for deliberately ill-conditioned inputs.
struct Tolerances {
  double herm = 1e-10;     // entrywise Hermiticity residual
  double trace = 1e-10;    // |tr - 1|
  double recon = 1e-9;     // decompose/reconstruct round trip
  double eig = 1e-9;       // eigenvalue sum vs trace
  double geom = 1e-9;      // ellipsoid geometry identities
  double sing = 1e-8;      // smallest marginal eigenvalue before the
                           // point-ellipsoid branch kicks in
  double chi = 1e-9;       // |det T~| below which chirality is 0
  double contact = 1e-8;   // |max_radius - 1| band counted as touching
  double cls = 1e-9;       // dead band on determinant / boundary signs
};

}  // namespace qsteer
