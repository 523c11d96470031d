#pragma once

#include <cstdint>

#include "qsteer/ellipsoid.hpp"
#include "qsteer/pauli.hpp"
#include "qsteer/tolerances.hpp"

// Brute-force verifiers, deliberately independent of the analytic paths
// they cross-check: product-state expectation minimization for block
// positivity and grid search for the ellipsoid max radius.

namespace qsteer {

struct ProductStateResult {
  double min_value = 0.0;
  Vec3 phi;  // Bloch vector of Alice's minimizing spinor
  Vec3 nu;   // Bloch vector of Bob's minimizing spinor
};

/// Minimize <phi x nu|B|phi x nu> = (1 + a.phi + b.nu + phi^T T nu)/4 by
/// alternating exact block updates (each block is linear on its sphere)
/// from n_starts random initial nu plus the six coordinate axes. Monotone
/// descent; deterministic for a fixed seed.
ProductStateResult min_product_expectation(const TwoQubitOperator& b,
                                           int n_starts = 64,
                                           uint64_t seed = 1);

/// Max of |c + T~ nu| on a Fibonacci-sphere grid, refined by projected
/// gradient ascent. Lower bound on the true maximum.
double brute_max_radius(const EllipsoidRep& e, int n_grid = 10000,
                        int refine_steps = 60);

/// Block positivity by the product-state oracle.
bool verify_block_positive(const TwoQubitOperator& b, int n_starts = 64,
                           uint64_t seed = 1, const Tolerances& tol = {});

}  // namespace qsteer
