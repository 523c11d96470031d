#pragma once

#include <array>

#include "qsteer/linalg.hpp"
#include "qsteer/tolerances.hpp"

// Pauli-basis algebra for two-qubit Hermitian unit-trace operators.
// Basis order is |00>, |01>, |10>, |11> with the first tensor factor
// belonging to qubit A. Pauli convention: sigma_y = [[0, -i], [i, 0]];
// every sign-sensitive quantity downstream (chirality, partial
// transpose) depends on this choice.

namespace qsteer {

/// 4x4 complex Hermitian operator with unit trace; the universal input.
/// R, B, rho and W are all carried by this type; invariants are enforced
/// at the operation boundaries rather than on construction.
struct TwoQubitOperator {
  Mat4c m;

  cd trace() const { return m.trace(); }
  double herm_residual() const { return m.herm_residual(); }
};

/// Local Bloch vectors and correlation matrix of a two-qubit operator:
/// R = (1 x 1 + a.sigma x 1 + 1 x b.sigma + sum_ij T_ij sigma_i x sigma_j)/4.
struct PauliForm {
  Vec3 a;
  Vec3 b;
  Mat3 T;
};

const Mat2c& pauli_matrix(int i);  // 0 = identity, 1..3 = sigma_x/y/z

/// sigma_i x sigma_j with the 0 index meaning identity.
Mat4c pauli_tensor(int i, int j);

void require_hermitian(const TwoQubitOperator& r, const Tolerances& tol = {});
void require_unit_trace(const TwoQubitOperator& r, const Tolerances& tol = {});

/// Divide by the trace. Throws NotUnitTraceError when the trace is too
/// close to zero for normalization to make sense.
TwoQubitOperator normalized(const TwoQubitOperator& r,
                            const Tolerances& tol = {});

/// a_i = tr(R sigma_i x 1), b_j = tr(R 1 x sigma_j), T_ij = tr(R sigma_i x sigma_j).
PauliForm decompose(const TwoQubitOperator& r, const Tolerances& tol = {});

/// Inverse of decompose; unit trace by construction.
TwoQubitOperator reconstruct(const PauliForm& p);

/// Transpose of the second tensor factor. Involutive; in Pauli form it
/// negates b_y and the y-column of T.
TwoQubitOperator partial_transpose_B(const TwoQubitOperator& r);

/// tr_A R, Bob's 2x2 marginal.
Mat2c partial_trace_A(const TwoQubitOperator& r);

/// Real determinant (LU with partial pivoting; the imaginary residue of a
/// Hermitian input is rounding noise and is discarded).
double det4(const TwoQubitOperator& r);

/// Ascending real eigenvalues via cyclic Jacobi.
std::array<double, 4> eigenvalues4(const TwoQubitOperator& r);

/// Full eigensystem; used where eigenvectors are needed (detection seeds,
/// PSD checks with witnesses attached).
HermEig4 eigensystem4(const TwoQubitOperator& r);

/// <psi| R |psi> for a 4-component state vector.
double expectation(const TwoQubitOperator& r, const std::array<cd, 4>& psi);

/// tr(X Y), real part (exact for two Hermitian inputs).
double trace_product(const TwoQubitOperator& x, const TwoQubitOperator& y);

/// |phi> x |nu> from single-qubit spinors.
std::array<cd, 4> product_state(const std::array<cd, 2>& phi,
                                const std::array<cd, 2>& nu);

/// Spinor with Bloch vector n (|n| = 1).
std::array<cd, 2> spinor_from_bloch(const Vec3& n);

/// Projector |psi><psi| as an operator.
TwoQubitOperator projector(const std::array<cd, 4>& psi);

}  // namespace qsteer
