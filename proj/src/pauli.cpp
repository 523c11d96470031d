#include "qsteer/pauli.hpp"

#include <cmath>
#include <string>

#include "qsteer/errors.hpp"

namespace qsteer {

namespace {

const cd kI(0.0, 1.0);

const std::array<Mat2c, 4> kPauli = {
    Mat2c{{cd(1), cd(0), cd(0), cd(1)}},    // identity
    Mat2c{{cd(0), cd(1), cd(1), cd(0)}},    // sigma_x
    Mat2c{{cd(0), -kI, kI, cd(0)}},         // sigma_y
    Mat2c{{cd(1), cd(0), cd(0), cd(-1)}},   // sigma_z
};

}  // namespace

const Mat2c& pauli_matrix(int i) { return kPauli[static_cast<size_t>(i)]; }

Mat4c pauli_tensor(int i, int j) { return kron(kPauli[i], kPauli[j]); }

void require_hermitian(const TwoQubitOperator& r, const Tolerances& tol) {
  const double res = r.herm_residual();
  if (res > tol.herm)
    throw NotHermitianError("Hermiticity residual " + std::to_string(res) +
                            " exceeds tolerance");
}

void require_unit_trace(const TwoQubitOperator& r, const Tolerances& tol) {
  const double res = std::abs(r.trace() - cd(1.0));
  if (res > tol.trace)
    throw NotUnitTraceError("trace residual " + std::to_string(res) +
                            " exceeds tolerance");
}

TwoQubitOperator normalized(const TwoQubitOperator& r, const Tolerances& tol) {
  const cd t = r.trace();
  if (std::abs(t) < tol.sing)
    throw NotUnitTraceError("trace too close to zero to normalize");
  return {r.m * (1.0 / t)};
}

PauliForm decompose(const TwoQubitOperator& r, const Tolerances& tol) {
  require_hermitian(r, tol);
  require_unit_trace(r, tol);
  PauliForm p;
  for (int i = 0; i < 3; ++i) {
    const Mat4c si = pauli_tensor(i + 1, 0);
    const Mat4c sj = pauli_tensor(0, i + 1);
    p.a[i] = (r.m * si).trace().real();
    p.b[i] = (r.m * sj).trace().real();
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      p.T(i, j) = (r.m * pauli_tensor(i + 1, j + 1)).trace().real();
  return p;
}

TwoQubitOperator reconstruct(const PauliForm& p) {
  Mat4c m = Mat4c::identity();
  for (int i = 0; i < 3; ++i) {
    m = m + pauli_tensor(i + 1, 0) * cd(p.a[i]);
    m = m + pauli_tensor(0, i + 1) * cd(p.b[i]);
    for (int j = 0; j < 3; ++j)
      m = m + pauli_tensor(i + 1, j + 1) * cd(p.T(i, j));
  }
  return {m * cd(0.25)};
}

TwoQubitOperator partial_transpose_B(const TwoQubitOperator& r) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(2 * i + l, 2 * j + k) = r.m(2 * i + k, 2 * j + l);
  return {out};
}

Mat2c partial_trace_A(const TwoQubitOperator& r) {
  Mat2c out;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      out(k, l) = r.m(k, l) + r.m(2 + k, 2 + l);
  return out;
}

double det4(const TwoQubitOperator& r) { return det_lu(r.m).real(); }

std::array<double, 4> eigenvalues4(const TwoQubitOperator& r) {
  return eig_herm4(r.m).values;
}

HermEig4 eigensystem4(const TwoQubitOperator& r) { return eig_herm4(r.m); }

double expectation(const TwoQubitOperator& r, const std::array<cd, 4>& psi) {
  cd s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += std::conj(psi[i]) * r.m(i, j) * psi[j];
  return s.real();
}

double trace_product(const TwoQubitOperator& x, const TwoQubitOperator& y) {
  return (x.m * y.m).trace().real();
}

std::array<cd, 4> product_state(const std::array<cd, 2>& phi,
                                const std::array<cd, 2>& nu) {
  return {phi[0] * nu[0], phi[0] * nu[1], phi[1] * nu[0], phi[1] * nu[1]};
}

std::array<cd, 2> spinor_from_bloch(const Vec3& n) {
  const double theta = std::acos(std::clamp(n.z, -1.0, 1.0));
  const double phi = std::atan2(n.y, n.x);
  return {cd(std::cos(theta / 2.0)),
          std::exp(kI * phi) * std::sin(theta / 2.0)};
}

TwoQubitOperator projector(const std::array<cd, 4>& psi) {
  Mat4c m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return {m};
}

}  // namespace qsteer
