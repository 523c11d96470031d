#include "qsteer/rng.hpp"

#include <cmath>

namespace qsteer {

Vec3 sample_unit_vec3(Rng& rng) {
  Vec3 v;
  do {
    v = {rng.normal(), rng.normal(), rng.normal()};
  } while (v.norm() < 1e-12);
  return v.normalized();
}

Vec3 sample_in_ball3(Rng& rng, double radius) {
  const Vec3 dir = sample_unit_vec3(rng);
  const double r = radius * std::cbrt(rng.uniform());
  return dir * r;
}

Mat3 sample_gaussian_mat3(Rng& rng) {
  Mat3 t;
  for (int i = 0; i < 9; ++i) t.m[i] = rng.normal();
  return t;
}

std::array<cd, 4> sample_haar_state(Rng& rng) {
  std::array<cd, 4> psi;
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (auto& a : psi) {
      a = cd(rng.normal(), rng.normal());
      n2 += std::norm(a);
    }
  } while (n2 < 1e-12);
  const double n = std::sqrt(n2);
  for (auto& a : psi) a /= n;
  return psi;
}

TwoQubitOperator sample_ginibre_state(Rng& rng) {
  Mat4c g;
  for (auto& e : g.m) e = cd(rng.normal(), rng.normal());
  Mat4c rho = g * g.adjoint();
  const double tr = rho.trace().real();
  return {rho * cd(1.0 / tr)};
}

TwoQubitOperator sample_hermitian_unit_trace(Rng& rng, double scale) {
  Mat4c g;
  for (auto& e : g.m) e = cd(rng.normal(), rng.normal());
  Mat4c h = (g + g.adjoint()) * cd(0.5 * scale);
  const double tr = h.trace().real();
  for (int i = 0; i < 4; ++i) h(i, i) -= cd((tr - 1.0) / 4.0);
  return {h};
}

Mat2c sample_unitary2(Rng& rng) {
  // QR of a Ginibre matrix via Gram-Schmidt on the columns.
  std::array<cd, 2> c0 = {cd(rng.normal(), rng.normal()),
                          cd(rng.normal(), rng.normal())};
  std::array<cd, 2> c1 = {cd(rng.normal(), rng.normal()),
                          cd(rng.normal(), rng.normal())};
  double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
  c0 = {c0[0] / n0, c0[1] / n0};
  const cd ip = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
  c1 = {c1[0] - ip * c0[0], c1[1] - ip * c0[1]};
  double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
  c1 = {c1[0] / n1, c1[1] / n1};
  Mat2c u;
  u(0, 0) = c0[0];
  u(1, 0) = c0[1];
  u(0, 1) = c1[0];
  u(1, 1) = c1[1];
  return u;
}

Mat2c sample_invertible2(Rng& rng, double min_singular_value) {
  for (;;) {
    Mat2c g;
    for (auto& e : g.m) e = cd(rng.normal(), rng.normal());
    // Smallest singular value from the 2x2 Gram matrix.
    const Mat2c gram = g.adjoint() * g;
    const HermEig2 e = eig_herm2(gram);
    if (std::sqrt(std::max(0.0, e.values[0])) >= min_singular_value) return g;
  }
}

}  // namespace qsteer
