#include "qsteer/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "qsteer/errors.hpp"

namespace qsteer {

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (n == 0.0) return {0, 0, 0};
  return {x / n, y / n, z / n};
}

Mat3 Mat3::identity() {
  Mat3 r;
  r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
  return r;
}

Mat3 Mat3::diag(double a, double b, double c) {
  Mat3 r;
  r(0, 0) = a;
  r(1, 1) = b;
  r(2, 2) = c;
  return r;
}

Mat3 Mat3::outer(const Vec3& u, const Vec3& v) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = u[i] * v[j];
  return r;
}

Mat3 Mat3::operator+(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = m[i] + o.m[i];
  return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = m[i] - o.m[i];
  return r;
}

Mat3 Mat3::operator*(double s) const {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = m[i] * s;
  return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int k = 0; k < 3; ++k) s += (*this)(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

Mat3 Mat3::transposed() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
  return r;
}

double Mat3::det() const {
  const auto& a = *this;
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

double Mat3::frobenius() const {
  double s = 0.0;
  for (double v : m) s += v * v;
  return std::sqrt(s);
}

double Mat3::max_abs() const {
  double s = 0.0;
  for (double v : m) s = std::max(s, std::abs(v));
  return s;
}

Mat2c Mat2c::operator*(const Mat2c& o) const {
  Mat2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cd s = 0.0;
      for (int k = 0; k < 2; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat2c Mat2c::adjoint() const {
  Mat2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

double Mat2c::herm_residual() const {
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      s = std::max(s, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return s;
}

Mat4c Mat4c::identity() {
  Mat4c r;
  for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
  return r;
}

Mat4c Mat4c::operator+(const Mat4c& o) const {
  Mat4c r;
  for (int i = 0; i < 16; ++i) r.m[i] = m[i] + o.m[i];
  return r;
}

Mat4c Mat4c::operator-(const Mat4c& o) const {
  Mat4c r;
  for (int i = 0; i < 16; ++i) r.m[i] = m[i] - o.m[i];
  return r;
}

Mat4c Mat4c::operator*(cd s) const {
  Mat4c r;
  for (int i = 0; i < 16; ++i) r.m[i] = m[i] * s;
  return r;
}

Mat4c Mat4c::operator*(const Mat4c& o) const {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cd s = 0.0;
      for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat4c Mat4c::adjoint() const {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

double Mat4c::frobenius() const {
  double s = 0.0;
  for (const cd& v : m) s += std::norm(v);
  return std::sqrt(s);
}

double Mat4c::herm_residual() const {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      s = std::max(s, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return s;
}

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

cd det_lu(const Mat4c& a) {
  Mat4c u = a;
  cd det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    double best = std::abs(u(col, col));
    for (int r = col + 1; r < 4; ++r) {
      const double v = std::abs(u(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < 4; ++j) std::swap(u(piv, j), u(col, j));
      det = -det;
    }
    det *= u(col, col);
    for (int r = col + 1; r < 4; ++r) {
      const cd f = u(r, col) / u(col, col);
      for (int j = col; j < 4; ++j) u(r, j) -= f * u(col, j);
    }
  }
  return det;
}

namespace {

// One real Jacobi rotation zeroing a(p,q); standard smaller-angle choice.
void rotate_sym3(Mat3& a, Mat3& v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  for (int k = 0; k < 3; ++k) {
    const double akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (int k = 0; k < 3; ++k) {
    const double apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  for (int k = 0; k < 3; ++k) {
    const double vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

double offdiag_sym3(const Mat3& a) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

SymEig3 eig_sym3(const Mat3& a_in) {
  // Symmetrize defensively; callers pass matrices symmetric up to rounding.
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = 0.5 * (a_in(i, j) + a_in(j, i));
  Mat3 v = Mat3::identity();
  const double scale = std::max(1.0, a.max_abs());
  for (int sweep = 0; sweep < 50; ++sweep) {
    if (offdiag_sym3(a) < 1e-15 * scale) break;
    rotate_sym3(a, v, 0, 1);
    rotate_sym3(a, v, 0, 2);
    rotate_sym3(a, v, 1, 2);
  }
  std::array<int, 3> idx = {0, 1, 2};
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return a(i, i) < a(j, j); });
  SymEig3 out;
  for (int k = 0; k < 3; ++k) {
    out.values[k] = a(idx[k], idx[k]);
    for (int r = 0; r < 3; ++r) out.vectors(r, k) = v(r, idx[k]);
  }
  return out;
}

namespace {

// Complex Jacobi rotation zeroing a(p,q). The phase of a(p,q) is folded
// into the rotation so the 2x2 subproblem reduces to the real case.
void rotate_herm4(Mat4c& a, Mat4c& v, int p, int q) {
  const cd apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cd phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  // J = [[c, s*phase], [-s*conj(phase), c]] acting on columns (p, q).
  const cd jpq = s * phase;
  const cd jqp = -s * std::conj(phase);
  for (int k = 0; k < 4; ++k) {
    const cd akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp + jqp * akq;
    a(k, q) = jpq * akp + c * akq;
  }
  for (int k = 0; k < 4; ++k) {
    const cd apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + c * aqk;
  }
  for (int k = 0; k < 4; ++k) {
    const cd vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp + jqp * vkq;
    v(k, q) = jpq * vkp + c * vkq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

double offdiag_herm4(const Mat4c& a) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

HermEig4 eig_herm4(const Mat4c& a_in) {
  Mat4c a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      a(i, j) = 0.5 * (a_in(i, j) + std::conj(a_in(j, i)));
  Mat4c v = Mat4c::identity();
  double scale = 1.0;
  for (const cd& e : a.m) scale = std::max(scale, std::abs(e));
  bool converged = false;
  for (int sweep = 0; sweep < 50; ++sweep) {
    if (offdiag_herm4(a) < 1e-15 * scale) {
      converged = true;
      break;
    }
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) rotate_herm4(a, v, p, q);
  }
  if (!converged && offdiag_herm4(a) >= 1e-12 * scale)
    throw NoConvergenceError("Jacobi eigensolver did not converge");
  std::array<int, 4> idx = {0, 1, 2, 3};
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
  HermEig4 out;
  for (int k = 0; k < 4; ++k) {
    out.values[k] = a(idx[k], idx[k]).real();
    for (int r = 0; r < 4; ++r) out.vectors(r, k) = v(r, idx[k]);
  }
  return out;
}

HermEig2 eig_herm2(const Mat2c& a) {
  const double a00 = a(0, 0).real();
  const double a11 = a(1, 1).real();
  const cd z = 0.5 * (a(0, 1) + std::conj(a(1, 0)));
  const double mean = 0.5 * (a00 + a11);
  const double half = 0.5 * (a00 - a11);
  const double disc = std::sqrt(half * half + std::norm(z));
  HermEig2 out;
  out.values = {mean - disc, mean + disc};
  if (disc == 0.0) {
    out.vectors = Mat2c::identity();
    return out;
  }
  for (int k = 0; k < 2; ++k) {
    const double lam = out.values[k];
    // Pick the better-conditioned of the two cofactor expressions.
    cd v0, v1;
    if (std::abs(lam - a11) > std::abs(lam - a00)) {
      v0 = lam - a11;
      v1 = std::conj(z);
    } else {
      v0 = z;
      v1 = lam - a00;
    }
    const double n = std::sqrt(std::norm(v0) + std::norm(v1));
    out.vectors(0, k) = v0 / n;
    out.vectors(1, k) = v1 / n;
  }
  return out;
}

}  // namespace qsteer
