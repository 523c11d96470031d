#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

// Small fixed-size real/complex dense types used throughout the library.
// Everything here is value-semantic and allocation-free; the matrices are
// at most 4x4, so simple O(n^3) routines are exact enough and fast enough.

namespace qsteer {

using cd = std::complex<double>;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const;
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Real 3x3 matrix, row-major.
struct Mat3 {
  std::array<double, 9> m{};

  double operator()(int i, int j) const { return m[3 * i + j]; }
  double& operator()(int i, int j) { return m[3 * i + j]; }

  static Mat3 zero() { return {}; }
  static Mat3 identity();
  static Mat3 diag(double a, double b, double c);
  static Mat3 outer(const Vec3& u, const Vec3& v);

  Mat3 operator+(const Mat3& o) const;
  Mat3 operator-(const Mat3& o) const;
  Mat3 operator*(double s) const;
  Mat3 operator*(const Mat3& o) const;
  Vec3 operator*(const Vec3& v) const;

  Mat3 transposed() const;
  double trace() const { return m[0] + m[4] + m[8]; }
  double det() const;
  double frobenius() const;
  double max_abs() const;
};

/// Complex 2x2 matrix, row-major.
struct Mat2c {
  std::array<cd, 4> m{};

  cd operator()(int i, int j) const { return m[2 * i + j]; }
  cd& operator()(int i, int j) { return m[2 * i + j]; }

  static Mat2c identity() { return {{cd(1), cd(0), cd(0), cd(1)}}; }

  Mat2c operator*(const Mat2c& o) const;
  Mat2c adjoint() const;
  cd trace() const { return m[0] + m[3]; }
  cd det() const { return m[0] * m[3] - m[1] * m[2]; }
  double herm_residual() const;
};

/// Complex 4x4 matrix, row-major.
struct Mat4c {
  std::array<cd, 16> m{};

  cd operator()(int i, int j) const { return m[4 * i + j]; }
  cd& operator()(int i, int j) { return m[4 * i + j]; }

  static Mat4c zero() { return {}; }
  static Mat4c identity();

  Mat4c operator+(const Mat4c& o) const;
  Mat4c operator-(const Mat4c& o) const;
  Mat4c operator*(cd s) const;
  Mat4c operator*(const Mat4c& o) const;

  Mat4c adjoint() const;
  cd trace() const { return m[0] + m[5] + m[10] + m[15]; }
  double frobenius() const;
  /// max entrywise |M - M^dagger|
  double herm_residual() const;
};

Mat4c kron(const Mat2c& a, const Mat2c& b);

/// Determinant via LU with partial pivoting.
cd det_lu(const Mat4c& a);

struct SymEig3 {
  std::array<double, 3> values{};  // ascending
  Mat3 vectors;                    // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi for a real symmetric 3x3 matrix.
SymEig3 eig_sym3(const Mat3& a);

struct HermEig4 {
  std::array<double, 4> values{};  // ascending
  Mat4c vectors;                   // column k eigenvector of values[k]
};

/// Cyclic Jacobi for a complex Hermitian 4x4 matrix. Throws NoConvergenceError
/// if the off-diagonal mass fails to vanish within the sweep budget.
HermEig4 eig_herm4(const Mat4c& a);

struct HermEig2 {
  std::array<double, 2> values{};  // ascending
  Mat2c vectors;
};

/// Closed-form eigendecomposition of a Hermitian 2x2 matrix.
HermEig2 eig_herm2(const Mat2c& a);

/// f applied to a Hermitian 2x2 matrix through its eigendecomposition.
template <typename F>
Mat2c herm2_apply(const Mat2c& a, F f) {
  const HermEig2 e = eig_herm2(a);
  Mat2c r{};
  for (int k = 0; k < 2; ++k) {
    const cd v0 = e.vectors(0, k), v1 = e.vectors(1, k);
    const double fk = f(e.values[k]);
    r(0, 0) += fk * v0 * std::conj(v0);
    r(0, 1) += fk * v0 * std::conj(v1);
    r(1, 0) += fk * v1 * std::conj(v0);
    r(1, 1) += fk * v1 * std::conj(v1);
  }
  return r;
}

}  // namespace qsteer
