#include "qsteer/ellipsoid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qsteer/errors.hpp"

namespace qsteer {

TwoQubitOperator canonical_filter(const TwoQubitOperator& r,
                                  const Tolerances& tol) {
  const Mat2c rb = partial_trace_A(r);
  const HermEig2 e = eig_herm2(rb);
  if (e.values[0] <= tol.sing)
    throw SingularMarginalError("Bob marginal is singular; canonical "
                                "transformation cannot be performed");
  const Mat2c s =
      herm2_apply(rb, [](double lam) { return 1.0 / std::sqrt(2.0 * lam); });
  const Mat4c filter = kron(Mat2c::identity(), s);
  return {filter * r.m * filter};
}

EllipsoidRep ellipsoid_of(const TwoQubitOperator& r, const Tolerances& tol) {
  const PauliForm p = decompose(r, tol);
  const Mat2c rb = partial_trace_A(r);
  const HermEig2 marg = eig_herm2(rb);

  EllipsoidRep rep;
  if (marg.values[0] <= tol.sing) {
    // Footnote branch: b = 1 means the ellipsoid collapses to the point a.
    // A genuinely indefinite marginal (eigenvalue < 0 beyond tolerance) is
    // not representable at all; block positivity is ruled out because
    // <nu|tr_A R|nu> is a sum of product-state expectations.
    rep.singular_b = true;
    rep.degenerate = true;
    rep.bob_indefinite = marg.values[0] < -tol.sing;
    rep.c = p.a;
    rep.Q = Mat3::zero();
    rep.T_tilde = Mat3::zero();
    rep.chi = 0;
    rep.det_T_tilde = 0.0;
    rep.gamma_b = std::numeric_limits<double>::infinity();
    return rep;
  }

  const double b2 = p.b.dot(p.b);
  const double gamma2 = 1.0 / (1.0 - b2);
  rep.gamma_b = std::sqrt(gamma2);
  rep.c = gamma2 * (p.a - p.T * p.b);

  const Mat3 left = p.T - Mat3::outer(p.a, p.b);
  const Mat3 mid = Mat3::identity() + Mat3::outer(p.b, p.b) * gamma2;
  Mat3 q = (left * mid * left.transposed()) * gamma2;
  // Symmetrize and clip tiny negative eigenvalues; Q is PSD by construction,
  // so anything more negative than -tol.geom signals a real bug.
  q = (q + q.transposed()) * 0.5;
  const SymEig3 qe = eig_sym3(q);
  if (qe.values[0] < -tol.geom)
    throw std::logic_error("ellipsoid matrix has a negative eigenvalue");
  if (qe.values[0] < 0.0) {
    Mat3 rebuilt = Mat3::zero();
    for (int k = 0; k < 3; ++k) {
      const double lam = std::max(0.0, qe.values[k]);
      Vec3 v{qe.vectors(0, k), qe.vectors(1, k), qe.vectors(2, k)};
      rebuilt = rebuilt + Mat3::outer(v, v) * lam;
    }
    q = rebuilt;
  }
  rep.Q = q;

  rep.T_tilde = decompose(canonical_filter(r, tol), tol).T;
  rep.det_T_tilde = rep.T_tilde.det();
  rep.chi = std::abs(rep.det_T_tilde) <= tol.chi
                ? 0
                : (rep.det_T_tilde > 0.0 ? 1 : -1);
  rep.degenerate = rep.chi == 0;
  return rep;
}

Vec3 surface_point(const EllipsoidRep& e, const Vec3& nu,
                   const Tolerances& tol) {
  if (e.singular_b)
    throw DegenerateFrameError("surface of a point ellipsoid is the point itself");
  if (std::abs(nu.norm() - 1.0) > tol.geom)
    throw std::invalid_argument("surface_point requires a unit vector");
  return e.c + e.T_tilde * nu;
}

std::array<Semiaxis, 3> semiaxes(const EllipsoidRep& e) {
  const SymEig3 qe = eig_sym3(e.Q);
  std::array<Semiaxis, 3> out;
  for (int k = 0; k < 3; ++k) {
    const int src = 2 - k;  // descending
    out[k].length = std::sqrt(std::max(0.0, qe.values[src]));
    out[k].direction = {qe.vectors(0, src), qe.vectors(1, src),
                        qe.vectors(2, src)};
  }
  return out;
}

namespace {

// Maximize |c + T~ nu|^2 = |c|^2 + 2 g.nu + nu^T M nu over |nu| = 1, with
// M = T~^T T~ and g = T~^T c. Stationarity gives nu(lam) = (lam I - M)^{-1} g
// with lam >= lam_max(M); the secular equation |nu(lam)| = 1 is solved by
// bisection with Newton refinement. When g has no component in the top
// eigenspace and |nu(lam_max)| < 1 (the hard case), the solution sits at
// lam = lam_max with a top-eigenvector component making up the norm.
double max_radius_core(const Vec3& c, const Mat3& t_tilde) {
  const Mat3 m = t_tilde.transposed() * t_tilde;
  const Vec3 g = t_tilde.transposed() * c;
  const SymEig3 me = eig_sym3(m);
  const double lam_max = me.values[2];
  const double scale = std::max({1.0, lam_max, g.norm()});

  std::array<double, 3> h{};
  for (int k = 0; k < 3; ++k) {
    Vec3 v{me.vectors(0, k), me.vectors(1, k), me.vectors(2, k)};
    h[k] = v.dot(g);
  }

  const auto nu_from_coeffs = [&](const std::array<double, 3>& w) {
    Vec3 nu{0, 0, 0};
    for (int k = 0; k < 3; ++k) {
      Vec3 v{me.vectors(0, k), me.vectors(1, k), me.vectors(2, k)};
      nu += w[k] * v;
    }
    return nu;
  };
  const auto radius_at = [&](const Vec3& nu) {
    return (c + t_tilde * nu.normalized()).norm();
  };

  // Top eigenspace within a tight numerical band.
  const double eig_band = 1e-12 * scale;
  double top_mass = 0.0, rest_norm2 = 0.0;
  std::array<double, 3> w_at_top{};
  for (int k = 0; k < 3; ++k) {
    if (lam_max - me.values[k] <= eig_band) {
      top_mass += h[k] * h[k];
    } else {
      w_at_top[k] = h[k] / (lam_max - me.values[k]);
      rest_norm2 += w_at_top[k] * w_at_top[k];
    }
  }

  if (std::sqrt(top_mass) <= 1e-13 * scale && rest_norm2 <= 1.0) {
    // Hard case: pad with the top eigenvector. The objective does not
    // depend on the sign of the padding component since g is orthogonal
    // to the top eigenspace.
    for (int k = 2; k >= 0; --k) {
      if (lam_max - me.values[k] <= eig_band) {
        w_at_top[k] = std::sqrt(std::max(0.0, 1.0 - rest_norm2));
        break;
      }
    }
    return radius_at(nu_from_coeffs(w_at_top));
  }

  const auto norm_nu = [&](double lam) {
    double s = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double d = lam - me.values[k];
      const double wk = h[k] / d;
      s += wk * wk;
    }
    return std::sqrt(s);
  };

  // |nu(lam)| is strictly decreasing on (lam_max, inf); bracket the root.
  double lo = lam_max + 1e-15 * scale;
  double hi = lam_max + g.norm() + m.trace() + 1.0;
  while (norm_nu(lo) < 1.0 && lo > lam_max + 1e-300) {
    // The pole is weak because h's top components are tiny; step closer.
    lo = lam_max + (lo - lam_max) * 1e-3;
  }
  double lam = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double n = norm_nu(lam);
    if (std::abs(n - 1.0) < 1e-14) break;
    if (n > 1.0)
      lo = lam;
    else
      hi = lam;
    // Newton step on f(lam) = |nu(lam)| - 1, safeguarded by the bracket.
    double dn = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double d = lam - me.values[k];
      dn -= (h[k] * h[k]) / (d * d * d);
    }
    dn /= n;
    double next = lam - (n - 1.0) / dn;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - lam) < 1e-16 * scale && it > 8) {
      lam = next;
      break;
    }
    lam = next;
  }

  std::array<double, 3> w{};
  for (int k = 0; k < 3; ++k) w[k] = h[k] / (lam - me.values[k]);
  return radius_at(nu_from_coeffs(w));
}

}  // namespace

double max_radius(const EllipsoidRep& e) {
  if (e.singular_b) return e.c.norm();
  return max_radius_core(e.c, e.T_tilde);
}

SphereContainment is_inside_bloch_sphere(const EllipsoidRep& e,
                                         const Tolerances& tol) {
  if (e.bob_indefinite) return SphereContainment::Outside;
  const double r = max_radius(e);
  if (r < 1.0 - tol.contact) return SphereContainment::Inside;
  if (r <= 1.0 + tol.contact) return SphereContainment::Touching;
  return SphereContainment::Outside;
}

}  // namespace qsteer
