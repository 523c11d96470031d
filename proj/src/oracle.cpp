#include "qsteer/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qsteer/errors.hpp"
#include "qsteer/rng.hpp"

namespace qsteer {

namespace {

double product_value(const PauliForm& p, const Vec3& phi, const Vec3& nu) {
  return 0.25 * (1.0 + p.a.dot(phi) + p.b.dot(nu) + phi.dot(p.T * nu));
}

bool lex_less(const Vec3& a, const Vec3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

}  // namespace

ProductStateResult min_product_expectation(const TwoQubitOperator& b,
                                           int n_starts, uint64_t seed) {
  const PauliForm p = decompose(b);
  const Mat3 tT = p.T.transposed();

  std::vector<Vec3> starts;
  starts.reserve(static_cast<size_t>(n_starts) + 6);
  for (int s = 0; s < 3; ++s) {
    Vec3 axis;
    axis[s] = 1.0;
    starts.push_back(axis);
    starts.push_back(-axis);
  }
  Rng rng(seed);
  for (int s = 0; s < n_starts; ++s) starts.push_back(sample_unit_vec3(rng));

  ProductStateResult best;
  bool first = true;
  for (const Vec3& start : starts) {
    Vec3 nu = start;
    Vec3 phi = -(p.a + p.T * nu).normalized();
    if (phi.norm() == 0.0) phi = Vec3{1, 0, 0};
    double value = product_value(p, phi, nu);
    for (int it = 0; it < 500; ++it) {
      // Exact block updates; a vanishing gradient leaves the block as is
      // (the objective no longer depends on it).
      const Vec3 gphi = p.a + p.T * nu;
      if (gphi.norm() > 0.0) phi = -gphi.normalized();
      const Vec3 gnu = p.b + tT * phi;
      if (gnu.norm() > 0.0) nu = -gnu.normalized();
      const double next = product_value(p, phi, nu);
      if (value - next < 1e-15) {
        value = next;
        break;
      }
      value = next;
    }
    if (first || value < best.min_value ||
        (value == best.min_value && lex_less(phi, best.phi))) {
      best = {value, phi, nu};
      first = false;
    }
  }
  return best;
}

double brute_max_radius(const EllipsoidRep& e, int n_grid, int refine_steps) {
  if (e.singular_b)
    throw DegenerateFrameError("brute_max_radius needs a surface to sample");
  const auto radius2 = [&](const Vec3& nu) {
    const Vec3 r = e.c + e.T_tilde * nu;
    return r.dot(r);
  };

  // Fibonacci sphere.
  const double golden = 2.399963229728653;  // pi * (3 - sqrt(5))
  Vec3 best_nu{0, 0, 1};
  double best = radius2(best_nu);
  for (int i = 0; i < n_grid; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n_grid;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double th = golden * i;
    const Vec3 nu{rho * std::cos(th), rho * std::sin(th), z};
    const double v = radius2(nu);
    if (v > best) {
      best = v;
      best_nu = nu;
    }
  }

  // Projected gradient ascent with backtracking.
  Vec3 nu = best_nu;
  double step = 0.5;
  for (int it = 0; it < refine_steps; ++it) {
    const Vec3 grad =
        e.T_tilde.transposed() * (e.c + e.T_tilde * nu) * 2.0;
    const Vec3 tangent = grad - nu * grad.dot(nu);
    if (tangent.norm() < 1e-15) break;
    bool improved = false;
    while (step > 1e-18) {
      const Vec3 cand = (nu + tangent * step).normalized();
      if (radius2(cand) > best) {
        nu = cand;
        best = radius2(cand);
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return std::sqrt(best);
}

bool verify_block_positive(const TwoQubitOperator& b, int n_starts,
                           uint64_t seed, const Tolerances& tol) {
  return min_product_expectation(b, n_starts, seed).min_value >= -tol.cls;
}

}  // namespace qsteer
