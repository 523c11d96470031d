#include "qsteer/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsteer/errors.hpp"
#include "qsteer/rng.hpp"

namespace qsteer {

namespace {

Mat4c full_transpose(const Mat4c& m) {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = m(j, i);
  return r;
}

double frobenius_distance(const Mat4c& a, const Mat4c& b) {
  return (a - b).frobenius();
}

/// Smaller Schmidt coefficient of a two-qubit pure state.
double schmidt_min(const std::array<cd, 4>& psi) {
  // psi reshaped as a 2x2 matrix M, Schmidt coefficients = singular values.
  Mat2c m;
  m(0, 0) = psi[0];
  m(0, 1) = psi[1];
  m(1, 0) = psi[2];
  m(1, 1) = psi[3];
  const HermEig2 e = eig_herm2(m.adjoint() * m);
  return std::sqrt(std::max(0.0, e.values[0]));
}

std::array<cd, 4> normalized_state(const std::array<cd, 4>& psi) {
  double n2 = 0.0;
  for (const cd& a : psi) n2 += std::norm(a);
  if (n2 <= 0.0) throw std::invalid_argument("zero state vector");
  std::array<cd, 4> out = psi;
  const double n = std::sqrt(n2);
  for (cd& a : out) a /= n;
  return out;
}

}  // namespace

WitnessProperties analyze_witness(const TwoQubitOperator& b,
                                  const Tolerances& tol) {
  WitnessProperties props;
  const EllipsoidRep e = ellipsoid_of(b, tol);
  props.class_label = classify_by_determinants(b, tol);
  props.negative_eigenvalue = eigenvalues4(b)[0];
  props.is_witness = props.class_label.value == OperatorClass::C ||
                     props.class_label.value == OperatorClass::D;
  props.optimal = props.is_witness && e.chi == 1 &&
                  e.c.norm() <= tol.geom &&
                  (e.Q - Mat3::identity()).frobenius() <= tol.geom;
  props.weakly_optimal =
      props.is_witness &&
      is_inside_bloch_sphere(e, tol) == SphereContainment::Touching;
  props.in_ew4 =
      frobenius_distance(b.m, full_transpose(b.m)) <= tol.cls &&
      frobenius_distance(b.m, partial_transpose_B(b).m) <= tol.cls;
  return props;
}

bool detects(const TwoQubitOperator& w, const TwoQubitOperator& rho,
             const Tolerances& tol) {
  if (rho.herm_residual() > tol.herm)
    throw NotAStateError("state is not Hermitian");
  if (std::abs(rho.trace() - cd(1.0)) > tol.trace)
    throw NotAStateError("state does not have unit trace");
  if (eigenvalues4(rho)[0] < -tol.cls)
    throw NotAStateError("state has a negative eigenvalue");
  return trace_product(rho, w) < -tol.cls;
}

FinerResult is_finer(const TwoQubitOperator& w1, const TwoQubitOperator& w2,
                     uint64_t seed, int n_samples, const Tolerances& tol) {
  FinerResult result;

  // Sufficient certificate: W2 - W1 PSD means tr(rho W1) <= tr(rho W2)
  // for every state, so everything W2 detects W1 detects.
  const TwoQubitOperator diff{w2.m - w1.m};
  if (eig_herm4(diff.m).values[0] >= -tol.cls) {
    result.outcome = FinerOutcome::Finer;
    return result;
  }

  const auto check = [&](const TwoQubitOperator& rho) {
    const double t2 = trace_product(rho, w2);
    if (t2 >= -tol.cls) return false;
    const double t1 = trace_product(rho, w1);
    if (t1 < 0.0) return false;
    result.outcome = FinerOutcome::CounterexampleState;
    result.state = rho;
    result.tr_w1 = t1;
    result.tr_w2 = t2;
    return true;
  };

  // The most negative eigenstate of W2 is always detected by W2.
  const HermEig4 w2eig = eig_herm4(w2.m);
  std::array<cd, 4> ground;
  for (int i = 0; i < 4; ++i) ground[i] = w2eig.vectors(i, 0);
  if (check(projector(ground))) return result;

  Rng rng(seed);
  struct Scored {
    double score;
    std::array<cd, 4> psi;
  };
  std::vector<Scored> leaders;
  const auto score_of = [&](const std::array<cd, 4>& psi) {
    const TwoQubitOperator rho = projector(psi);
    return std::min(-trace_product(rho, w2), trace_product(rho, w1));
  };
  const auto offer = [&](const std::array<cd, 4>& psi, double s) {
    leaders.push_back({s, psi});
    std::sort(leaders.begin(), leaders.end(),
              [](const Scored& a, const Scored& b) { return a.score > b.score; });
    if (leaders.size() > 8) leaders.pop_back();
  };

  for (int i = 0; i < n_samples; ++i) {
    const std::array<cd, 4> psi = sample_haar_state(rng);
    const TwoQubitOperator rho = projector(psi);
    if (check(rho)) return result;
    offer(psi, score_of(psi));
  }
  for (int i = 0; i < n_samples / 10; ++i) {
    if (check(sample_ginibre_state(rng))) return result;
  }

  // Subgradient ascent on f(psi) = min(-<W2>, <W1>) over the unit sphere,
  // from the best sampled pure states; a positive value is a
  // counterexample near the detection boundary of W2.
  const auto apply = [](const Mat4c& m, const std::array<cd, 4>& v) {
    std::array<cd, 4> r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i] += m(i, j) * v[j];
    return r;
  };
  for (const Scored& start : leaders) {
    std::array<cd, 4> psi = start.psi;
    double f = start.score;
    double step = 0.25;
    for (int it = 0; it < 120 && step > 1e-14; ++it) {
      const TwoQubitOperator rho = projector(psi);
      const double f2 = -trace_product(rho, w2);
      const double f1 = trace_product(rho, w1);
      const Mat4c active = (f2 < f1) ? (w2.m * cd(-1.0)) : w1.m;
      std::array<cd, 4> grad = apply(active, psi);
      cd ip = 0.0;
      for (int i = 0; i < 4; ++i) ip += std::conj(psi[i]) * grad[i];
      double tnorm2 = 0.0;
      for (int i = 0; i < 4; ++i) {
        grad[i] -= ip * psi[i];
        tnorm2 += std::norm(grad[i]);
      }
      if (tnorm2 < 1e-24) break;
      std::array<cd, 4> cand;
      bool improved = false;
      while (step > 1e-14) {
        double n2 = 0.0;
        for (int i = 0; i < 4; ++i) {
          cand[i] = psi[i] + step * grad[i];
          n2 += std::norm(cand[i]);
        }
        const double n = std::sqrt(n2);
        for (auto& a : cand) a /= n;
        const double fc = score_of(cand);
        if (fc > f) {
          psi = cand;
          f = fc;
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) break;
    }
    if (f > tol.cls && check(projector(psi))) return result;
  }

  result.outcome = FinerOutcome::Inconclusive;
  return result;
}

TwoQubitOperator flip_witness() {
  Mat4c m;
  m(0, 0) = 0.5;
  m(1, 2) = 0.5;
  m(2, 1) = 0.5;
  m(3, 3) = 0.5;
  return {m};
}

TwoQubitOperator wp_witness(double p) {
  Mat4c m;
  m(0, 0) = 0.5 * p;
  m(1, 1) = 0.5 * (1.0 - p);
  m(1, 2) = 0.5;
  m(2, 1) = 0.5;
  m(2, 2) = 0.5 * (1.0 - p);
  m(3, 3) = 0.5 * p;
  return {m};
}

TwoQubitOperator bell_phi_plus() {
  Mat4c m;
  m(0, 0) = 0.5;
  m(0, 3) = 0.5;
  m(3, 0) = 0.5;
  m(3, 3) = 0.5;
  return {m};
}

TwoQubitOperator pure_state_witness(const std::array<cd, 4>& psi,
                                    const Tolerances& tol) {
  const std::array<cd, 4> n = normalized_state(psi);
  if (schmidt_min(n) <= tol.geom)
    throw NotEntangledError("pure state witness requires an entangled state");
  return partial_transpose_B(projector(n));
}

TwoQubitOperator ew4_optimal(const std::array<cd, 4>& psi,
                             const Tolerances& tol) {
  for (const cd& a : psi)
    if (std::abs(a.imag()) > tol.herm)
      throw NotRealError("EW4 construction requires real amplitudes");
  const std::array<cd, 4> n = normalized_state(psi);
  if (schmidt_min(n) <= tol.geom)
    throw NotEntangledError("EW4 construction requires an entangled state");
  const TwoQubitOperator rho = projector(n);
  return {(rho.m + partial_transpose_B(rho).m) * cd(0.5)};
}

TwoQubitOperator werner(double w) {
  if (w < 0.0 || w > 1.0)
    throw std::invalid_argument("werner parameter must lie in [0, 1]");
  const Mat4c bell = bell_phi_plus().m;
  return {bell * cd(w) + Mat4c::identity() * cd((1.0 - w) / 4.0)};
}

namespace {

// Gauge of a point against an ellipsoid: <= 1 inside, with the
// off-support component of a degenerate ellipsoid penalized so that any
// excursion out of the support plane registers as outside.
struct EllipsoidGauge {
  Vec3 centre;
  SymEig3 eig;
  double support_floor;

  explicit EllipsoidGauge(const EllipsoidRep& e)
      : centre(e.c), eig(eig_sym3(e.Q)) {
    support_floor = 1e-10 * std::max(1.0, eig.values[2]);
  }

  double operator()(const Vec3& x) const {
    const Vec3 d = x - centre;
    double g = 0.0;
    for (int k = 0; k < 3; ++k) {
      const Vec3 v{eig.vectors(0, k), eig.vectors(1, k), eig.vectors(2, k)};
      const double comp = d.dot(v);
      if (eig.values[k] > support_floor)
        g += comp * comp / eig.values[k];
      else
        g += comp * comp * 1e12;
    }
    return g;
  }

  Vec3 gradient(const Vec3& x) const {
    const Vec3 d = x - centre;
    Vec3 g{0, 0, 0};
    for (int k = 0; k < 3; ++k) {
      const Vec3 v{eig.vectors(0, k), eig.vectors(1, k), eig.vectors(2, k)};
      const double comp = d.dot(v);
      const double w =
          eig.values[k] > support_floor ? 1.0 / eig.values[k] : 1e12;
      g += v * (2.0 * comp * w);
    }
    return g;
  }
};

/// Max of the E* gauge over the surface c + T nu, by grid plus projected
/// gradient refinement. The candidate fits inside E* iff this is <= 1.
double max_gauge_on_surface(const EllipsoidGauge& gauge, const Vec3& c,
                            const Mat3& t, int n_grid = 256) {
  const double golden = 2.399963229728653;
  Vec3 best_nu{0, 0, 1};
  double best = gauge(c + t * best_nu);
  for (int i = 0; i < n_grid; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n_grid;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double th = golden * i;
    const Vec3 nu{rho * std::cos(th), rho * std::sin(th), z};
    const double v = gauge(c + t * nu);
    if (v > best) {
      best = v;
      best_nu = nu;
    }
  }
  Vec3 nu = best_nu;
  double step = 0.25;
  for (int it = 0; it < 60 && step > 1e-14; ++it) {
    const Vec3 grad = t.transposed() * gauge.gradient(c + t * nu);
    const Vec3 tangent = grad - nu * grad.dot(nu);
    if (tangent.norm() < 1e-15) break;
    bool improved = false;
    while (step > 1e-14) {
      const Vec3 cand = (nu + tangent * step).normalized();
      const double v = gauge(c + t * cand);
      if (v > best) {
        best = v;
        nu = cand;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return best;
}

}  // namespace

ConjectureReport conjecture_explore(const EllipsoidRep& e_star, uint64_t seed,
                                    int n_witnesses, int n_states,
                                    const Tolerances& tol) {
  const ClassLabel star_class = classify_by_ellipsoid(e_star, tol);
  if (star_class.value != OperatorClass::C &&
      star_class.value != OperatorClass::D)
    throw NotAWitnessEllipsoidError(
        "reference ellipsoid must classify as C or D, got " +
        to_string(star_class.value));

  ConjectureReport report;
  report.seed = seed;
  report.n_witnesses = n_witnesses;
  report.n_states = n_states;
  report.estar_c = e_star.c;
  const auto star_axes = semiaxes(e_star);
  for (int k = 0; k < 3; ++k) report.estar_semiaxes[k] = star_axes[k].length;
  report.estar_chi = e_star.chi;
  report.estar_class = to_string(star_class.value);

  const EllipsoidGauge gauge(e_star);
  const Mat3 flip_col = Mat3::diag(1, 1, -1);

  // The witnesses represented by E* itself: T~* and its mirrored form
  // where that differs (nondegenerate case); keep the ones that really
  // are witnesses.
  struct Star {
    TwoQubitOperator op;
    int chi;
  };
  std::vector<Star> stars;
  {
    std::vector<Mat3> star_ts = {e_star.T_tilde};
    if (!e_star.degenerate) star_ts.push_back(e_star.T_tilde * flip_col);
    for (const Mat3& st : star_ts) {
      const TwoQubitOperator cand = reconstruct({e_star.c, Vec3{}, st});
      const WitnessProperties props = analyze_witness(cand, tol);
      if (props.is_witness) {
        const double d = st.det();
        stars.push_back({cand, std::abs(d) <= tol.chi ? 0 : (d > 0 ? 1 : -1)});
      }
    }
  }
  if (stars.empty())
    throw NotAWitnessEllipsoidError(
        "no chirality of the reference ellipsoid yields a witness");

  Rng rng(seed);

  // Support projector for degenerate E*: member surfaces must stay in the
  // support plane, otherwise the fitting scale collapses to zero.
  Mat3 support = Mat3::identity();
  if (e_star.degenerate) {
    const SymEig3 qe = eig_sym3(e_star.Q);
    support = Mat3::zero();
    for (int k = 0; k < 3; ++k) {
      if (qe.values[k] > 1e-10 * std::max(1.0, qe.values[2])) {
        const Vec3 v{qe.vectors(0, k), qe.vectors(1, k), qe.vectors(2, k)};
        support = support + Mat3::outer(v, v);
      }
    }
  }

  // States detected by each star, shared across member checks. Seeded
  // with the star's most negative eigenstate so the set is never empty.
  std::vector<std::vector<TwoQubitOperator>> star_detected(stars.size());
  for (size_t s = 0; s < stars.size(); ++s) {
    const HermEig4 eg = eigensystem4(stars[s].op);
    std::array<cd, 4> ground;
    for (int i = 0; i < 4; ++i) ground[i] = eg.vectors(i, 0);
    star_detected[s].push_back(projector(ground));
    int attempts = 0;
    while (star_detected[s].size() < 64 && attempts < 64 * 200) {
      ++attempts;
      const TwoQubitOperator rho = projector(sample_haar_state(rng));
      if (trace_product(rho, stars[s].op) < -tol.cls)
        star_detected[s].push_back(rho);
    }
  }

  report.stars.resize(stars.size());
  for (size_t s = 0; s < stars.size(); ++s) {
    report.stars[s].chi = stars[s].chi;
    report.stars[s].members = {{1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}};
  }

  int kept = 0;
  int attempts = 0;
  const int max_attempts = 200 * std::max(1, n_witnesses);
  while (kept < n_witnesses && attempts < max_attempts) {
    ++attempts;
    // Candidate centre inside E*, correlation direction random; bisect the
    // scale to the largest surface that still fits, then back off by a
    // random margin (members may touch E* but not poke out).
    const Vec3 cm = e_star.c + e_star.T_tilde * sample_in_ball3(rng, 0.9);
    Mat3 g = support * sample_gaussian_mat3(rng);
    double lo = 0.0, hi = 2.0;
    while (max_gauge_on_surface(gauge, cm, g * hi) <= 1.0 + tol.geom &&
           hi < 64.0)
      hi *= 2.0;
    for (int it = 0; it < 40; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (max_gauge_on_surface(gauge, cm, g * mid) <= 1.0 + tol.geom)
        lo = mid;
      else
        hi = mid;
    }
    if (lo <= 1e-6) continue;
    const double margin = rng.uniform(0.55, 1.0);
    const Mat3 t_member = g * (lo * margin);

    std::vector<Mat3> variants = {t_member};
    if (std::abs(t_member.det()) > tol.chi)
      variants.push_back(t_member * flip_col);

    for (const Mat3& tv : variants) {
      if (kept >= n_witnesses) break;
      const TwoQubitOperator member = reconstruct({cm, Vec3{}, tv});
      if (det4(member) >= -tol.cls) continue;  // state, not a witness
      ++kept;
      const double dv = tv.det();
      const int member_chi = std::abs(dv) <= tol.chi ? 0 : (dv > 0 ? 1 : -1);

      // Detected-state samples for this member.
      std::vector<TwoQubitOperator> detected;
      const HermEig4 eg = eig_herm4(member.m);
      std::array<cd, 4> ground;
      for (int i = 0; i < 4; ++i) ground[i] = eg.vectors(i, 0);
      detected.push_back(projector(ground));
      for (int i = 0; i < n_states; ++i) {
        const TwoQubitOperator rho = projector(sample_haar_state(rng));
        if (trace_product(rho, member) < -tol.cls) detected.push_back(rho);
      }

      for (size_t s = 0; s < stars.size(); ++s) {
        ConjectureStarReport& sr = report.stars[s];
        ConjectureMemberStats* bucket = nullptr;
        for (auto& mb : sr.members)
          if (mb.chi == member_chi) bucket = &mb;
        ++bucket->n_members;
        bucket->n_detected_states += static_cast<int>(detected.size());

        bool covered = true;
        for (const TwoQubitOperator& rho : detected) {
          const double ts = trace_product(rho, stars[s].op);
          if (ts >= tol.cls) {
            covered = false;
            ++sr.n_uncovered_states;
            if (!sr.has_example) {
              sr.has_example = true;
              sr.example_member = decompose(member);
              sr.example_state = rho;
              sr.example_tr_member = trace_product(rho, member);
              sr.example_tr_star = ts;
            }
          }
        }
        if (covered) ++bucket->n_covered_by_star;

        bool finer_candidate = true;
        for (const TwoQubitOperator& rho : star_detected[s]) {
          if (trace_product(rho, member) >= -tol.cls) {
            finer_candidate = false;
            break;
          }
        }
        if (finer_candidate) ++sr.n_finer_candidates;
      }
    }
  }
  report.attempts = attempts;
  return report;
}

}  // namespace qsteer
