#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsteer/classify.hpp"
#include "qsteer/ellipsoid.hpp"
#include "qsteer/pauli.hpp"
#include "qsteer/tolerances.hpp"

// Witness-specific analysis: detection, optimality (whole Bloch sphere,
// right-handed), weak optimality (ellipsoid touches the sphere), the EW4
// symmetry class W = W^T = W^TB, a sampling-based finer-than check, and
// the named operator families used across the test suites.

namespace qsteer {

struct WitnessProperties {
  bool is_witness = false;
  bool optimal = false;
  bool weakly_optimal = false;
  bool in_ew4 = false;
  double negative_eigenvalue = 0.0;  // smallest eigenvalue
  ClassLabel class_label;
};

WitnessProperties analyze_witness(const TwoQubitOperator& b,
                                  const Tolerances& tol = {});

/// tr(rho W) < 0. Throws NotAStateError when rho is not a density matrix.
bool detects(const TwoQubitOperator& w, const TwoQubitOperator& rho,
             const Tolerances& tol = {});

enum class FinerOutcome {
  Finer,               // certified: W2 - W1 is PSD
  CounterexampleState, // found rho detected by W2 but not by W1
  Inconclusive         // search budget exhausted without a counterexample
};

struct FinerResult {
  FinerOutcome outcome = FinerOutcome::Inconclusive;
  std::optional<TwoQubitOperator> state;  // the counterexample, when found
  double tr_w1 = 0.0;
  double tr_w2 = 0.0;
};

/// Is W1 finer than W2 (does W1 detect everything W2 detects)?
/// Randomized search for a state with tr(rho W2) < 0 <= tr(rho W1):
/// Haar pure states, Ginibre mixed states and a subgradient ascent
/// refinement near the detection boundary. Deterministic given the seed.
FinerResult is_finer(const TwoQubitOperator& w1, const TwoQubitOperator& w2,
                     uint64_t seed = 1, int n_samples = 100000,
                     const Tolerances& tol = {});

// Named operator families.

/// Flip operator normalized to unit trace (a = b = 0, T = diag(1,1,1)).
TwoQubitOperator flip_witness();

/// One-parameter family with T = diag(1, 1, 2p-1); block positive iff
/// 0 <= p <= 1, a witness iff 0 < p <= 1, optimal at p = 1.
TwoQubitOperator wp_witness(double p);

/// |phi+><phi+|.
TwoQubitOperator bell_phi_plus();

/// (|psi><psi|)^TB for an entangled pure state psi.
TwoQubitOperator pure_state_witness(const std::array<cd, 4>& psi,
                                    const Tolerances& tol = {});

/// (rho + rho^TB)/2 with rho = |psi><psi| and psi a real entangled state;
/// optimal within the EW4 class, ellipsoid is the xz unit disc.
TwoQubitOperator ew4_optimal(const std::array<cd, 4>& psi,
                             const Tolerances& tol = {});

/// w |phi+><phi+| + (1-w) 1/4 for 0 <= w <= 1.
TwoQubitOperator werner(double w);

// Conjecture explorer: sample witnesses whose ellipsoids fit inside a
// reference ellipsoid E*, take the witness represented by E* itself, and
// test the finer-than relation in both directions on sampled states.
// Output is numerical evidence, not proof.

struct ConjectureMemberStats {
  int chi = 0;               // member chirality bucket
  int n_members = 0;         // witnesses kept in this bucket
  int n_covered_by_star = 0; // members all of whose detected samples are
                             // also detected by the E* witness
  int n_detected_states = 0; // member-detected samples tested in total
};

struct ConjectureStarReport {
  int chi = 0;
  // States detected by a member but missed by this star (breaks the
  // star-is-finer direction for that member).
  int n_uncovered_states = 0;
  // Members that detect every sampled state the star detects: candidate
  // finer witnesses, i.e. counterexamples to the star's optimality.
  int n_finer_candidates = 0;
  std::vector<ConjectureMemberStats> members;
  bool has_example = false;  // first uncovered state, for inspection
  PauliForm example_member;
  TwoQubitOperator example_state;
  double example_tr_member = 0.0;
  double example_tr_star = 0.0;
};

struct ConjectureReport {
  uint64_t seed = 0;
  int n_witnesses = 0;
  int n_states = 0;
  Vec3 estar_c;
  std::array<double, 3> estar_semiaxes{};
  int estar_chi = 0;
  std::string estar_class;
  int attempts = 0;  // sampling attempts consumed
  std::vector<ConjectureStarReport> stars;
};

/// Throws NotAWitnessEllipsoidError unless e_star classifies as C or D.
ConjectureReport conjecture_explore(const EllipsoidRep& e_star, uint64_t seed,
                                    int n_witnesses, int n_states,
                                    const Tolerances& tol = {});

}  // namespace qsteer
