#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "qsteer/pauli.hpp"

// Deterministic sampling. All distributions are derived from the raw
// mt19937_64 stream by fixed arithmetic (no std::*_distribution), so a
// seed pins the byte-exact output across compilers and standard libraries.

namespace qsteer {

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (one draw per two uniforms).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  uint64_t raw() { return eng_(); }

  /// Independent substream; deterministic function of the parent state.
  Rng spawn() { return Rng(eng_() ^ 0x9e3779b97f4a7c15ull); }

 private:
  std::mt19937_64 eng_;
};

Vec3 sample_unit_vec3(Rng& rng);
Vec3 sample_in_ball3(Rng& rng, double radius = 1.0);
Mat3 sample_gaussian_mat3(Rng& rng);

/// Haar-random pure state of two qubits.
std::array<cd, 4> sample_haar_state(Rng& rng);

/// Random density matrix from the Ginibre ensemble: G G^dagger normalized.
TwoQubitOperator sample_ginibre_state(Rng& rng);

/// Random Hermitian operator with unit trace; entries O(scale).
TwoQubitOperator sample_hermitian_unit_trace(Rng& rng, double scale = 1.0);

/// Random Haar 2x2 unitary.
Mat2c sample_unitary2(Rng& rng);

/// Random invertible 2x2 (Ginibre conditioned away from singularity).
Mat2c sample_invertible2(Rng& rng, double min_singular_value = 0.2);

}  // namespace qsteer
