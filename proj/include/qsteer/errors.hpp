#pragma once

#include <stdexcept>
#include <string>

namespace qsteer {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hermiticity residual of an input operator exceeds the tolerance.
struct NotHermitianError : Error {
  using Error::Error;
};

/// Trace of an input operator differs from 1 beyond the tolerance.
struct NotUnitTraceError : Error {
  using Error::Error;
};

/// Bob's marginal is singular; the canonical filtering transformation
/// does not exist and the ellipsoid degenerates to a point.
struct SingularMarginalError : Error {
  using Error::Error;
};

/// Surface parametrization requested for a point ellipsoid.
struct DegenerateFrameError : Error {
  using Error::Error;
};

/// Iterative eigensolver exhausted its sweep budget.
struct NoConvergenceError : Error {
  using Error::Error;
};

/// Input expected to be a density matrix fails the PSD/trace checks.
struct NotAStateError : Error {
  using Error::Error;
};

/// Input pure state is a product state where entanglement is required.
struct NotEntangledError : Error {
  using Error::Error;
};

/// Input state vector has complex amplitudes where real ones are required.
struct NotRealError : Error {
  using Error::Error;
};

/// Conjecture explorer given a reference ellipsoid that does not
/// represent an entanglement witness.
struct NotAWitnessEllipsoidError : Error {
  using Error::Error;
};

/// Malformed operator document (schema violation, bad JSON shape).
struct DocumentError : Error {
  using Error::Error;
};

}  // namespace qsteer
