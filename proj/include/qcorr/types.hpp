#pragma once

#include <complex>
#include <stdexcept>

namespace qcorr {

using cplx = std::complex<double>;

// Shared numeric tolerances. Every space in this project is tiny (composite
// dimension <= 64), so these thresholds sit far above accumulated round-off
// and far below any meaningful signal.
namespace tol {

// |'norm squared' - 1| allowed for a state vector.
inline constexpr double norm = 1e-10;

// Structural residuals: Hermiticity, idempotency, orthonormality.
inline constexpr double structure = 1e-10;

// Singular values at or below this do not count towards the Schmidt rank.
inline constexpr double rank = 1e-8;

// Probabilities at or below this are treated as null events; conditioning
// on them raises null_event_error instead of dividing by round-off noise.
inline constexpr double zero_prob = 1e-12;

// Max |joint - product of marginals| for a table to count as independent.
inline constexpr double independence = 1e-10;

// |<u,v>| >= 1 - phase_equal means u and v are the same state up to a
// global phase.
inline constexpr double phase_equal = 1e-10;

}  // namespace tol

// Operands with incompatible dimensions.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value failed a structural invariant (normalization, Hermiticity,
// idempotency, nonnegativity, ...).
class invariant_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An expectation value came out with a non-negligible imaginary part,
// i.e. the operator fed into a probability was not Hermitian.
class non_hermitian_error : public invariant_error {
 public:
  using invariant_error::invariant_error;
};

// An alleged event probability landed outside [0,1] beyond tolerance,
// i.e. the operator fed in was Hermitian but not a projector.
class invalid_projector_error : public invariant_error {
 public:
  using invariant_error::invariant_error;
};

// Conditioning on an event of numerically zero probability. Thrown by the
// quantum and the classical module alike; the two conditioning paths are
// required to behave identically.
class null_event_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qcorr
