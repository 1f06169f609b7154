#pragma once

// Quantum events and measurement: event probabilities, post-measurement
// state update, joint/marginal/conditional probabilities for a pair of
// one-sided events on a composite system, sequential-measurement symmetry,
// and the uncorrelated-but-dependent observable construction.

#include <cstddef>
#include <vector>

#include "qcorr/classical.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/types.hpp"

namespace qcorr::quantum {

using linalg::CompositeSpace;
using linalg::Operator;
using linalg::Projector;
using linalg::StateVector;

// Parameters of the two-component superposition a psi (x) phi + b phi (x) psi
// with psi orthogonal to phi and both weights strictly between 0 and 1.
struct EntangledPairSpec {
  cplx a;
  cplx b;
  StateVector psi;
  StateVector phi;

  EntangledPairSpec(cplx a_in, cplx b_in, StateVector psi_in, StateVector phi_in);
};

// A pair of one-sided events: p acts on the first factor, q on the second.
struct EventPair {
  Projector p;
  Projector q;
  CompositeSpace space;

  EventPair(Projector p_in, Projector q_in, CompositeSpace space_in);
};

// An observable given by its spectral data: eigenvalues a_j with an
// orthonormal eigenbasis |a_j>.  The basis must be complete.
class ObservableSpec {
 public:
  ObservableSpec(std::vector<double> eigenvalues, std::vector<StateVector> eigenvectors);

  std::size_t dim() const { return vectors_.size(); }
  const std::vector<double>& eigenvalues() const { return values_; }
  const std::vector<StateVector>& eigenvectors() const { return vectors_; }
  Operator matrix() const;                                   // sum_j a_j |a_j><a_j|
  Operator apply_function(const std::vector<double>& fvals) const;  // sum_j f_j |a_j><a_j|

 private:
  std::vector<double> values_;
  std::vector<StateVector> vectors_;
};

enum class Side { first, second };

// Both evaluation routes for the two sequential-measurement orders:
// lhs = <eta, QPQ eta>/P(Q) measured after Q, rhs = <eta, PQP eta>/P(P)
// measured after P.  Residuals are the gaps between the quotient form and
// the conditioned-state form of the same quantity.
struct SequentialComparison {
  double lhs;
  double rhs;
  double lhs_residual;
  double rhs_residual;
};

// Joint outcome table of (A value, f(A) value) together with the distinct
// value labels for each axis, in first-appearance order.
struct SpectralJoint {
  classical::JointTable table;
  std::vector<double> a_values;
  std::vector<double> f_values;
};

// Probability of the event p in state psi: Re<psi, p psi>.  The Operator
// overload checks Hermiticity of the quadratic form (imaginary residual)
// and the [0,1] range, so malformed inputs are rejected; the Projector
// overload is the validated fast path.
double event_probability(const StateVector& psi, const Operator& p);
double event_probability(const StateVector& psi, const Projector& p);

// State after observing p: p psi renormalized.  Null events are rejected.
StateVector post_measurement_state(const StateVector& psi, const Projector& p);

StateVector build_entangled_state(const EntangledPairSpec& spec,
                                  const CompositeSpace& space);

// <eta, (P (x) Q) eta>.
double joint_probability(const StateVector& eta, const EventPair& ev);

// Probability of a one-sided event, the other side unobserved.
double marginal_probability(const StateVector& eta, const Projector& p, Side side,
                            const CompositeSpace& space);

// P(P|Q) = joint / marginal of Q.
double conditional_probability(const StateVector& eta, const EventPair& ev);

// State after observing q on the second factor only.
StateVector conditioned_state(const StateVector& eta, const Projector& q,
                              const CompositeSpace& space);

SequentialComparison sequential_symmetry(const StateVector& eta, const Projector& p,
                                         const Projector& q);

// <psi, (f(A) - <f(A)>)(A - <A>) psi> with f given as a value table aligned
// with the observable's eigenvalues.
double quantum_covariance(const StateVector& psi, const ObservableSpec& a,
                          const std::vector<double>& fvals);

// Joint distribution of the observable's value and the f-value under the
// spectral measure of psi, aggregated over equal value labels.
SpectralJoint spectral_joint_distribution(const StateVector& psi, const ObservableSpec& a,
                                          const std::vector<double>& fvals);

}  // namespace qcorr::quantum
