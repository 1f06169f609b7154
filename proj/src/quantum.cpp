#include "qcorr/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace qcorr::quantum {

EntangledPairSpec::EntangledPairSpec(cplx a_in, cplx b_in, StateVector psi_in,
                                     StateVector phi_in)
    : a(a_in), b(b_in), psi(std::move(psi_in)), phi(std::move(phi_in)) {
  const double wa = std::norm(a);
  const double wb = std::norm(b);
  if (std::abs(wa + wb - 1.0) > tol::norm)
    throw invariant_error("EntangledPairSpec: |a|^2 + |b|^2 must equal 1");
  if (wa <= 0.0 || wa >= 1.0 || wb <= 0.0 || wb >= 1.0)
    throw invariant_error("EntangledPairSpec: weights must lie strictly between 0 and 1");
  if (psi.dim() != phi.dim())
    throw dimension_error("EntangledPairSpec: psi and phi must share a space");
  if (std::abs(linalg::inner_product(psi, phi)) > tol::structure)
    throw invariant_error("EntangledPairSpec: psi and phi must be orthogonal");
}

EventPair::EventPair(Projector p_in, Projector q_in, CompositeSpace space_in)
    : p(std::move(p_in)), q(std::move(q_in)), space(space_in) {
  if (p.dim() != space.d1 || q.dim() != space.d2)
    throw dimension_error("EventPair: projector dimensions do not match the space");
}

ObservableSpec::ObservableSpec(std::vector<double> eigenvalues,
                               std::vector<StateVector> eigenvectors)
    : values_(std::move(eigenvalues)), vectors_(std::move(eigenvectors)) {
  if (vectors_.empty()) throw invariant_error("ObservableSpec: empty eigenbasis");
  if (values_.size() != vectors_.size())
    throw dimension_error("ObservableSpec: eigenvalue/eigenvector count mismatch");
  const std::size_t d = vectors_.front().dim();
  if (vectors_.size() != d)
    throw invariant_error("ObservableSpec: eigenbasis must be complete");
  for (double v : values_) {
    if (!std::isfinite(v)) throw invariant_error("ObservableSpec: non-finite eigenvalue");
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (vectors_[j].dim() != d)
      throw dimension_error("ObservableSpec: eigenvector dimension mismatch");
    for (std::size_t k = j + 1; k < d; ++k) {
      if (std::abs(linalg::inner_product(vectors_[j], vectors_[k])) > tol::structure)
        throw invariant_error("ObservableSpec: eigenvectors are not orthonormal");
    }
  }
}

Operator ObservableSpec::matrix() const { return apply_function(values_); }

Operator ObservableSpec::apply_function(const std::vector<double>& fvals) const {
  if (fvals.size() != values_.size())
    throw dimension_error("ObservableSpec: value table length mismatch");
  Operator out(dim());
  for (std::size_t j = 0; j < fvals.size(); ++j)
    out += cplx(fvals[j], 0.0) * linalg::outer(vectors_[j]);
  return out;
}

double event_probability(const StateVector& psi, const Operator& p) {
  if (psi.dim() != p.dim())
    throw dimension_error("event_probability: dimension mismatch");
  const cplx value = linalg::expectation(psi, p);
  if (std::abs(value.imag()) > tol::structure)
    throw non_hermitian_error("event_probability: expectation has imaginary part " +
                              std::to_string(value.imag()));
  const double real = value.real();
  if (real < -tol::norm || real > 1.0 + tol::norm)
    throw invalid_projector_error("event_probability: value " + std::to_string(real) +
                                  " outside [0,1]");
  return std::clamp(real, 0.0, 1.0);
}

double event_probability(const StateVector& psi, const Projector& p) {
  return event_probability(psi, p.matrix());
}

StateVector post_measurement_state(const StateVector& psi, const Projector& p) {
  if (event_probability(psi, p) <= tol::zero_prob)
    throw null_event_error("post_measurement_state: event has zero probability");
  return StateVector::normalized(p.matrix().apply(psi));
}

StateVector build_entangled_state(const EntangledPairSpec& spec,
                                  const CompositeSpace& space) {
  if (spec.psi.dim() != space.d1 || spec.phi.dim() != space.d2 || space.d1 != space.d2)
    throw dimension_error("build_entangled_state: spec does not fit the space");
  const StateVector left = linalg::tensor_state(spec.psi, spec.phi, space);
  const StateVector right = linalg::tensor_state(spec.phi, spec.psi, space);
  std::vector<cplx> amp(space.dim());
  for (std::size_t k = 0; k < amp.size(); ++k)
    amp[k] = spec.a * left[k] + spec.b * right[k];
  return StateVector(std::move(amp));
}

double joint_probability(const StateVector& eta, const EventPair& ev) {
  if (eta.dim() != ev.space.dim())
    throw dimension_error("joint_probability: state does not live on the event space");
  const Operator pq =
      linalg::tensor_operator(ev.p.matrix(), ev.q.matrix(), ev.space);
  return event_probability(eta, pq);
}

double marginal_probability(const StateVector& eta, const Projector& p, Side side,
                            const CompositeSpace& space) {
  if (eta.dim() != space.dim())
    throw dimension_error("marginal_probability: state does not live on the space");
  const Projector embedded =
      side == Side::first ? linalg::embed_first(p, space) : linalg::embed_second(p, space);
  return event_probability(eta, embedded);
}

double conditional_probability(const StateVector& eta, const EventPair& ev) {
  const double given = marginal_probability(eta, ev.q, Side::second, ev.space);
  if (given <= tol::zero_prob)
    throw null_event_error("conditional_probability: conditioning event has zero probability");
  return std::clamp(joint_probability(eta, ev) / given, 0.0, 1.0);
}

StateVector conditioned_state(const StateVector& eta, const Projector& q,
                              const CompositeSpace& space) {
  return post_measurement_state(eta, linalg::embed_second(q, space));
}

SequentialComparison sequential_symmetry(const StateVector& eta, const Projector& p,
                                         const Projector& q) {
  if (p.dim() != eta.dim() || q.dim() != eta.dim())
    throw dimension_error("sequential_symmetry: projectors must act on the full space");
  const double prob_p = event_probability(eta, p);
  const double prob_q = event_probability(eta, q);
  if (prob_p <= tol::zero_prob || prob_q <= tol::zero_prob)
    throw null_event_error("sequential_symmetry: a first event has zero probability");

  const Operator pm = p.matrix();
  const Operator qm = q.matrix();
  const double lhs = event_probability(eta, qm * pm * qm) / prob_q;
  const double rhs = event_probability(eta, pm * qm * pm) / prob_p;

  const StateVector after_q = post_measurement_state(eta, q);
  const StateVector after_p = post_measurement_state(eta, p);
  const double lhs_state = event_probability(after_q, p);
  const double rhs_state = event_probability(after_p, q);

  return SequentialComparison{lhs, rhs, std::abs(lhs - lhs_state),
                              std::abs(rhs - rhs_state)};
}

double quantum_covariance(const StateVector& psi, const ObservableSpec& a,
                          const std::vector<double>& fvals) {
  if (psi.dim() != a.dim())
    throw dimension_error("quantum_covariance: state dimension mismatch");
  const Operator am = a.matrix();
  const Operator fm = a.apply_function(fvals);
  const double mean_a = linalg::expectation(psi, am).real();
  const double mean_f = linalg::expectation(psi, fm).real();

  Operator centered_a = am;
  Operator centered_f = fm;
  centered_a -= cplx(mean_a, 0.0) * Operator::identity(a.dim());
  centered_f -= cplx(mean_f, 0.0) * Operator::identity(a.dim());
  const cplx value = linalg::expectation(psi, centered_f * centered_a);
  if (std::abs(value.imag()) > tol::structure)
    throw invariant_error("quantum_covariance: non-real covariance; spectra do not commute");
  return value.real();
}

SpectralJoint spectral_joint_distribution(const StateVector& psi, const ObservableSpec& a,
                                          const std::vector<double>& fvals) {
  if (psi.dim() != a.dim())
    throw dimension_error("spectral_joint_distribution: state dimension mismatch");
  if (fvals.size() != a.eigenvalues().size())
    throw dimension_error("spectral_joint_distribution: value table length mismatch");

  // Distinct value labels in first-appearance order; aggregation is by exact
  // label equality, so degenerate eigenvalues pool their mass.
  auto index_of = [](std::vector<double>& labels, double v) {
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == v) return k;
    labels.push_back(v);
    return labels.size() - 1;
  };

  std::vector<double> a_values;
  std::vector<double> f_values;
  std::vector<std::pair<std::size_t, std::size_t>> cell_of(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    cell_of[j] = {index_of(a_values, a.eigenvalues()[j]), index_of(f_values, fvals[j])};
  }

  std::vector<double> mass(a_values.size() * f_values.size(), 0.0);
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const double pj = std::norm(linalg::inner_product(a.eigenvectors()[j], psi));
    mass[cell_of[j].first * f_values.size() + cell_of[j].second] += pj;
  }
  return SpectralJoint{
      classical::JointTable(a_values.size(), f_values.size(), std::move(mass)),
      std::move(a_values), std::move(f_values)};
}

}  // namespace qcorr::quantum
