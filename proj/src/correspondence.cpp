#include "qcorr/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qcorr::correspondence {

using linalg::Projector;
using quantum::Side;

JointTable induce_table(const StateVector& eta, const EventPair& ev) {
  const Projector pc = ev.p.complement();
  const Projector qc = ev.q.complement();
  const auto joint = [&](const Projector& p, const Projector& q) {
    return quantum::joint_probability(eta, EventPair(p, q, ev.space));
  };
  return JointTable(2, 2,
                    {joint(ev.p, ev.q), joint(ev.p, qc),
                     joint(pc, ev.q), joint(pc, qc)});
}

CorrespondenceReport verify_correspondence(const StateVector& eta, const EventPair& ev) {
  const JointTable table = induce_table(eta, ev);

  const Projector first[2] = {ev.p, ev.p.complement()};
  const Projector second[2] = {ev.q, ev.q.complement()};

  std::vector<ConditionalComparison> comparisons;
  std::vector<SkippedCell> skipped;

  // Conditioning on axis means: observe one of that axis's events, then
  // predict both events of the other axis. The quantum route conditions the
  // state; the classical route conditions the induced table. A cell is
  // usable only when both routes see strictly positive probability.
  const auto run_axis = [&](Axis axis) {
    for (std::size_t given = 0; given < 2; ++given) {
      const double state_prob =
          axis == Axis::X
              ? quantum::marginal_probability(eta, first[given], Side::first, ev.space)
              : quantum::marginal_probability(eta, second[given], Side::second, ev.space);
      const double table_prob = classical::marginal(table, axis)[given];
      if (state_prob <= tol::zero_prob || table_prob <= tol::zero_prob) {
        skipped.push_back(SkippedCell{axis, given});
        continue;
      }
      const StateVector conditioned =
          axis == Axis::X
              ? quantum::post_measurement_state(
                    eta, linalg::embed_first(first[given], ev.space))
              : quantum::conditioned_state(eta, second[given], ev.space);
      const classical::ConditionalTable conditional =
          classical::condition(table, axis, given);
      for (std::size_t predicted = 0; predicted < 2; ++predicted) {
        const double from_state =
            axis == Axis::X
                ? quantum::marginal_probability(conditioned, second[predicted],
                                                Side::second, ev.space)
                : quantum::marginal_probability(conditioned, first[predicted],
                                                Side::first, ev.space);
        comparisons.push_back(ConditionalComparison{
            axis, given, predicted, from_state, conditional.probabilities[predicted]});
      }
    }
  };
  run_axis(Axis::Y);
  run_axis(Axis::X);

  double worst = 0.0;
  for (const ConditionalComparison& c : comparisons)
    worst = std::max(worst, std::abs(c.from_state - c.from_table));

  return CorrespondenceReport{
      table,
      std::move(comparisons),
      std::move(skipped),
      worst,
      linalg::schmidt_rank(eta, ev.space) > 1,
      classical::is_independent(table).independent};
}

UncorrelatedDependentDemo uncorrelated_dependent_demo() {
  const std::size_t dim = 4;
  std::vector<StateVector> basis;
  for (std::size_t j = 0; j < dim; ++j) basis.push_back(StateVector::basis(dim, j));
  const quantum::ObservableSpec a({2.0, -2.0, 1.0, -1.0}, basis);
  const std::vector<double> squared = {4.0, 4.0, 1.0, 1.0};
  const StateVector psi = StateVector::normalized(
      std::vector<cplx>(dim, cplx(1.0, 0.0)));

  quantum::SpectralJoint joint = quantum::spectral_joint_distribution(psi, a, squared);
  const double qcov = quantum::quantum_covariance(psi, a, squared);
  const double ccov =
      classical::covariance(joint.table, joint.a_values, joint.f_values);
  const classical::IndependenceCheck check = classical::is_independent(joint.table);
  std::vector<double> value_marginal = classical::marginal(joint.table, Axis::X);
  std::vector<double> f_marginal = classical::marginal(joint.table, Axis::Y);

  return UncorrelatedDependentDemo{std::move(joint), qcov,          ccov,
                                   check,            std::move(value_marginal),
                                   std::move(f_marginal)};
}

}  // namespace qcorr::correspondence
