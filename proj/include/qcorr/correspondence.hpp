#pragma once

// The bridge between the two formalisms: induce a classical joint table
// from a quantum state and a pair of one-sided events, then check that
// predicting through the post-measurement state agrees with conditioning
// the induced table, cell by cell.

#include <cstddef>
#include <vector>

#include "qcorr/classical.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/quantum.hpp"
#include "qcorr/types.hpp"

namespace qcorr::correspondence {

using classical::Axis;
using classical::JointTable;
using linalg::StateVector;
using quantum::EventPair;

// One conditioning cell that could not be used because its probability is
// numerically zero (e.g. the complement of the identity event).
struct SkippedCell {
  Axis axis;
  std::size_t index;
};

// One predicted probability computed both ways: through the conditioned
// quantum state and through classical conditioning of the induced table.
struct ConditionalComparison {
  Axis given_axis;          // axis of the conditioning event
  std::size_t given_index;  // 0 = the event, 1 = its complement
  std::size_t predicted_index;
  double from_state;  // event probability in the post-measurement state
  double from_table;  // classical conditional from the induced table
};

struct CorrespondenceReport {
  JointTable induced_table;
  std::vector<ConditionalComparison> comparisons;
  std::vector<SkippedCell> skipped_cells;
  double max_discrepancy;  // max |from_state - from_table| over comparisons
  bool entangled;          // schmidt rank of the state > 1
  bool independent;        // induced table passes the independence check
};

// 2x2 table of the four joint probabilities; row 0 is the first-factor
// event, row 1 its complement; columns likewise for the second factor.
JointTable induce_table(const StateVector& eta, const EventPair& ev);

// Conditions on each of the four one-sided events in turn (both factors,
// event and complement) and compares the two prediction routes. Null
// conditioning events are recorded in skipped_cells, never raised.
CorrespondenceReport verify_correspondence(const StateVector& eta, const EventPair& ev);

// The observable pair that is uncorrelated yet dependent: eigenvalues
// (2, -2, 1, -1), the squaring map on them, and the uniform state.
struct UncorrelatedDependentDemo {
  quantum::SpectralJoint joint;        // distribution over (value, squared value)
  double quantum_cov;                  // operator covariance; zero here
  double classical_cov;                // table covariance of the value pair; zero too
  classical::IndependenceCheck check;  // fails, with deviation 0.125
  std::vector<double> value_marginal;  // over (2, -2, 1, -1)
  std::vector<double> f_marginal;      // over (4, 1)
};

UncorrelatedDependentDemo uncorrelated_dependent_demo();

}  // namespace qcorr::correspondence
