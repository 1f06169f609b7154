#pragma once

// Discrete joint probability tables over a finite two-axis sample space,
// with marginals, conditioning by sample-space reduction, an independence
// check, and covariance of coordinate random variables.

#include <cstddef>
#include <utility>
#include <vector>

#include "qcorr/types.hpp"

namespace qcorr::classical {

enum class Axis { X, Y };

// A joint distribution P(X = i, Y = j) stored row-major.  Entries must be
// non-negative and the total mass must equal 1; a total within 1e-6 of 1 is
// renormalized, anything farther off is rejected.
class JointTable {
 public:
  JointTable(std::size_t rows, std::size_t cols, std::vector<double> mass);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t i, std::size_t j) const { return mass_[i * cols_ + j]; }
  const std::vector<double>& mass() const { return mass_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> mass_;
};

// An event: a set of cells of the sample space, kept sorted and deduplicated.
class EventSet {
 public:
  explicit EventSet(std::vector<std::pair<std::size_t, std::size_t>> cells);
  static EventSet full(std::size_t rows, std::size_t cols);

  const std::vector<std::pair<std::size_t, std::size_t>>& cells() const { return cells_; }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
};

// The distribution of the remaining axis after conditioning on one cell of
// the given axis.
struct ConditionalTable {
  Axis given_axis;
  std::size_t given_index;
  std::vector<double> probabilities;
};

struct IndependenceCheck {
  bool independent;
  double max_deviation;  // max_ij |P(i,j) - P_X(i) P_Y(j)|
};

double event_probability(const JointTable& table, const EventSet& event);
std::vector<double> marginal(const JointTable& table, Axis axis);
ConditionalTable condition(const JointTable& table, Axis axis, std::size_t value);
IndependenceCheck is_independent(const JointTable& table);

// Covariance of f(X) and g(Y) where xvals[i] = f(i), yvals[j] = g(j).
double covariance(const JointTable& table, const std::vector<double>& xvals,
                  const std::vector<double>& yvals);

}  // namespace qcorr::classical
