#include "qcorr/classical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcorr::classical {

namespace {

// Construction tolerates file round-off in the total mass but rejects
// genuinely unnormalized input.
constexpr double renormalize_band = 1e-6;

}  // namespace

JointTable::JointTable(std::size_t rows, std::size_t cols, std::vector<double> mass)
    : rows_(rows), cols_(cols), mass_(std::move(mass)) {
  if (rows_ == 0 || cols_ == 0)
    throw invariant_error("JointTable: dimensions must be positive");
  if (mass_.size() != rows_ * cols_)
    throw dimension_error("JointTable: mass size != rows*cols");
  double total = 0.0;
  for (double m : mass_) {
    if (!std::isfinite(m)) throw invariant_error("JointTable: non-finite mass");
    if (m < 0.0) throw invariant_error("JointTable: negative mass " + std::to_string(m));
    total += m;
  }
  if (std::abs(total - 1.0) > renormalize_band)
    throw invariant_error("JointTable: total mass " + std::to_string(total) +
                          " too far from 1 to renormalize");
  for (double& m : mass_) m /= total;
}

EventSet::EventSet(std::vector<std::pair<std::size_t, std::size_t>> cells)
    : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

EventSet EventSet::full(std::size_t rows, std::size_t cols) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  cells.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) cells.emplace_back(i, j);
  return EventSet(std::move(cells));
}

double event_probability(const JointTable& table, const EventSet& event) {
  double total = 0.0;
  for (const auto& [i, j] : event.cells()) {
    if (i >= table.rows() || j >= table.cols())
      throw dimension_error("event_probability: cell outside the sample space");
    total += table.at(i, j);
  }
  return std::min(total, 1.0);
}

std::vector<double> marginal(const JointTable& table, Axis axis) {
  const std::size_t n = axis == Axis::X ? table.rows() : table.cols();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < table.rows(); ++i)
    for (std::size_t j = 0; j < table.cols(); ++j)
      out[axis == Axis::X ? i : j] += table.at(i, j);
  return out;
}

ConditionalTable condition(const JointTable& table, Axis axis, std::size_t value) {
  const std::size_t given_size = axis == Axis::X ? table.rows() : table.cols();
  if (value >= given_size) throw dimension_error("condition: index outside the axis");
  const double given = marginal(table, axis)[value];
  if (given <= tol::zero_prob)
    throw null_event_error("condition: conditioning event has zero probability");
  const std::size_t other = axis == Axis::X ? table.cols() : table.rows();
  ConditionalTable out{axis, value, std::vector<double>(other, 0.0)};
  for (std::size_t k = 0; k < other; ++k) {
    const double joint = axis == Axis::X ? table.at(value, k) : table.at(k, value);
    out.probabilities[k] = joint / given;
  }
  return out;
}

IndependenceCheck is_independent(const JointTable& table) {
  const std::vector<double> px = marginal(table, Axis::X);
  const std::vector<double> py = marginal(table, Axis::Y);
  double worst = 0.0;
  for (std::size_t i = 0; i < table.rows(); ++i)
    for (std::size_t j = 0; j < table.cols(); ++j)
      worst = std::max(worst, std::abs(table.at(i, j) - px[i] * py[j]));
  return IndependenceCheck{worst <= tol::independence, worst};
}

double covariance(const JointTable& table, const std::vector<double>& xvals,
                  const std::vector<double>& yvals) {
  if (xvals.size() != table.rows() || yvals.size() != table.cols())
    throw dimension_error("covariance: value vector length mismatch");
  double exy = 0.0;
  for (std::size_t i = 0; i < table.rows(); ++i)
    for (std::size_t j = 0; j < table.cols(); ++j)
      exy += xvals[i] * yvals[j] * table.at(i, j);
  const std::vector<double> px = marginal(table, Axis::X);
  const std::vector<double> py = marginal(table, Axis::Y);
  double ex = 0.0;
  for (std::size_t i = 0; i < xvals.size(); ++i) ex += xvals[i] * px[i];
  double ey = 0.0;
  for (std::size_t j = 0; j < yvals.size(); ++j) ey += yvals[j] * py[j];
  return exy - ex * ey;
}

}  // namespace qcorr::classical
