#include "qcorr/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcorr/correspondence.hpp"

namespace qcorr::scenario {

namespace {

using classical::Axis;
using linalg::CompositeSpace;
using linalg::Projector;
using linalg::StateVector;
using quantum::EventPair;
using json = nlohmann::ordered_json;

constexpr double default_tolerance = 1e-11;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw scenario_parse_error("scenario field \"" + field + "\": " + why);
}

const json& require(const json& obj, const std::string& field) {
  if (!obj.contains(field)) fail(field, "missing");
  return obj.at(field);
}

std::size_t require_count(const json& obj, const std::string& field) {
  const json& v = require(obj, field);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
    fail(field, "must be a positive integer");
  return v.get<std::size_t>();
}

cplx parse_complex(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    fail(field, "complex numbers are [re, im] pairs");
  return cplx(v[0].get<double>(), v[1].get<double>());
}

std::vector<cplx> parse_amplitudes(const json& v, std::size_t dim,
                                   const std::string& field) {
  if (!v.is_array() || v.size() != dim)
    fail(field, "expected an array of " + std::to_string(dim) + " [re, im] pairs");
  std::vector<cplx> out;
  out.reserve(dim);
  for (const json& entry : v) out.push_back(parse_complex(entry, field));
  return out;
}

// A state is either a basis index or a full amplitude array.
StateVector parse_state(const json& v, std::size_t dim, const std::string& field) {
  try {
    if (v.is_number_unsigned()) return StateVector::basis(dim, v.get<std::size_t>());
    return StateVector(parse_amplitudes(v, dim, field));
  } catch (const dimension_error& e) {
    fail(field, e.what());
  } catch (const invariant_error& e) {
    fail(field, e.what());
  }
}

Projector parse_projector(const json& v, std::size_t dim, const std::string& field) {
  if (!v.is_array() || v.empty()) fail(field, "expected a nonempty array of vectors");
  std::vector<std::vector<cplx>> span;
  for (const json& vec : v) span.push_back(parse_amplitudes(vec, dim, field));
  try {
    return Projector::from_span(dim, span);
  } catch (const invariant_error& e) {
    fail(field, e.what());
  }
}

double parse_tolerance(const json& obj) {
  if (!obj.contains("tolerance")) return default_tolerance;
  const json& v = obj.at("tolerance");
  if (!v.is_number() || !(v.get<double>() > 0.0))
    fail("tolerance", "must be a positive number");
  return v.get<double>();
}

json comparisons_to_json(const correspondence::CorrespondenceReport& report) {
  json out = json::array();
  for (const correspondence::ConditionalComparison& c : report.comparisons) {
    json entry;
    entry["given_axis"] = c.given_axis == Axis::X ? "X" : "Y";
    entry["given_index"] = c.given_index;
    entry["predicted_index"] = c.predicted_index;
    entry["from_state"] = c.from_state;
    entry["from_table"] = c.from_table;
    out.push_back(entry);
  }
  return out;
}

json table_to_json(const classical::JointTable& table) {
  json rows = json::array();
  for (std::size_t i = 0; i < table.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < table.cols(); ++j) row.push_back(table.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

ScenarioResult report_event_pair(const StateVector& eta, const EventPair& ev,
                                 double tolerance, bool require_independent) {
  const correspondence::CorrespondenceReport report =
      correspondence::verify_correspondence(eta, ev);
  bool passed = report.max_discrepancy <= tolerance;
  if (require_independent) passed = passed && report.independent;

  json out;
  out["kind"] = "correspondence";
  out["induced_table"] = table_to_json(report.induced_table);
  out["comparisons"] = comparisons_to_json(report);
  json skipped = json::array();
  for (const correspondence::SkippedCell& cell : report.skipped_cells)
    skipped.push_back({cell.axis == Axis::X ? "X" : "Y", cell.index});
  out["skipped_cells"] = skipped;
  out["max_discrepancy"] = report.max_discrepancy;
  out["entangled"] = report.entangled;
  out["independent"] = report.independent;
  out["tolerance"] = tolerance;
  out["pass"] = passed;
  return ScenarioResult{passed, out.dump(2)};
}

ScenarioResult run_entangled_pair(const json& obj) {
  const std::size_t dim = require_count(obj, "dim");
  const cplx a = parse_complex(require(obj, "a"), "a");
  const cplx b = parse_complex(require(obj, "b"), "b");
  StateVector psi = parse_state(require(obj, "psi"), dim, "psi");
  StateVector phi = parse_state(require(obj, "phi"), dim, "phi");
  const CompositeSpace space(dim, dim);
  StateVector eta = [&] {
    try {
      return quantum::build_entangled_state(
          quantum::EntangledPairSpec(a, b, std::move(psi), std::move(phi)), space);
    } catch (const invariant_error& e) {
      fail("a/b/psi/phi", e.what());
    }
  }();
  const EventPair ev(parse_projector(require(obj, "p_span"), dim, "p_span"),
                     parse_projector(require(obj, "q_span"), dim, "q_span"), space);
  return report_event_pair(eta, ev, parse_tolerance(obj), false);
}

ScenarioResult run_product(const json& obj) {
  const std::size_t d1 = require_count(obj, "d1");
  const std::size_t d2 = require_count(obj, "d2");
  const CompositeSpace space(d1, d2);
  const StateVector u = parse_state(require(obj, "u"), d1, "u");
  const StateVector v = parse_state(require(obj, "v"), d2, "v");
  const EventPair ev(parse_projector(require(obj, "p_span"), d1, "p_span"),
                     parse_projector(require(obj, "q_span"), d2, "q_span"), space);
  return report_event_pair(linalg::tensor_state(u, v, space), ev,
                           parse_tolerance(obj), true);
}

ScenarioResult run_raw_state(const json& obj) {
  const std::size_t d1 = require_count(obj, "d1");
  const std::size_t d2 = require_count(obj, "d2");
  const CompositeSpace space(d1, d2);
  const StateVector eta = parse_state(require(obj, "state"), space.dim(), "state");
  const EventPair ev(parse_projector(require(obj, "p_span"), d1, "p_span"),
                     parse_projector(require(obj, "q_span"), d2, "q_span"), space);
  return report_event_pair(eta, ev, parse_tolerance(obj), false);
}

ScenarioResult run_classical_table(const json& obj) {
  const std::size_t rows = require_count(obj, "rows");
  const std::size_t cols = require_count(obj, "cols");
  const json& mass_json = require(obj, "mass");
  if (!mass_json.is_array() || mass_json.size() != rows * cols)
    fail("mass", "expected a row-major array of " + std::to_string(rows * cols) +
                     " numbers");
  std::vector<double> mass;
  for (const json& m : mass_json) {
    if (!m.is_number()) fail("mass", "entries must be numbers");
    mass.push_back(m.get<double>());
  }
  const classical::JointTable table = [&] {
    try {
      return classical::JointTable(rows, cols, std::move(mass));
    } catch (const invariant_error& e) {
      fail("mass", e.what());
    }
  }();
  const double tolerance = parse_tolerance(obj);

  json out;
  out["kind"] = "classical_table";
  out["table"] = table_to_json(table);
  out["x_marginal"] = classical::marginal(table, Axis::X);
  out["y_marginal"] = classical::marginal(table, Axis::Y);
  const classical::IndependenceCheck check = classical::is_independent(table);
  out["independent"] = check.independent;
  out["max_deviation"] = check.max_deviation;

  // Conditionals for every non-null event on either axis, and the chain
  // rule as the internal consistency check.
  double worst = 0.0;
  json conditionals = json::array();
  const std::vector<double> my = classical::marginal(table, Axis::Y);
  const std::vector<double> mx = classical::marginal(table, Axis::X);
  for (Axis axis : {Axis::Y, Axis::X}) {
    const std::vector<double>& given = axis == Axis::Y ? my : mx;
    for (std::size_t k = 0; k < given.size(); ++k) {
      if (given[k] <= tol::zero_prob) continue;
      const classical::ConditionalTable cond = classical::condition(table, axis, k);
      json entry;
      entry["given_axis"] = axis == Axis::X ? "X" : "Y";
      entry["given_index"] = k;
      entry["probabilities"] = cond.probabilities;
      conditionals.push_back(entry);
      for (std::size_t i = 0; i < cond.probabilities.size(); ++i) {
        const double joint = axis == Axis::Y ? table.at(i, k) : table.at(k, i);
        worst = std::max(worst, std::abs(cond.probabilities[i] * given[k] - joint));
      }
    }
  }
  out["conditionals"] = conditionals;

  if (obj.contains("xvals") || obj.contains("yvals")) {
    const json& xv = require(obj, "xvals");
    const json& yv = require(obj, "yvals");
    if (!xv.is_array() || xv.size() != rows) fail("xvals", "length must equal rows");
    if (!yv.is_array() || yv.size() != cols) fail("yvals", "length must equal cols");
    out["covariance"] = classical::covariance(table, xv.get<std::vector<double>>(),
                                              yv.get<std::vector<double>>());
  }

  out["max_discrepancy"] = worst;
  out["tolerance"] = tolerance;
  const bool passed = worst <= tolerance;
  out["pass"] = passed;
  return ScenarioResult{passed, out.dump(2)};
}

ScenarioResult run_observable_demo(const json& obj) {
  const json& ev_json = require(obj, "eigenvalues");
  if (!ev_json.is_array() || ev_json.empty())
    fail("eigenvalues", "expected a nonempty number array");
  const std::vector<double> eigenvalues = ev_json.get<std::vector<double>>();
  const std::size_t dim = eigenvalues.size();
  const json& fv_json = require(obj, "fvals");
  if (!fv_json.is_array() || fv_json.size() != dim)
    fail("fvals", "length must match eigenvalues");
  const std::vector<double> fvals = fv_json.get<std::vector<double>>();
  const StateVector psi = parse_state(require(obj, "state"), dim, "state");

  std::vector<StateVector> basis;
  for (std::size_t j = 0; j < dim; ++j) basis.push_back(StateVector::basis(dim, j));
  const quantum::ObservableSpec a(eigenvalues, basis);

  const double qcov = quantum::quantum_covariance(psi, a, fvals);
  const quantum::SpectralJoint joint = quantum::spectral_joint_distribution(psi, a, fvals);
  const double ccov = classical::covariance(joint.table, joint.a_values, joint.f_values);
  const classical::IndependenceCheck check = classical::is_independent(joint.table);
  const double tolerance = parse_tolerance(obj);

  // The operator covariance and the covariance of the induced value table
  // are the same number computed two ways.
  const double worst = std::abs(qcov - ccov);

  json out;
  out["kind"] = "observable_demo";
  out["eigenvalues"] = eigenvalues;
  out["fvals"] = fvals;
  out["value_labels"] = joint.a_values;
  out["f_labels"] = joint.f_values;
  out["joint_table"] = table_to_json(joint.table);
  out["quantum_covariance"] = qcov;
  out["classical_covariance"] = ccov;
  out["independent"] = check.independent;
  out["max_deviation"] = check.max_deviation;
  out["max_discrepancy"] = worst;
  out["tolerance"] = tolerance;
  const bool passed = worst <= tolerance;
  out["pass"] = passed;
  return ScenarioResult{passed, out.dump(2)};
}

}  // namespace

ScenarioResult run_scenario_text(const std::string& text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw scenario_parse_error(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw scenario_parse_error("scenario must be a JSON object");
  const json& kind = require(obj, "kind");
  if (!kind.is_string()) fail("kind", "must be a string");
  const std::string name = kind.get<std::string>();
  try {
    if (name == "entangled_pair") return run_entangled_pair(obj);
    if (name == "product") return run_product(obj);
    if (name == "raw_state") return run_raw_state(obj);
    if (name == "classical_table") return run_classical_table(obj);
    if (name == "observable_demo") return run_observable_demo(obj);
  } catch (const json::exception& e) {
    throw scenario_parse_error(std::string("scenario field has wrong type: ") + e.what());
  } catch (const dimension_error& e) {
    throw scenario_parse_error(std::string("scenario dimensions inconsistent: ") + e.what());
  }
  fail("kind", "unknown scenario kind \"" + name + "\"");
}

ScenarioResult run_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw scenario_parse_error("cannot read scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return run_scenario_text(buffer.str());
}

}  // namespace qcorr::scenario
