#pragma once

// Scenario files: small JSON descriptions of a state + event pair (or a
// classical table, or an observable) that the CLI builds, verifies, and
// reports on. Complex numbers are [re, im] pairs; projectors are given by
// spanning vectors and orthonormalized on load.

#include <stdexcept>
#include <string>

namespace qcorr::scenario {

struct ScenarioResult {
  bool passed = false;
  std::string report;  // JSON text, ready to print
};

// Throws scenario_parse_error (below) on malformed input; the message names
// the offending field. Throws nothing else on a well-formed scenario.
ScenarioResult run_scenario_text(const std::string& text);

// File wrapper: reads the file and delegates. Missing/unreadable files are
// parse errors.
ScenarioResult run_scenario_file(const std::string& path);

class scenario_parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcorr::scenario
