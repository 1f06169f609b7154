#pragma once

// Randomized verification driver behind `qcorr verify`. Every trial draws
// fresh states, events, and tables from a per-trial seed and runs the whole
// battery of identities; one JSON line per trial goes to the report stream
// and a per-suite breakdown is accumulated for the summary line.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qcorr::verify {

struct VerificationConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::vector<std::pair<std::size_t, std::size_t>> dims = {{2, 2}, {3, 3}, {4, 4}};
  double tolerance = 1e-11;

  void validate() const;  // throws invariant_error on a bad config
};

struct VerificationOutcome {
  std::size_t trials = 0;
  std::size_t failures = 0;
  // Largest observed violation per check family, across all trials.
  std::map<std::string, double> suite_max;

  bool passed() const { return failures == 0; }
};

// Runs the battery, writes one JSON line per trial plus a final summary
// line to json_out, and (if human_out is non-null) a readable summary to
// human_out. Deterministic: identical config => byte-identical json_out.
VerificationOutcome run_verification(const VerificationConfig& config,
                                     std::ostream& json_out, std::ostream* human_out);

}  // namespace qcorr::verify
