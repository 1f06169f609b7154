#pragma once

// Built-in demos behind `qcorr demo <name>`: fixed example scenarios with a
// prose walkthrough of the numbers, checked against hard-coded expected
// values. Names: entangled, product, uncorrelated_dependent.

#include <iosfwd>
#include <optional>
#include <string>

namespace qcorr::demo {

// Runs the named demo, printing prose and the JSON report to out.
// Returns the pass flag, or nullopt if the name is unknown.
std::optional<bool> run_demo(const std::string& name, std::ostream& out);

}  // namespace qcorr::demo
