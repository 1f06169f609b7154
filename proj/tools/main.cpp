// qcorr: quantum/classical conditional-probability verifier.
//
// Subcommands:
//   verify             seeded randomized identity suites, JSON line stream
//   scenario <path>    build and check one scenario file
//   demo <name>        fixed walkthrough (entangled, product, uncorrelated_dependent)
//
// Exit codes: 0 all checks passed, 1 verification failure, 2 usage/config
// or scenario-parse error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcorr/demo.hpp"
#include "qcorr/scenario.hpp"
#include "qcorr/types.hpp"
#include "qcorr/verify.hpp"

namespace {

std::vector<std::pair<std::size_t, std::size_t>> parse_dims(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto cut = item.find('x');
    if (cut == std::string::npos)
      throw qcorr::invariant_error("dims: expected d1xd2, got \"" + item + "\"");
    try {
      const std::size_t d1 = std::stoul(item.substr(0, cut));
      const std::size_t d2 = std::stoul(item.substr(cut + 1));
      dims.emplace_back(d1, d2);
    } catch (const std::exception&) {
      throw qcorr::invariant_error("dims: expected d1xd2, got \"" + item + "\"");
    }
  }
  if (dims.empty()) throw qcorr::invariant_error("dims: empty list");
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifies that quantum post-measurement prediction and classical "
               "conditional probability are the same arithmetic."};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::string dims_text = "2x2,3x3,4x4";
  double tolerance = 1e-11;
  bool json_only = false;

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the randomized verification suites");
  verify_cmd->add_option("--seed", seed, "Master seed for per-trial derivation");
  verify_cmd->add_option("--trials", trials, "Number of randomized trials");
  verify_cmd->add_option("--dims", dims_text,
                         "Comma-separated factor dimensions, e.g. 2x2,3x3");
  verify_cmd->add_option("--tolerance", tolerance, "Max allowed violation per trial");
  verify_cmd->add_flag("--json-only", json_only, "Suppress the human-readable summary");

  std::string scenario_path;
  CLI::App* scenario_cmd = app.add_subcommand("scenario", "Run one scenario file");
  scenario_cmd->add_option("path", scenario_path, "Scenario JSON file")->required();

  std::string demo_name;
  CLI::App* demo_cmd = app.add_subcommand("demo", "Run a built-in demo");
  demo_cmd->add_option("name", demo_name,
                       "entangled | product | uncorrelated_dependent")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify_cmd->parsed()) {
      qcorr::verify::VerificationConfig config;
      config.seed = seed;
      config.trials = trials;
      config.dims = parse_dims(dims_text);
      config.tolerance = tolerance;
      config.validate();
      const qcorr::verify::VerificationOutcome outcome = qcorr::verify::run_verification(
          config, std::cout, json_only ? nullptr : &std::cerr);
      return outcome.passed() ? 0 : 1;
    }
    if (scenario_cmd->parsed()) {
      const qcorr::scenario::ScenarioResult result =
          qcorr::scenario::run_scenario_file(scenario_path);
      std::cout << result.report << "\n";
      return result.passed ? 0 : 1;
    }
    const std::optional<bool> ok = qcorr::demo::run_demo(demo_name, std::cout);
    if (!ok.has_value()) {
      std::cerr << "unknown demo \"" << demo_name
                << "\"; known: entangled, product, uncorrelated_dependent\n";
      return 2;
    }
    if (!*ok) std::cerr << "demo \"" << demo_name << "\" failed its expected values\n";
    return *ok ? 0 : 1;
  } catch (const qcorr::scenario::scenario_parse_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const qcorr::invariant_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification aborted: " << e.what() << "\n";
    return 1;
  }
}
