#pragma once

// Experiment runner behind the command-line tool: strict flat-JSON config
// parsing (all validation errors reported at once, unknown keys rejected),
// seeded execution of the named experiment, and report/plot-data emission.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace fujita::cli {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::vector<std::string> errors)
      : std::runtime_error(what), errors_(std::move(errors)) {}
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

struct ExperimentConfig {
  std::string command;
  nlohmann::ordered_json resolved;  // full key set after defaulting
  std::uint64_t seed = 0;
  std::string output_dir = "out";
};

// Parses and validates a config document. Physics parameters (d, alpha, and
// beta where a reaction term is involved) have no defaults; numerical
// parameters default per command. Unknown keys are rejected by name.
ExperimentConfig parse_config(const std::string& text);

// Runs the experiment, writes report.json and the plot CSVs into
// config.output_dir, and returns 0 iff every built-in assertion passed.
int execute(const ExperimentConfig& config);

}  // namespace fujita::cli
