#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diffamp/solver.hpp"

namespace diffamp {

inline constexpr const char* kToolName = "diffamp";
inline constexpr const char* kToolVersion = "1.0.0";

// Invariant violations detected while a scenario runs. Distinct from
// invalid inputs: the CLI maps these to exit code 2, bad inputs to 1.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fully declarative run description; a run's resolved config is echoed to
// its output directory, and identical configs produce byte-identical data
// files. Seeds are mandatory, never taken from the clock.
struct ScenarioConfig {
  std::string subcommand;

  int n_max = 1;
  std::vector<std::pair<int, double>> weights{{0, 0.2}, {1, 0.5}, {-1, 0.3}};

  SolverConfig solver;

  std::vector<double> lambdas{0.4};
  long n_samples = 10000;
  std::optional<std::uint64_t> seed;
  std::string out_dir;

  std::vector<double> z_grid;  // decay-fit window; defaulted when empty
  double z_max = 9.0;

  unsigned threads = 0;
};

// Parses and validates a JSON config; error messages name the offending
// field. Fields absent from the JSON keep their defaults.
void apply_config_json(ScenarioConfig& cfg, const std::string& json_text);

std::string config_to_json(const ScenarioConfig& cfg);

SpectralWeights weights_from_config(const ScenarioConfig& cfg);

// "a:b:n" -> n evenly spaced values from a to b inclusive.
std::vector<double> parse_grid_spec(const std::string& spec);

// Executes the configured subcommand, writing CSV data, a JSON summary and
// the config echo into the output directory. Returns 0 on success; throws
// std::invalid_argument for bad inputs and InvariantViolation when a
// runtime invariant fails.
int run_scenario(const ScenarioConfig& cfg);

}  // namespace diffamp
