// Copyright 2026 The circsense Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Experiment driver behind the command-line tool: configuration parsing,
// the five experiment commands, and CSV rendering.

#ifndef CIRCSENSE_BENCH_HPP_
#define CIRCSENSE_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circsense/circulant.hpp"
#include "circsense/recovery.hpp"
#include "circsense/rip.hpp"

namespace circsense::bench {

std::string_view tool_version();

enum class Command { kLemmaCheck, kRip, kTail, kRecover, kSweep };
std::string_view to_string(Command command);
Command parse_command(std::string_view name);
inline constexpr Command kAllCommands[] = {Command::kLemmaCheck, Command::kRip,
                                           Command::kTail, Command::kRecover,
                                           Command::kSweep};

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitConfig = 2;

// Bad flag values, inconsistent dimensions, unwritable output.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deviations above this fail lemma-check.
inline constexpr double kLemmaTolerance = 1e-9;

struct ExperimentConfig {
  Command command = Command::kRip;
  std::size_t n = 64;
  // Unset means the command default: n/2, or a random size per draw for
  // lemma-check. Set but empty is an empty grid.
  std::optional<std::vector<std::size_t>> m;
  std::vector<std::size_t> s{2};
  GeneratorModel model = GeneratorModel::kRademacher;
  OmegaMode omega_mode = OmegaMode::kUniform;
  std::size_t draws = 100;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string out;  // empty or "-" writes to stdout
  BoundParams bounds;
  std::vector<Algorithm> algorithms{std::begin(kAllAlgorithms),
                                    std::end(kAllAlgorithms)};
  std::string method = "auto";  // auto, exact, monte-carlo, or both (rip only)
  std::size_t mc_trials = 200;
  std::uint64_t budget = kDefaultEnumerationBudget;
  double tau = 0.0;
  std::vector<double> lambdas = default_lambda_grid();
  std::optional<double> delta_star;  // sweep bound column; default per algorithm
  std::size_t workers = 0;           // 0 = hardware concurrency
  // Test-only negative control for lemma-check: "circulant" or "diagonal"
  // corrupts every projector before it is checked.
  std::string tamper;
};

// Keys are the long flag names without dashes (n, m, omega-mode, c1, ...).
// Lists are comma separated. Throws ConfigError.
void apply_setting(ExperimentConfig& config, std::string_view key,
                   std::string_view value);

// Plain-text key=value lines; blank lines and lines starting with '#' are
// ignored. Throws ConfigError.
void load_config_file(ExperimentConfig& config, const std::string& path);

// Throws ConfigError describing the first problem found.
void validate(const ExperimentConfig& config);

std::vector<std::size_t> effective_m(const ExperimentConfig& config);

// Every setting that can change the numbers, as key=value pairs. The output
// path and worker count are left out so that they do not change the file.
std::string describe(const ExperimentConfig& config);

struct CommandResult {
  int exit_code = kExitOk;
  std::string csv;     // comment line, header, rows
  std::string report;  // human-readable summary
};

// Validates, then runs the command. Throws ConfigError.
CommandResult run(const ExperimentConfig& config);

// run() plus output: writes the CSV to config.out, or to `out` when that is
// empty, and the report to `err`. Configuration errors print a message and
// return kExitConfig without creating the output file.
int execute(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace circsense::bench

#endif  // CIRCSENSE_BENCH_HPP_
