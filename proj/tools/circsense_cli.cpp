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

// circsense: command-line front end for the experiment driver.
//
//   circsense <lemma-check|rip|tail|recover|sweep> [--n N] [--m LIST] ...
//
// Exit status: 0 success, 1 a checked property failed, 2 bad configuration.

#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "circsense/bench.hpp"

namespace {

using circsense::bench::Command;

struct FlagSpec {
  const char* key;
  const char* help;
};

constexpr FlagSpec kFlags[] = {
    {"n", "signal length"},
    {"m", "number of samples; comma-separated list for grids"},
    {"s", "sparsity; comma-separated list for grids"},
    {"model", "generator: rademacher, gaussian, fourier-bernoulli, deterministic"},
    {"omega-mode", "sample set: uniform, consecutive, equispaced"},
    {"draws", "operator draws per grid point (lemma-check, rip, tail)"},
    {"trials", "recovery trials per grid point (recover, sweep)"},
    {"seed", "master seed"},
    {"out", "CSV output path (default: stdout)"},
    {"c1", "constant of the mean bound"},
    {"c2", "constant of the sample bound"},
    {"c3", "constant of the tail variance"},
    {"algorithm", "comma-separated subset of l1, cosamp, iht, htp (default: all)"},
    {"method", "delta estimator: auto, exact, monte-carlo, or both (rip)"},
    {"mc-trials", "sampled supports per Monte Carlo estimate"},
    {"budget", "largest support enumeration allowed for the exact estimator"},
    {"tau", "noise level for recover and sweep"},
    {"lambda", "comma-separated deviation levels for tail"},
    {"delta-star", "RIP threshold for the sweep sample-bound column"},
    {"workers", "worker threads (0 = all cores); does not change the output"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial random circulant compressed sensing experiments"};
  app.set_version_flag("--version", std::string(circsense::bench::tool_version()));
  app.require_subcommand(1);

  std::string config_file;
  std::map<std::string, std::string> values;
  std::vector<std::pair<Command, CLI::App*>> subcommands;
  for (Command command : circsense::bench::kAllCommands) {
    const std::string name(circsense::bench::to_string(command));
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_file, "key=value file; flags override it");
    for (const FlagSpec& flag : kFlags) {
      sub->add_option(std::string("--") + flag.key, values[flag.key], flag.help);
    }
    // Negative control for lemma-check; not part of the public interface.
    sub->add_option("--tamper", values["tamper"])->group("");
    subcommands.emplace_back(command, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return circsense::bench::kExitConfig;
  }

  Command command = Command::kRip;
  CLI::App* chosen = nullptr;
  for (auto& [c, sub] : subcommands) {
    if (sub->parsed()) {
      command = c;
      chosen = sub;
    }
  }
  circsense::bench::ExperimentConfig config;
  try {
    if (!config_file.empty()) circsense::bench::load_config_file(config, config_file);
    config.command = command;  // the subcommand wins over a file entry
    for (const auto& [key, value] : values) {
      if (chosen->count(std::string("--") + key) > 0) {
        circsense::bench::apply_setting(config, key, value);
      }
    }
  } catch (const circsense::bench::ConfigError& e) {
    std::cerr << "circsense: configuration error: " << e.what() << "\n";
    return circsense::bench::kExitConfig;
  }
  return circsense::bench::execute(config, std::cout, std::cerr);
}
