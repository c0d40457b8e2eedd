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

#include "circsense/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <functional>
#include <fstream>
#include <limits>
#include <sstream>

#include "circsense/parallel.hpp"
#include "circsense/rng.hpp"
#include "circsense/spectral.hpp"

#ifndef CIRCSENSE_VERSION
#define CIRCSENSE_VERSION "0.1.0"
#endif

namespace circsense::bench {

std::string_view tool_version() { return CIRCSENSE_VERSION; }

std::string_view to_string(Command command) {
  switch (command) {
    case Command::kLemmaCheck:
      return "lemma-check";
    case Command::kRip:
      return "rip";
    case Command::kTail:
      return "tail";
    case Command::kRecover:
      return "recover";
    case Command::kSweep:
      return "sweep";
  }
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (Command c : kAllCommands) {
    if (to_string(c) == name) return c;
  }
  throw ConfigError("unknown command '" + std::string(name) + "'");
}

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> items;
  const std::string text = trim(value);
  if (text.empty()) return items;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    items.push_back(trim(std::string_view(text).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError("--" + std::string(key) + ": expected a non-negative integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

double parse_real(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double value = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(value)) {
    throw ConfigError("--" + std::string(key) + ": expected a finite number, got '" +
                      std::string(text) + "'");
  }
  return value;
}

std::vector<std::size_t> parse_size_list(std::string_view key, std::string_view text) {
  std::vector<std::size_t> values;
  for (const auto& item : split_list(text)) {
    values.push_back(static_cast<std::size_t>(parse_unsigned(key, item)));
  }
  return values;
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  // Shortest representation that reads back to the same double.
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ec == std::errc() ? end : buffer);
}

template <typename T, typename Format>
std::string join(const std::vector<T>& values, Format format, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += format(values[i]);
  }
  return out;
}

std::string join_sizes(const std::vector<std::size_t>& values, char sep = ',') {
  return join(values, [](std::size_t v) { return std::to_string(v); }, sep);
}

}  // namespace

void apply_setting(ExperimentConfig& config, std::string_view raw_key,
                   std::string_view value) {
  const std::string key = trim(raw_key);
  try {
    if (key == "command") {
      config.command = parse_command(trim(value));
    } else if (key == "n") {
      config.n = parse_unsigned(key, value);
    } else if (key == "m") {
      config.m = parse_size_list(key, value);
    } else if (key == "s") {
      config.s = parse_size_list(key, value);
    } else if (key == "model") {
      config.model = parse_generator_model(trim(value));
    } else if (key == "omega-mode") {
      config.omega_mode = parse_omega_mode(trim(value));
    } else if (key == "draws") {
      config.draws = parse_unsigned(key, value);
    } else if (key == "trials") {
      config.trials = parse_unsigned(key, value);
    } else if (key == "seed") {
      config.seed = parse_unsigned(key, value);
    } else if (key == "out") {
      config.out = trim(value);
    } else if (key == "c1") {
      config.bounds.c1 = parse_real(key, value);
    } else if (key == "c2") {
      config.bounds.c2 = parse_real(key, value);
    } else if (key == "c3") {
      config.bounds.c3 = parse_real(key, value);
    } else if (key == "algorithm") {
      config.algorithms.clear();
      for (const auto& item : split_list(value)) {
        if (item == "all") {
          config.algorithms.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
        } else {
          config.algorithms.push_back(parse_algorithm(item));
        }
      }
    } else if (key == "method") {
      const std::string m = trim(value);
      if (m != "both") parse_rip_method(m);  // validates the name
      config.method = m;
    } else if (key == "mc-trials") {
      config.mc_trials = parse_unsigned(key, value);
    } else if (key == "budget") {
      config.budget = parse_unsigned(key, value);
    } else if (key == "tau") {
      config.tau = parse_real(key, value);
    } else if (key == "lambda") {
      config.lambdas.clear();
      for (const auto& item : split_list(value)) {
        config.lambdas.push_back(parse_real(key, item));
      }
    } else if (key == "delta-star") {
      config.delta_star = parse_real(key, value);
    } else if (key == "workers") {
      config.workers = parse_unsigned(key, value);
    } else if (key == "tamper") {
      config.tamper = trim(value);
    } else {
      throw ConfigError("unknown setting '" + key + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("--" + key + ": " + e.what());
  }
}

void load_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(number) + ": expected key=value");
    }
    apply_setting(config, text.substr(0, eq), text.substr(eq + 1));
  }
}

std::vector<std::size_t> effective_m(const ExperimentConfig& config) {
  if (config.m) return *config.m;
  if (config.command == Command::kLemmaCheck) return {};
  return {std::max<std::size_t>(1, config.n / 2)};
}

void validate(const ExperimentConfig& config) {
  const std::size_t n = config.n;
  if (n == 0) throw ConfigError("--n must be positive");
  const auto ms = effective_m(config);
  if (config.m && ms.empty()) throw ConfigError("--m: empty grid");
  for (std::size_t m : ms) {
    if (m == 0 || m > n) {
      throw ConfigError("--m: every value must satisfy 1 <= m <= n (got " +
                        std::to_string(m) + ")");
    }
  }
  if (config.command != Command::kLemmaCheck) {
    if (config.s.empty()) throw ConfigError("--s: empty grid");
    for (std::size_t s : config.s) {
      if (s == 0 || s > n) {
        throw ConfigError("--s: every value must satisfy 1 <= s <= n (got " +
                          std::to_string(s) + ")");
      }
    }
  }
  if (config.draws == 0) throw ConfigError("--draws must be positive");
  if (config.trials == 0) throw ConfigError("--trials must be positive");
  for (double c : {config.bounds.c1, config.bounds.c2, config.bounds.c3}) {
    if (!(c >= 0.0)) throw ConfigError("--c1/--c2/--c3 must be >= 0");
  }
  if (!(config.tau >= 0.0)) throw ConfigError("--tau must be >= 0");
  if (config.delta_star && !(*config.delta_star > 0.0 && *config.delta_star < 1.0)) {
    throw ConfigError("--delta-star must lie in (0, 1)");
  }
  if (config.algorithms.empty()) throw ConfigError("--algorithm: empty list");
  if (config.method != "both") {
    try {
      parse_rip_method(config.method);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("--method: ") + e.what());
    }
  } else if (config.command != Command::kRip) {
    throw ConfigError("--method both is only available for rip");
  }
  if (config.mc_trials == 0) throw ConfigError("--mc-trials must be positive");
  if (!config.tamper.empty() && config.tamper != "circulant" &&
      config.tamper != "diagonal") {
    throw ConfigError("--tamper must be 'circulant' or 'diagonal'");
  }
  switch (config.command) {
    case Command::kLemmaCheck:
      if (n > kDefaultDenseLimit) {
        throw ConfigError("lemma-check builds dense n x n matrices; n must be <= " +
                          std::to_string(kDefaultDenseLimit));
      }
      break;
    case Command::kTail:
      if (ms.size() != 1 || config.s.size() != 1) {
        throw ConfigError("tail takes exactly one m and one s");
      }
      if (config.draws < 2) throw ConfigError("tail needs --draws >= 2");
      try {
        normalize_lambda_grid(config.lambdas);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("--lambda: ") + e.what());
      }
      break;
    default:
      break;
  }
  if (!config.out.empty() && config.out != "-") {
    const std::filesystem::path path(config.out);
    const auto parent = path.has_parent_path() ? path.parent_path()
                                               : std::filesystem::path(".");
    std::error_code ec;
    if (!std::filesystem::is_directory(parent, ec)) {
      throw ConfigError("--out: directory '" + parent.string() + "' does not exist");
    }
    if (std::filesystem::is_directory(path, ec)) {
      throw ConfigError("--out: '" + config.out + "' is a directory");
    }
  }
}

std::string describe(const ExperimentConfig& config) {
  std::ostringstream os;
  os << "command=" << to_string(config.command) << " n=" << config.n << " m="
     << (config.m ? join_sizes(*config.m) : std::string("default"))
     << " s=" << join_sizes(config.s) << " model=" << to_string(config.model)
     << " omega-mode=" << to_string(config.omega_mode) << " draws=" << config.draws
     << " trials=" << config.trials << " seed=" << config.seed
     << " c1=" << format_real(config.bounds.c1) << " c2=" << format_real(config.bounds.c2)
     << " c3=" << format_real(config.bounds.c3) << " algorithm="
     << join(config.algorithms, [](Algorithm a) { return std::string(to_string(a)); })
     << " method=" << config.method << " mc-trials=" << config.mc_trials
     << " budget=" << config.budget << " tau=" << format_real(config.tau)
     << " lambda=" << join(config.lambdas, format_real) << " delta-star="
     << (config.delta_star ? format_real(*config.delta_star) : std::string("default"));
  if (!config.tamper.empty()) os << " tamper=" << config.tamper;
  return os.str();
}

namespace {

std::string preamble(const ExperimentConfig& config) {
  return "# circsense " + std::string(tool_version()) + " " + describe(config) + "\n";
}

DrawOptions draw_options(const ExperimentConfig& config, RipMethodChoice method) {
  DrawOptions options;
  options.omega_mode = config.omega_mode;
  options.method = method;
  options.mc_trials = config.mc_trials;
  options.budget = config.budget;
  options.workers = config.workers;
  return options;
}

// ---------------------------------------------------------------- lemma-check

constexpr const char* kPropertyNames[] = {
    "circulant and conjugate symmetric",
    "diagonal m/n^2 and off-diagonal moduli <= m/n^2",
    "row energy m/n^3",
    "m eigenvalues 1/n, spectral norm 1/n, squared Frobenius norm m/n^2",
};

CommandResult lemma_check(const ExperimentConfig& config) {
  const std::size_t n = config.n;
  const auto ms = effective_m(config);
  struct DrawResult {
    double property[4] = {0, 0, 0, 0};
    double modulation = 0.0;
  };
  std::vector<DrawResult> results(config.draws);
  parallel_for(config.draws, config.workers, [&](std::size_t d) {
    Rng rng(config.seed, "lemma-check", d);
    const std::size_t m = ms.empty() ? 1 + static_cast<std::size_t>(rng.below(n))
                                     : ms[d % ms.size()];
    const SampleSet samples = make_samples(config.omega_mode, n, m, rng);
    FourierProjector projector = fourier_projector(samples);
    if (config.tamper == "circulant" && n > 1) {
      projector.matrix(0, 1) += std::complex<double>(1e-3, 0.0);
    } else if (config.tamper == "diagonal") {
      projector.matrix.diagonal().array() += 1e-3;
    }
    const ProjectorDeviations dev = projector_deviations(projector.matrix, m);
    for (int p = 0; p < 4; ++p) results[d].property[p] = dev.property(p + 1);
    const auto k = static_cast<std::ptrdiff_t>(rng.below(n));
    results[d].modulation = modulation_identity_deviation(n, k);
  });

  double worst[5] = {0, 0, 0, 0, 0};
  for (const auto& r : results) {
    for (int p = 0; p < 4; ++p) worst[p] = std::max(worst[p], r.property[p]);
    worst[4] = std::max(worst[4], r.modulation);
  }

  CommandResult result;
  result.csv = preamble(config) + "property,description,max_deviation,threshold,pass\n";
  std::ostringstream report;
  int first_failure = -1;
  for (int p = 0; p < 5; ++p) {
    const bool pass = worst[p] <= kLemmaTolerance;
    if (!pass && first_failure < 0) first_failure = p;
    const std::string name = p < 4 ? "property-" + std::to_string(p + 1) : "modulation";
    const std::string description = p < 4 ? kPropertyNames[p] : "F S^k = M^k F";
    result.csv += name + ",\"" + description + "\"," + format_real(worst[p]) + "," +
                  format_real(kLemmaTolerance) + "," + (pass ? "1" : "0") + "\n";
    report << "lemma-check: " << name << " (" << description
           << ") max deviation " << format_real(worst[p]) << "\n";
  }
  if (first_failure >= 0) {
    const std::string name = first_failure < 4
                                 ? "property " + std::to_string(first_failure + 1)
                                 : std::string("modulation identity");
    report << "lemma-check: FAILED: " << name << " violated ("
           << (first_failure < 4 ? kPropertyNames[first_failure] : "F S^k = M^k F")
           << ")\n";
    result.exit_code = kExitAssertion;
  } else {
    report << "lemma-check: all properties within " << format_real(kLemmaTolerance)
           << " over " << config.draws << " draws\n";
  }
  result.report = report.str();
  return result;
}

// ------------------------------------------------------------------------ rip

double mean_of(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double std_error_of(const std::vector<double>& v) {
  if (v.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double mean = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1) /
                   static_cast<double>(v.size()));
}

double bound_or_nan(const std::function<double()>& bound) {
  try {
    return bound();
  } catch (const std::domain_error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

CommandResult rip(const ExperimentConfig& config) {
  const std::size_t n = config.n;
  CommandResult result;
  result.csv = preamble(config) +
               "# bound_c1 is shape-only: the mean bound with universal constant c1\n"
               "n,m,s,model,omega_mode,method,delta,stderr_or_witness,seed,bound_c1\n";
  std::ostringstream report;
  for (std::size_t m : effective_m(config)) {
    for (std::size_t s : config.s) {
      std::vector<RipMethod> methods;
      if (config.method == "both") {
        methods = {RipMethod::kExact, RipMethod::kMonteCarlo};
      } else {
        const RipMethodChoice choice = parse_rip_method(config.method);
        methods = {choice == RipMethodChoice::kMonteCarlo ? RipMethod::kMonteCarlo
                   : choice == RipMethodChoice::kExact
                       ? RipMethod::kExact
                       : resolve_method(choice, n, s, config.budget)};
      }
      const double bound = bound_or_nan(
          [&] { return theoretical_mean_bound(config.bounds, n, m, s); });
      for (RipMethod method : methods) {
        std::string row = std::to_string(n) + "," + std::to_string(m) + "," +
                          std::to_string(s) + "," + std::string(to_string(config.model)) +
                          "," + std::string(to_string(config.omega_mode)) + "," +
                          std::string(to_string(method)) + ",";
        if (method == RipMethod::kExact && binomial(n, s) > config.budget) {
          row += "skipped,skipped";
          report << "rip: m=" << m << " s=" << s << " exact skipped (C(" << n << ","
                 << s << ") exceeds budget " << config.budget << ")\n";
        } else {
          const RipMethodChoice choice = method == RipMethod::kExact
                                             ? RipMethodChoice::kExact
                                             : RipMethodChoice::kMonteCarlo;
          const auto deltas = sample_deltas(config.model, n, m, s, config.draws,
                                            config.seed, "rip",
                                            draw_options(config, choice));
          row += format_real(mean_of(deltas)) + ",";
          if (deltas.size() >= 2) {
            row += format_real(std_error_of(deltas));
          } else {
            // One draw: report the support that attains delta instead.
            const std::string tag = "rip/m=" + std::to_string(m);
            const auto op =
                draw_operator(config.model, n, m, config.omega_mode, config.seed, tag, 0);
            const RipEstimate est =
                method == RipMethod::kExact
                    ? exact_rip(op, s, config.budget)
                    : monte_carlo_rip(op, s, config.mc_trials,
                                      derive_seed(config.seed, tag + "/mc", 0));
            row += join_sizes(est.witness_support, ';');
          }
          report << "rip: m=" << m << " s=" << s << " " << to_string(method)
                 << " mean delta " << format_real(mean_of(deltas)) << "\n";
        }
        row += "," + std::to_string(config.seed) + "," + format_real(bound) + "\n";
        result.csv += row;
      }
    }
  }
  result.report = report.str();
  return result;
}

// ----------------------------------------------------------------------- tail

CommandResult tail(const ExperimentConfig& config) {
  const std::size_t n = config.n;
  const std::size_t m = effective_m(config).front();
  const std::size_t s = config.s.front();
  const TailProfile profile =
      tail_profile(config.model, n, m, s, config.draws, config.lambdas, config.seed,
                   draw_options(config, parse_rip_method(config.method)));
  const double sigma2 =
      bound_or_nan([&] { return theoretical_tail_variance(config.bounds, n, m, s); });

  CommandResult result;
  result.csv = preamble(config) +
               "lambda,exceed_prob,draws,sigma2_c3,exceed_count,reference_bound,"
               "empirical_mean,fitted_slope\n";
  for (std::size_t i = 0; i < profile.lambdas.size(); ++i) {
    const double lambda = profile.lambdas[i];
    double reference = std::numeric_limits<double>::quiet_NaN();
    if (sigma2 > 0.0) {
      reference = std::exp(-lambda * lambda / sigma2);
    } else if (sigma2 == 0.0) {
      reference = lambda == 0.0 ? 1.0 : 0.0;
    }
    result.csv += format_real(lambda) + "," + format_real(profile.exceed_prob[i]) + "," +
                  std::to_string(profile.draws) + "," + format_real(sigma2) + "," +
                  std::to_string(profile.exceed_count[i]) + "," + format_real(reference) +
                  "," + format_real(profile.empirical_mean) + "," +
                  format_real(profile.fitted_slope) + "\n";
  }
  std::ostringstream report;
  report << "tail: mean delta " << format_real(profile.empirical_mean)
         << ", fitted slope " << format_real(profile.fitted_slope) << " over "
         << profile.fitted_levels << " levels\n";
  result.report = report.str();
  return result;
}

// ------------------------------------------------------------ recover / sweep

struct TrialOutcome {
  bool success = false;
  double rel_err = 0.0;
  std::size_t iterations = 0;
  double stability = 0.0;
  bool converged = false;
};

// One random instance, recovered by every configured algorithm.
std::vector<TrialOutcome> run_trial(const ExperimentConfig& config, std::size_t m,
                                    std::size_t s, const std::string& tag,
                                    std::size_t t) {
  const std::size_t n = config.n;
  const auto op = draw_operator(config.model, n, m, config.omega_mode, config.seed, tag, t);
  Rng rng(config.seed, tag + "/signal", t);
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t j : sample_without_replacement(rng, n, s)) {
    x0[static_cast<Eigen::Index>(j)] = rng.gaussian();
  }
  Eigen::VectorXd y = op.apply(x0);
  if (config.tau > 0.0) {
    Eigen::VectorXd e(static_cast<Eigen::Index>(m));
    for (auto& v : e) v = rng.gaussian();
    y += config.tau * e / e.norm();
  }
  std::vector<TrialOutcome> outcomes;
  for (Algorithm a : config.algorithms) {
    const RecoveryReport r = recover(a, {op, y, s, config.tau});
    TrialOutcome o;
    o.rel_err = (r.xhat - x0).norm() / x0.norm();
    o.iterations = r.iterations;
    o.stability = stability_ratio(x0, r.xhat, s, config.tau);
    o.converged = r.converged;
    o.success = config.tau == 0.0 ? o.rel_err <= 1e-6 : std::isfinite(o.stability);
    outcomes.push_back(o);
  }
  return outcomes;
}

struct Cell {
  std::size_t m;
  std::size_t s;
  std::string tag;
};

std::vector<Cell> grid_cells(const ExperimentConfig& config, const std::string& name) {
  std::vector<Cell> cells;
  for (std::size_t m : effective_m(config)) {
    for (std::size_t s : config.s) {
      cells.push_back({m, s, name + "/m=" + std::to_string(m) + "/s=" + std::to_string(s)});
    }
  }
  return cells;
}

// outcomes[cell][trial][algorithm]
std::vector<std::vector<std::vector<TrialOutcome>>> run_grid(
    const ExperimentConfig& config, const std::vector<Cell>& cells) {
  std::vector<std::vector<std::vector<TrialOutcome>>> outcomes(
      cells.size(), std::vector<std::vector<TrialOutcome>>(config.trials));
  parallel_for(cells.size() * config.trials, config.workers, [&](std::size_t i) {
    const std::size_t c = i / config.trials;
    const std::size_t t = i % config.trials;
    outcomes[c][t] = run_trial(config, cells[c].m, cells[c].s, cells[c].tag, t);
  });
  return outcomes;
}

CommandResult recover_command(const ExperimentConfig& config) {
  const auto cells = grid_cells(config, "recover");
  const auto outcomes = run_grid(config, cells);
  CommandResult result;
  result.csv = preamble(config) +
               "algorithm,n,m,s,tau,success,rel_err,iterations,stability_ratio,trial,"
               "converged\n";
  std::ostringstream report;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<std::size_t> successes(config.algorithms.size(), 0);
    for (std::size_t t = 0; t < config.trials; ++t) {
      for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        const TrialOutcome& o = outcomes[c][t][a];
        successes[a] += o.success ? 1 : 0;
        result.csv += std::string(to_string(config.algorithms[a])) + "," +
                      std::to_string(config.n) + "," + std::to_string(cells[c].m) + "," +
                      std::to_string(cells[c].s) + "," + format_real(config.tau) + "," +
                      (o.success ? "1" : "0") + "," + format_real(o.rel_err) + "," +
                      std::to_string(o.iterations) + "," + format_real(o.stability) +
                      "," + std::to_string(t) + "," + (o.converged ? "1" : "0") + "\n";
      }
    }
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
      report << "recover: " << to_string(config.algorithms[a]) << " m=" << cells[c].m
             << " s=" << cells[c].s << " success " << successes[a] << "/"
             << config.trials << "\n";
    }
  }
  result.report = report.str();
  return result;
}

CommandResult sweep(const ExperimentConfig& config) {
  const auto cells = grid_cells(config, "sweep");
  const auto outcomes = run_grid(config, cells);
  CommandResult result;
  result.csv = preamble(config) +
               "algorithm,n,m,s,trials,successes,success_rate,std_error,delta_star,"
               "sample_bound\n";
  std::ostringstream report;
  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    const Algorithm algorithm = config.algorithms[a];
    const double delta_star =
        config.delta_star.value_or(algorithm_constants(algorithm).delta_star);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::size_t successes = 0;
      for (std::size_t t = 0; t < config.trials; ++t) {
        successes += outcomes[c][t][a].success ? 1 : 0;
      }
      const double rate = static_cast<double>(successes) / static_cast<double>(config.trials);
      const double std_error = std::sqrt(rate * (1.0 - rate) / static_cast<double>(config.trials));
      const double bound = bound_or_nan([&] {
        return theoretical_sample_bound(config.bounds, delta_star, config.n, cells[c].s);
      });
      result.csv += std::string(to_string(algorithm)) + "," + std::to_string(config.n) +
                    "," + std::to_string(cells[c].m) + "," + std::to_string(cells[c].s) +
                    "," + std::to_string(config.trials) + "," + std::to_string(successes) +
                    "," + format_real(rate) + "," + format_real(std_error) + "," +
                    format_real(delta_star) + "," + format_real(bound) + "\n";
      report << "sweep: " << to_string(algorithm) << " m=" << cells[c].m
             << " s=" << cells[c].s << " success rate " << format_real(rate) << "\n";
    }
  }
  result.report = report.str();
  return result;
}

}  // namespace

CommandResult run(const ExperimentConfig& config) {
  validate(config);
  try {
    switch (config.command) {
      case Command::kLemmaCheck:
        return lemma_check(config);
      case Command::kRip:
        return rip(config);
      case Command::kTail:
        return tail(config);
      case Command::kRecover:
        return recover_command(config);
      case Command::kSweep:
        return sweep(config);
    }
  } catch (const BudgetExceeded& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown command");
}

int execute(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  CommandResult result;
  try {
    result = run(config);
  } catch (const ConfigError& e) {
    err << "circsense " << to_string(config.command) << ": configuration error: "
        << e.what() << "\n";
    return kExitConfig;
  }
  if (config.out.empty() || config.out == "-") {
    out << result.csv;
    out.flush();
  } else {
    std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
    file << result.csv;
    file.close();
    if (!file) {
      err << "circsense: cannot write '" << config.out << "'\n";
      return kExitConfig;
    }
  }
  err << result.report;
  return result.exit_code;
}

}  // namespace circsense::bench
