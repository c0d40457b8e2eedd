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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace circsense::bench {
namespace {

struct Table {
  std::string comment;
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell += ch;
    }
  }
  cells.push_back(cell);
  return cells;
}

Table parse(const std::string& csv) {
  Table table;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind('#', 0) == 0) {
      if (table.comment.empty()) table.comment = line;
      continue;
    }
    if (table.header.empty()) {
      table.header = split_csv_line(line);
      continue;
    }
    const auto cells = split_csv_line(line);
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < cells.size() && i < table.header.size(); ++i) {
      row[table.header[i]] = cells[i];
    }
    table.rows.push_back(row);
  }
  return table;
}

double num(const std::map<std::string, std::string>& row, const std::string& key) {
  return std::stod(row.at(key));
}

ExperimentConfig config_for(Command command) {
  ExperimentConfig config;
  config.command = command;
  config.workers = 1;
  return config;
}

TEST(ConfigTest, SettingsParse) {
  ExperimentConfig c;
  apply_setting(c, "n", "128");
  apply_setting(c, "m", "8, 16,32");
  apply_setting(c, "s", "1,2");
  apply_setting(c, "model", "gaussian");
  apply_setting(c, "omega-mode", "equispaced");
  apply_setting(c, "algorithm", "iht,htp");
  apply_setting(c, "c2", "0.5");
  apply_setting(c, "delta-star", "0.3");
  EXPECT_EQ(c.n, 128u);
  EXPECT_EQ(*c.m, (std::vector<std::size_t>{8, 16, 32}));
  EXPECT_EQ(c.s, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(c.model, GeneratorModel::kGaussian);
  EXPECT_EQ(c.omega_mode, OmegaMode::kEquispaced);
  EXPECT_EQ(c.algorithms, (std::vector<Algorithm>{Algorithm::kIht, Algorithm::kHtp}));
  EXPECT_EQ(c.bounds.c2, 0.5);
  EXPECT_EQ(*c.delta_star, 0.3);
  apply_setting(c, "m", "");
  EXPECT_TRUE(c.m->empty());
}

TEST(ConfigTest, BadSettingsAreConfigErrors) {
  ExperimentConfig c;
  EXPECT_THROW(apply_setting(c, "n", "-3"), ConfigError);
  EXPECT_THROW(apply_setting(c, "n", "12x"), ConfigError);
  EXPECT_THROW(apply_setting(c, "c1", "nan"), ConfigError);
  EXPECT_THROW(apply_setting(c, "model", "steinhaus"), ConfigError);
  EXPECT_THROW(apply_setting(c, "algorithm", "omp"), ConfigError);
  EXPECT_THROW(apply_setting(c, "method", "guess"), ConfigError);
  EXPECT_THROW(apply_setting(c, "colour", "red"), ConfigError);
}

TEST(ConfigTest, ValidationCatchesInconsistentDimensions) {
  ExperimentConfig c = config_for(Command::kRip);
  c.n = 16;
  c.m = std::vector<std::size_t>{17};
  EXPECT_THROW(validate(c), ConfigError);
  c.m = std::vector<std::size_t>{8};
  c.s = {0};
  EXPECT_THROW(validate(c), ConfigError);
  c.s = {2};
  EXPECT_NO_THROW(validate(c));
  c.draws = 0;
  EXPECT_THROW(validate(c), ConfigError);
  c.draws = 5;
  c.bounds.c1 = -1.0;
  EXPECT_THROW(validate(c), ConfigError);
  c.bounds.c1 = 1.0;
  c.out = "/nonexistent-dir/x.csv";
  EXPECT_THROW(validate(c), ConfigError);
  c.out.clear();
  c.command = Command::kTail;
  c.m = std::vector<std::size_t>{4, 8};
  EXPECT_THROW(validate(c), ConfigError);
  c.m = std::vector<std::size_t>{8};
  c.lambdas = {0.5};
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(ConfigTest, FileThenFlags) {
  const auto path = std::filesystem::temp_directory_path() / "circsense_bench_cfg.txt";
  {
    std::ofstream f(path);
    f << "# sweep settings\n\nn = 40\nm=8,16\nseed=9\n";
  }
  ExperimentConfig c;
  load_config_file(c, path.string());
  EXPECT_EQ(c.n, 40u);
  EXPECT_EQ(c.seed, 9u);
  apply_setting(c, "seed", "11");  // a flag given after the file wins
  EXPECT_EQ(c.seed, 11u);
  EXPECT_EQ(*c.m, (std::vector<std::size_t>{8, 16}));
  {
    std::ofstream f(path);
    f << "n 40\n";
  }
  EXPECT_THROW(load_config_file(c, path.string()), ConfigError);
  std::filesystem::remove(path);
  EXPECT_THROW(load_config_file(c, "/nonexistent/config"), ConfigError);
}

TEST(ConfigTest, DescriptionOmitsOutputAndWorkers) {
  ExperimentConfig a = config_for(Command::kRip);
  ExperimentConfig b = a;
  b.workers = 7;
  b.out = "/tmp/elsewhere.csv";
  EXPECT_EQ(describe(a), describe(b));
  b.seed = 2;
  EXPECT_NE(describe(a), describe(b));
}

TEST(LemmaCheckTest, SmallDimensionPasses) {
  ExperimentConfig c = config_for(Command::kLemmaCheck);
  c.n = 8;
  c.draws = 50;
  const CommandResult r = run(c);
  EXPECT_EQ(r.exit_code, kExitOk);
  const Table t = parse(r.csv);
  ASSERT_EQ(t.rows.size(), 5u);
  for (const auto& row : t.rows) {
    EXPECT_LE(num(row, "max_deviation"), 1e-12) << row.at("property");
    EXPECT_EQ(row.at("pass"), "1");
  }
}

TEST(LemmaCheckTest, ScalarCase) {
  ExperimentConfig c = config_for(Command::kLemmaCheck);
  c.n = 1;
  c.m = std::vector<std::size_t>{1};
  c.draws = 2;
  EXPECT_EQ(run(c).exit_code, kExitOk);
}

TEST(LemmaCheckTest, TamperedProjectorFails) {
  ExperimentConfig c = config_for(Command::kLemmaCheck);
  c.n = 16;
  c.draws = 4;
  c.tamper = "diagonal";
  CommandResult r = run(c);
  EXPECT_EQ(r.exit_code, kExitAssertion);
  EXPECT_NE(r.report.find("FAILED: property 2"), std::string::npos) << r.report;
  c.tamper = "circulant";
  r = run(c);
  EXPECT_EQ(r.exit_code, kExitAssertion);
  EXPECT_NE(r.report.find("FAILED: property 1"), std::string::npos) << r.report;
}

TEST(LemmaCheckTest, DenseLimit) {
  ExperimentConfig c = config_for(Command::kLemmaCheck);
  c.n = kDefaultDenseLimit + 1;
  EXPECT_THROW(run(c), ConfigError);
}

TEST(RipCommandTest, SparsityOneIsZero) {
  ExperimentConfig c = config_for(Command::kRip);
  c.n = 32;
  c.m = std::vector<std::size_t>{4, 8, 32};
  c.s = {1};
  c.draws = 5;
  const Table t = parse(run(c).csv);
  ASSERT_EQ(t.rows.size(), 3u);
  for (const auto& row : t.rows) EXPECT_EQ(num(row, "delta"), 0.0);
  EXPECT_EQ(t.header,
            (std::vector<std::string>{"n", "m", "s", "model", "omega_mode", "method",
                                      "delta", "stderr_or_witness", "seed", "bound_c1"}));
}

TEST(RipCommandTest, ExactDominatesMonteCarlo) {
  ExperimentConfig c = config_for(Command::kRip);
  c.n = 24;
  c.m = std::vector<std::size_t>{6, 12, 24};
  c.s = {2};
  c.draws = 10;
  c.mc_trials = 20;
  c.method = "both";
  const Table t = parse(run(c).csv);
  ASSERT_EQ(t.rows.size(), 6u);
  for (std::size_t i = 0; i < t.rows.size(); i += 2) {
    EXPECT_EQ(t.rows[i].at("method"), "exact");
    EXPECT_EQ(t.rows[i + 1].at("method"), "monte-carlo");
    EXPECT_GE(num(t.rows[i], "delta") + 1e-12, num(t.rows[i + 1], "delta"));
  }
}

TEST(RipCommandTest, OverBudgetRowsAreSkipped) {
  ExperimentConfig c = config_for(Command::kRip);
  c.n = 40;
  c.m = std::vector<std::size_t>{20};
  c.s = {3};
  c.draws = 2;
  c.method = "exact";
  c.budget = 100;
  const CommandResult r = run(c);
  const Table t = parse(r.csv);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0].at("delta"), "skipped");
}

TEST(RipCommandTest, SingleDrawReportsWitness) {
  ExperimentConfig c = config_for(Command::kRip);
  c.n = 12;
  c.m = std::vector<std::size_t>{6};
  c.s = {2};
  c.draws = 1;
  const Table t = parse(run(c).csv);
  ASSERT_EQ(t.rows.size(), 1u);
  const std::string witness = t.rows[0].at("stderr_or_witness");
  EXPECT_NE(witness.find(';'), std::string::npos) << witness;
}

TEST(RipCommandTest, RerunIsBitwiseIdentical) {
  ExperimentConfig c = config_for(Command::kRip);
  c.n = 64;
  c.m = std::vector<std::size_t>{16, 32};
  c.s = {2, 3};
  c.draws = 6;
  c.method = "auto";
  const std::string first = run(c).csv;
  c.workers = 3;
  EXPECT_EQ(run(c).csv, first);
}

TEST(TailCommandTest, ProfileShape) {
  ExperimentConfig c = config_for(Command::kTail);
  c.n = 64;
  c.m = std::vector<std::size_t>{32};
  c.s = {2};
  c.draws = 2000;
  c.lambdas = {0.0, 0.02, 0.04, 0.06, 0.08, 0.1, 0.12, 0.14, 0.16, 0.18, 0.2};
  const Table t = parse(run(c).csv);
  ASSERT_EQ(t.rows.size(), c.lambdas.size());
  EXPECT_EQ(num(t.rows[0], "lambda"), 0.0);
  EXPECT_LT(num(t.rows[0], "exceed_prob"), 1.0);
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    EXPECT_LE(num(t.rows[i], "exceed_prob"), num(t.rows[i - 1], "exceed_prob"));
  }
  EXPECT_LT(num(t.rows[0], "fitted_slope"), 0.0);
  const double sigma2 = num(t.rows[0], "sigma2_c3");
  EXPECT_NEAR(num(t.rows[3], "reference_bound"), std::exp(-0.06 * 0.06 / sigma2), 1e-15);
}

TEST(RecoverCommandTest, ImpulseRecoversEverything) {
  ExperimentConfig c = config_for(Command::kRecover);
  c.n = 16;
  c.m = std::vector<std::size_t>{16};
  c.s = {3};
  c.trials = 4;
  c.model = GeneratorModel::kDeterministic;
  const Table t = parse(run(c).csv);
  ASSERT_EQ(t.rows.size(), 16u);
  for (const auto& row : t.rows) EXPECT_EQ(row.at("success"), "1") << row.at("algorithm");
}

TEST(RecoverCommandTest, CriticallyFewSamplesFail) {
  ExperimentConfig c = config_for(Command::kRecover);
  c.n = 64;
  c.m = std::vector<std::size_t>{3};
  c.s = {3};
  c.trials = 20;
  c.algorithms = {Algorithm::kIht, Algorithm::kHtp, Algorithm::kCoSaMP};
  const Table t = parse(run(c).csv);
  std::size_t successes = 0;
  for (const auto& row : t.rows) successes += row.at("success") == "1";
  EXPECT_LE(successes, t.rows.size() / 10);
}

TEST(RecoverCommandTest, NoisySuccessMeansFiniteRatio) {
  ExperimentConfig c = config_for(Command::kRecover);
  c.n = 32;
  c.m = std::vector<std::size_t>{16};
  c.s = {2};
  c.trials = 3;
  c.tau = 0.01;
  c.algorithms = {Algorithm::kHtp};
  const Table t = parse(run(c).csv);
  for (const auto& row : t.rows) {
    EXPECT_EQ(row.at("success") == "1", std::isfinite(num(row, "stability_ratio")));
  }
}

TEST(SweepCommandTest, SuccessIsMonotone) {
  ExperimentConfig c = config_for(Command::kSweep);
  c.n = 64;
  c.m = std::vector<std::size_t>{8, 16, 24, 32};
  c.s = {2, 4, 6};
  c.trials = 30;
  c.algorithms = {Algorithm::kHtp};
  const Table t = parse(run(c).csv);
  ASSERT_EQ(t.rows.size(), 12u);
  auto at = [&](std::size_t mi, std::size_t si) { return t.rows[mi * 3 + si]; };
  auto slack = [](const auto& a, const auto& b) {
    return 2.0 * std::hypot(num(a, "std_error"), num(b, "std_error")) + 1e-12;
  };
  for (std::size_t si = 0; si < 3; ++si) {
    for (std::size_t mi = 1; mi < 4; ++mi) {
      EXPECT_GE(num(at(mi, si), "success_rate") + slack(at(mi, si), at(mi - 1, si)),
                num(at(mi - 1, si), "success_rate"));
    }
  }
  for (std::size_t mi = 0; mi < 4; ++mi) {
    for (std::size_t si = 1; si < 3; ++si) {
      EXPECT_LE(num(at(mi, si), "success_rate"),
                num(at(mi, si - 1), "success_rate") + slack(at(mi, si), at(mi, si - 1)));
    }
  }
  EXPECT_FALSE(std::isnan(num(t.rows[0], "sample_bound")));
  EXPECT_NEAR(num(t.rows[0], "delta_star"), 1.0 / std::sqrt(3.0), 1e-15);
}

TEST(SweepCommandTest, EmptyGridWritesNothing) {
  const auto path = std::filesystem::temp_directory_path() / "circsense_empty_grid.csv";
  std::filesystem::remove(path);
  ExperimentConfig c = config_for(Command::kSweep);
  c.m = std::vector<std::size_t>{};
  c.out = path.string();
  std::ostringstream out, err;
  EXPECT_EQ(execute(c, out, err), kExitConfig);
  EXPECT_FALSE(std::filesystem::exists(path));
  EXPECT_NE(err.str().find("empty grid"), std::string::npos);
}

TEST(OutputTest, CommentLineThenHeader) {
  ExperimentConfig c = config_for(Command::kRip);
  c.n = 8;
  c.s = {1};
  c.draws = 2;
  const std::string csv = run(c).csv;
  const std::string expected_prefix = "# circsense " + std::string(tool_version()) + " ";
  EXPECT_EQ(csv.rfind(expected_prefix, 0), 0u);
  EXPECT_NE(csv.find(describe(c)), std::string::npos);
}

TEST(OutputTest, ExecuteWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "circsense_execute.csv";
  ExperimentConfig c = config_for(Command::kRip);
  c.n = 8;
  c.s = {1};
  c.draws = 2;
  c.out = path.string();
  std::ostringstream out, err;
  EXPECT_EQ(execute(c, out, err), kExitOk);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), run(c).csv);
  EXPECT_TRUE(out.str().empty());
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace circsense::bench
