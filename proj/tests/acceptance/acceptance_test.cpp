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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Optional argument: path to the circsense executable, used
// for the reproducibility criterion; without it the library driver is used.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "circsense/bench.hpp"
#include "circsense/circulant.hpp"
#include "circsense/recovery.hpp"
#include "circsense/rip.hpp"
#include "circsense/rng.hpp"
#include "circsense/spectral.hpp"
#include "oracles.hpp"

namespace cs = circsense;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

Eigen::VectorXd random_vector(cs::Rng& rng, Eigen::Index n) {
  Eigen::VectorXd v(n);
  for (auto& e : v) e = rng.gaussian();
  return v;
}

Eigen::VectorXd sparse_signal(cs::Rng& rng, std::size_t n, std::size_t s) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t j : cs::sample_without_replacement(rng, n, s)) {
    x[static_cast<Eigen::Index>(j)] = rng.gaussian();
  }
  return x;
}

cs::GeneratorModel any_model(cs::Rng& rng) {
  constexpr cs::GeneratorModel models[] = {
      cs::GeneratorModel::kRademacher, cs::GeneratorModel::kGaussian,
      cs::GeneratorModel::kFourierBernoulli, cs::GeneratorModel::kDeterministic};
  return models[rng.below(4)];
}

cs::OmegaMode any_omega(cs::Rng& rng) {
  constexpr cs::OmegaMode modes[] = {cs::OmegaMode::kUniform, cs::OmegaMode::kConsecutive,
                                     cs::OmegaMode::kEquispaced};
  return modes[rng.below(3)];
}

// Every projector property over 200 random (n <= 256, Omega).
Outcome lemma_suite() {
  const auto start = Clock::now();
  double worst = 0.0;
  int worst_property = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    cs::Rng rng(2026, "acceptance/lemma", i);
    const std::size_t n = 1 + rng.below(256);
    const std::size_t m = 1 + rng.below(n);
    const auto samples = cs::make_samples(any_omega(rng), n, m, rng);
    const auto projector = cs::fourier_projector(samples);
    const auto dev = cs::projector_deviations(projector.matrix, m);
    for (int p = 1; p <= 4; ++p) {
      if (dev.property(p) > worst) {
        worst = dev.property(p);
        worst_property = p;
      }
    }
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = worst <= 1e-9 && elapsed < 30.0;
  o.detail = "max deviation " + fmt(worst) + " (property " + std::to_string(worst_property) +
             "), " + fmt(elapsed) + " s";
  return o;
}

// Fast apply/adjoint against an independently built dense matrix.
Outcome fast_path() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    cs::Rng rng(2026, "acceptance/fast-path", i);
    const std::size_t n = 1 + rng.below(512);
    const std::size_t m = 1 + rng.below(n);
    const auto model = any_model(rng);
    const auto generator = cs::make_generator(model, n, rng.next());
    const cs::PartialCirculantOperator op(generator, cs::make_samples(any_omega(rng), n, m, rng));
    const Eigen::MatrixXd full = cs::oracle::dense_circulant(generator.values);
    Eigen::MatrixXd dense(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < m; ++r) {
      dense.row(static_cast<Eigen::Index>(r)) =
          full.row(static_cast<Eigen::Index>(op.samples().indices()[r]));
    }
    dense /= std::sqrt(static_cast<double>(m));
    const Eigen::VectorXd x = random_vector(rng, static_cast<Eigen::Index>(n));
    const Eigen::VectorXd y = random_vector(rng, static_cast<Eigen::Index>(m));
    const Eigen::VectorXd ax = dense * x;
    const Eigen::VectorXd aty = dense.transpose() * y;
    worst = std::max(worst, (op.apply(x) - ax).norm() / std::max(ax.norm(), 1e-300));
    worst = std::max(worst, (op.adjoint(y) - aty).norm() / std::max(aty.norm(), 1e-300));
  }
  double worst_toeplitz = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    cs::Rng rng(2026, "acceptance/toeplitz", i);
    const std::size_t n = 1 + rng.below(256);
    const Eigen::VectorXd diagonals =
        random_vector(rng, static_cast<Eigen::Index>(2 * n - 1));
    const std::size_t rows = 1 + rng.below(n);
    const auto row_set = cs::sample_without_replacement(rng, n, rows);
    const cs::ToeplitzOperator op(diagonals, row_set, n);
    const Eigen::MatrixXd full = cs::oracle::dense_toeplitz(diagonals, n);
    Eigen::MatrixXd dense(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < rows; ++r) {
      dense.row(static_cast<Eigen::Index>(r)) = full.row(static_cast<Eigen::Index>(row_set[r]));
    }
    const Eigen::VectorXd x = random_vector(rng, static_cast<Eigen::Index>(n));
    const Eigen::VectorXd y = random_vector(rng, static_cast<Eigen::Index>(rows));
    const Eigen::VectorXd ax = dense * x;
    const Eigen::VectorXd aty = dense.transpose() * y;
    worst_toeplitz = std::max(worst_toeplitz, (op.apply(x) - ax).norm() / ax.norm());
    worst_toeplitz = std::max(worst_toeplitz, (op.adjoint(y) - aty).norm() / aty.norm());
  }
  Outcome o;
  o.pass = worst <= 1e-10 && worst_toeplitz <= 1e-10;
  o.detail = "circulant max rel err " + fmt(worst) + " over 500, Toeplitz " +
             fmt(worst_toeplitz) + " over 50";
  return o;
}

// Quadratic-form and time/Fourier forms of the chaos process.
Outcome chaos_identities() {
  double worst_form = 0.0;
  double worst_domains = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    cs::Rng rng(2026, "acceptance/chaos", i);
    const std::size_t n = 2 + rng.below(63);
    const std::size_t m = 1 + rng.below(n);
    const std::size_t s = 1 + rng.below(std::min<std::size_t>(n, 6));
    const auto generator = cs::make_generator(cs::GeneratorModel::kRademacher, n, rng.next());
    const cs::PartialCirculantOperator op(generator, cs::SampleSet::uniform(n, m, rng));
    Eigen::VectorXd x = sparse_signal(rng, n, s);
    x /= x.norm();
    const double fast = op.apply(x).squaredNorm() - x.squaredNorm();
    const auto z = cs::chaos_matrix(x, op.samples(), s);
    worst_form = std::max(worst_form, std::abs(fast - cs::quadratic_form(z, generator.values)));
    worst_domains = std::max(worst_domains, std::abs(cs::chaos_value_shift_sum(op, x) -
                                                     cs::chaos_value_fourier(op, x)));
  }
  Outcome o;
  o.pass = worst_form <= 1e-9 && worst_domains <= 1e-9;
  o.detail = "|G - eps^T Z eps| max " + fmt(worst_form) + ", time vs Fourier max " +
             fmt(worst_domains) + " over 100 each";
  return o;
}

// Exact delta against closed-form and SVD oracles.
Outcome exact_delta_oracle() {
  Outcome o;
  std::ostringstream detail;
  double worst_delta1 = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    cs::Rng rng(2026, "acceptance/delta1", i);
    const std::size_t n = 1 + rng.below(128);
    const std::size_t m = 1 + rng.below(n);
    const cs::PartialCirculantOperator op(
        cs::make_generator(cs::GeneratorModel::kRademacher, n, rng.next()),
        cs::SampleSet::uniform(n, m, rng));
    worst_delta1 = std::max(worst_delta1, cs::exact_rip(op, 1).delta);
  }
  if (worst_delta1 != 0.0) o.pass = false;
  detail << "delta_1 max " << fmt(worst_delta1) << " over 50; ";

  Eigen::VectorXd phi(4);
  phi << 1, 1, -1, 1;
  const cs::PartialCirculantOperator worked(cs::generator_from_values(phi),
                                            cs::SampleSet({0, 2}, 4));
  const auto est = cs::exact_rip(worked, 2);
  const bool witness_ok = est.witness_support == std::vector<std::size_t>{0, 2} ||
                          est.witness_support == std::vector<std::size_t>{1, 3};
  if (std::abs(est.delta - 1.0) > 1e-12 || !witness_ok) o.pass = false;
  detail << "worked delta_2 " << fmt(est.delta) << " witness {" << est.witness_support[0]
         << "," << est.witness_support[1] << "}; ";

  std::size_t mc_violations = 0;
  double worst_svd = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    cs::Rng rng(2026, "acceptance/mc-vs-exact", i);
    const std::size_t n = 4 + rng.below(13);
    const std::size_t m = 1 + rng.below(n);
    const std::size_t s = 2 + rng.below(2);
    const cs::PartialCirculantOperator op(cs::make_generator(any_model(rng), n, rng.next()),
                                          cs::make_samples(any_omega(rng), n, m, rng));
    const double exact = cs::exact_rip(op, s).delta;
    const double mc = cs::monte_carlo_rip(op, s, 100, rng.next()).delta;
    if (mc > exact + 1e-12) ++mc_violations;
    worst_svd = std::max(worst_svd, std::abs(exact - cs::oracle::svd_rip(op.materialize(), s)));
  }
  if (mc_violations > 0 || worst_svd > 1e-10) o.pass = false;
  detail << "monte-carlo > exact on " << mc_violations << "/50, exact vs SVD oracle max "
         << fmt(worst_svd);
  o.detail = detail.str();
  return o;
}

Outcome scaling_shape() {
  const auto start = Clock::now();
  const auto rows = cs::mean_delta(cs::GeneratorModel::kRademacher, 64, {8, 16, 32, 64}, 2,
                                   200, 2026);
  bool decreasing = true;
  std::ostringstream detail;
  detail << "mean delta_2 over m=8,16,32,64:";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    detail << " " << fmt(rows[i].mean);
    if (i > 0 && !(rows[i].mean < rows[i - 1].mean)) decreasing = false;
  }
  bool non_decreasing = true;
  detail << "; mean delta_s at m=32 over s=1,2,3:";
  double previous = -1.0;
  for (std::size_t s = 1; s <= 3; ++s) {
    const auto row = cs::mean_delta(cs::GeneratorModel::kRademacher, 64, {32}, s, 200, 2026);
    detail << " " << fmt(row[0].mean);
    if (row[0].mean < previous) non_decreasing = false;
    previous = row[0].mean;
  }
  const double elapsed = seconds_since(start);
  detail << "; " << fmt(elapsed) << " s";
  return {decreasing && non_decreasing && elapsed < 300.0, detail.str()};
}

Outcome tail_shape() {
  const auto start = Clock::now();
  const auto profile = cs::tail_profile(cs::GeneratorModel::kRademacher, 64, 32, 2, 2000,
                                        cs::default_lambda_grid(), 2026);
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = std::isfinite(profile.fitted_slope) && profile.fitted_slope < 0.0 && elapsed < 600.0;
  o.detail = "fitted slope " + fmt(profile.fitted_slope) + " over " +
             std::to_string(profile.fitted_levels) + " levels, " + fmt(elapsed) + " s";
  return o;
}

Outcome recovery_end_to_end() {
  const auto start = Clock::now();
  const cs::Algorithm greedy[] = {cs::Algorithm::kIht, cs::Algorithm::kHtp,
                                  cs::Algorithm::kCoSaMP};
  std::size_t successes[3] = {0, 0, 0};
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto op = cs::draw_operator(cs::GeneratorModel::kRademacher, 512, 128,
                                      cs::OmegaMode::kUniform, 2026, "acceptance/recovery", t);
    cs::Rng rng(2026, "acceptance/recovery/signal", t);
    const Eigen::VectorXd x0 = sparse_signal(rng, 512, 5);
    const Eigen::VectorXd y = op.apply(x0);
    for (int a = 0; a < 3; ++a) {
      const auto r = cs::recover(greedy[a], {op, y, 5});
      if ((r.xhat - x0).norm() <= 1e-6 * x0.norm()) ++successes[a];
    }
  }
  std::size_t bp_matches = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const auto op = cs::draw_operator(cs::GeneratorModel::kRademacher, 64, 32,
                                      cs::OmegaMode::kUniform, 2026, "acceptance/bp", t);
    cs::Rng rng(2026, "acceptance/bp/signal", t);
    const Eigen::VectorXd x0 = sparse_signal(rng, 64, 2);
    const Eigen::VectorXd y = op.apply(x0);
    const auto oracle = cs::oracle::l0_search(op.materialize(), y, 2);
    const auto r = cs::basis_pursuit({op, y, 2});
    if (r.support == oracle.support) ++bp_matches;
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = successes[0] >= 95 && successes[1] >= 95 && successes[2] >= 95 &&
           bp_matches == 50 && elapsed < 600.0;
  o.detail = "iht " + std::to_string(successes[0]) + "/100, htp " +
             std::to_string(successes[1]) + "/100, cosamp " + std::to_string(successes[2]) +
             "/100, basis pursuit support = l0 oracle " + std::to_string(bp_matches) +
             "/50, " + fmt(elapsed) + " s";
  return o;
}

Outcome certificate_soundness() {
  struct Setting {
    cs::GeneratorModel model;
    std::size_t n;
    std::size_t m;
    std::size_t s;
  };
  const Setting settings[] = {
      {cs::GeneratorModel::kRademacher, 12, 12, 1},
      {cs::GeneratorModel::kRademacher, 16, 16, 1},
      {cs::GeneratorModel::kRademacher, 24, 24, 1},
      {cs::GeneratorModel::kGaussian, 16, 16, 1},
      {cs::GeneratorModel::kGaussian, 24, 24, 1},
      {cs::GeneratorModel::kFourierBernoulli, 12, 11, 1},
      {cs::GeneratorModel::kFourierBernoulli, 16, 15, 1},
      {cs::GeneratorModel::kFourierBernoulli, 12, 11, 2},
  };
  constexpr std::size_t kSignals = 5;
  std::size_t pairs = 0;
  std::size_t counterexamples = 0;
  std::size_t certified_instances = 0;
  for (std::size_t k = 0; k < std::size(settings); ++k) {
    const Setting& st = settings[k];
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto op = cs::draw_operator(st.model, st.n, st.m, cs::OmegaMode::kUniform, 2026,
                                        "acceptance/certificate/" + std::to_string(k), seed);
      for (cs::Algorithm a : cs::kAllAlgorithms) {
        const auto check = cs::rip_certificate_check(op, a, st.s);
        if (check.certified != cs::Certification::kCertified) continue;
        ++certified_instances;
        cs::Rng rng(seed, "acceptance/certificate/signal/" + std::to_string(k),
                    static_cast<std::uint64_t>(a));
        for (std::size_t i = 0; i < kSignals; ++i) {
          const Eigen::VectorXd x0 = sparse_signal(rng, st.n, st.s);
          const auto r = cs::recover(a, {op, op.apply(x0), st.s});
          ++pairs;
          if ((r.xhat - x0).norm() > 1e-6 * x0.norm()) ++counterexamples;
        }
      }
    }
  }
  Outcome o;
  o.pass = pairs >= 500 && counterexamples == 0;
  o.detail = std::to_string(counterexamples) + " counterexamples over " +
             std::to_string(pairs) + " certified instance-signal pairs (" +
             std::to_string(certified_instances) + " certified instance-algorithm pairs)";
  return o;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome reproducibility(const std::string& cli) {
  const std::vector<std::string> commands = {
      "lemma-check --n 64 --draws 30 --seed 11",
      "rip --n 32 --m 8,16,32 --s 1,2,3 --draws 20 --method both --seed 11",
      "tail --n 64 --m 32 --s 2 --draws 300 --seed 11",
      "recover --n 128 --m 48 --s 4 --trials 8 --seed 11",
      "recover --n 64 --m 32 --s 2 --trials 3 --tau 0.02 --seed 11",
      "sweep --n 64 --m 8,16,32 --s 2,4 --trials 10 --algorithm iht,htp,cosamp --seed 11",
  };
  const auto dir = std::filesystem::temp_directory_path() / "circsense_acceptance_repro";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::size_t identical = 0;
  std::string failures;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::vector<std::string> outputs;
    for (const char* workers : {"1", "4", "1"}) {
      const auto path = dir / ("run" + std::to_string(i) + "_" + std::to_string(outputs.size()) + ".csv");
      const std::string args =
          commands[i] + " --workers " + workers + " --out " + path.string();
      int status = 0;
      if (!cli.empty()) {
        status = std::system((cli + " " + args + " 2>/dev/null").c_str());
      } else {
        std::istringstream in(args);
        std::string name, key, value;
        in >> name;
        cs::bench::ExperimentConfig config;
        config.command = cs::bench::parse_command(name);
        while (in >> key >> value) cs::bench::apply_setting(config, key.substr(2), value);
        std::ostringstream out, err;
        status = cs::bench::execute(config, out, err);
      }
      outputs.push_back(status == 0 ? read_file(path) : std::string());
    }
    if (!outputs[0].empty() && outputs[0] == outputs[1] && outputs[1] == outputs[2]) {
      ++identical;
    } else {
      failures += " [" + commands[i] + "]";
    }
  }
  std::filesystem::remove_all(dir);
  Outcome o;
  o.pass = identical == commands.size();
  o.detail = std::to_string(identical) + "/" + std::to_string(commands.size()) +
             " commands byte-identical across reruns with 1 and 4 workers" +
             (cli.empty() ? " (library driver)" : " (CLI)") + failures;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"projector properties", lemma_suite},
      {"fast-path correctness", fast_path},
      {"chaos identities", chaos_identities},
      {"exact-delta oracle", exact_delta_oracle},
      {"mean delta scaling shape", scaling_shape},
      {"tail shape", tail_shape},
      {"recovery end-to-end", recovery_end_to_end},
      {"certificate soundness", certificate_soundness},
      {"reproducibility", [&] { return reproducibility(cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << c.name << ": " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed"
                            : std::to_string(failed) + " acceptance criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
