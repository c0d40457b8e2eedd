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

#include "circsense/rip.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "circsense/parallel.hpp"

namespace circsense {

std::string_view to_string(RipMethod method) {
  return method == RipMethod::kExact ? "exact" : "monte-carlo";
}

RipMethodChoice parse_rip_method(std::string_view name) {
  if (name == "auto") return RipMethodChoice::kAuto;
  if (name == "exact") return RipMethodChoice::kExact;
  if (name == "monte-carlo" || name == "mc") return RipMethodChoice::kMonteCarlo;
  throw std::invalid_argument("unknown RIP method '" + std::string(name) + "'");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step.
    const std::uint64_t factor = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * factor / i;
  }
  return result;
}

namespace {

// Largest |eigenvalue| by power iteration on the two shifted matrices
// r I + D and r I - D, which are positive semidefinite for r >= ||D||.
double power_spectral_norm(const Eigen::Ref<const Eigen::MatrixXd>& d,
                           std::size_t max_steps, double tolerance) {
  const Eigen::Index s = d.rows();
  const double radius = d.cwiseAbs().rowwise().sum().maxCoeff();
  double best = 0.0;
  for (double sign : {1.0, -1.0}) {
    const Eigen::MatrixXd shifted =
        radius * Eigen::MatrixXd::Identity(s, s) + sign * d;
    Eigen::VectorXd v = Eigen::VectorXd::Constant(s, 1.0 / std::sqrt(double(s)));
    for (std::size_t step = 0; step < max_steps; ++step) {
      Eigen::VectorXd next = shifted * v;
      const double norm = next.norm();
      if (norm == 0.0) break;
      next /= norm;
      const double change = (next - v).norm();
      v = next;
      if (change <= tolerance) break;
    }
    best = std::max(best, std::abs(v.dot(d * v)));
  }
  return best;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_support(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_sparsity(std::size_t n, std::size_t s) {
  if (s == 0) throw std::invalid_argument("sparsity s must be >= 1");
  if (s > n) throw std::invalid_argument("sparsity s exceeds n");
}

// A_S^T A_S - I from the unscaled rows, dividing by m last so that +-1
// generators give exact unit diagonals.
Eigen::MatrixXd deviation_from_gram(const Eigen::MatrixXd& raw_gram,
                                    const std::vector<std::size_t>& support,
                                    double m) {
  const auto s = static_cast<Eigen::Index>(support.size());
  Eigen::MatrixXd d(s, s);
  for (Eigen::Index a = 0; a < s; ++a) {
    for (Eigen::Index b = 0; b < s; ++b) {
      d(a, b) = raw_gram(static_cast<Eigen::Index>(support[a]),
                         static_cast<Eigen::Index>(support[b])) / m;
    }
    d(a, a) -= 1.0;
  }
  return d;
}

// Columns of R_Omega C for a support, without forming the full matrix.
Eigen::MatrixXd sampled_columns(const PartialCirculantOperator& op,
                                const std::vector<std::size_t>& support) {
  const auto n = static_cast<std::ptrdiff_t>(op.n());
  const Eigen::VectorXd& phi = op.generator().values;
  Eigen::MatrixXd cols(static_cast<Eigen::Index>(op.m()),
                       static_cast<Eigen::Index>(support.size()));
  for (std::size_t c = 0; c < support.size(); ++c) {
    const auto j = static_cast<std::ptrdiff_t>(support[c]);
    for (std::size_t i = 0; i < op.m(); ++i) {
      const auto row = static_cast<std::ptrdiff_t>(op.samples()[i]);
      cols(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          phi[((row - j) % n + n) % n];
    }
  }
  return cols;
}

}  // namespace

double symmetric_spectral_norm(const Eigen::Ref<const Eigen::MatrixXd>& d) {
  const Eigen::Index s = d.rows();
  if (s == 0) return 0.0;
  if (s == 1) return std::abs(d(0, 0));
  if (s == 2) {
    const double mean = 0.5 * (d(0, 0) + d(1, 1));
    const double half_gap = 0.5 * (d(0, 0) - d(1, 1));
    return std::abs(mean) + std::hypot(half_gap, d(0, 1));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(d, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) return power_spectral_norm(d, 1000, 1e-12);
  const auto& lambda = eig.eigenvalues();
  return std::max(std::abs(lambda[0]), std::abs(lambda[s - 1]));
}

RipEstimate exact_rip(const PartialCirculantOperator& op, std::size_t s,
                      std::uint64_t budget) {
  check_sparsity(op.n(), s);
  const std::uint64_t supports = binomial(op.n(), s);
  if (supports > budget) {
    throw BudgetExceeded("exact_rip: C(" + std::to_string(op.n()) + ", " +
                         std::to_string(s) + ") supports exceed the budget of " +
                         std::to_string(budget));
  }
  const Eigen::MatrixXd raw = op.sampled_rows(std::numeric_limits<std::size_t>::max());
  const Eigen::MatrixXd raw_gram = raw.transpose() * raw;
  const double m = static_cast<double>(op.m());

  RipEstimate est;
  est.s = s;
  est.method = RipMethod::kExact;
  est.delta = -1.0;
  est.trials = static_cast<std::size_t>(supports);
  for_each_support(op.n(), s, [&](const std::vector<std::size_t>& support) {
    const double value =
        symmetric_spectral_norm(deviation_from_gram(raw_gram, support, m));
    if (value > est.delta) {
      est.delta = value;
      est.witness_support = support;
    }
  });
  return est;
}

RipEstimate monte_carlo_rip(const PartialCirculantOperator& op, std::size_t s,
                            std::size_t trials, std::uint64_t seed,
                            const MonteCarloOptions& options) {
  check_sparsity(op.n(), s);
  if (!options.all_supports && trials == 0) {
    throw std::invalid_argument("monte_carlo_rip: trials must be >= 1");
  }
  const double m = static_cast<double>(op.m());

  RipEstimate est;
  est.s = s;
  est.method = RipMethod::kMonteCarlo;
  est.delta = 0.0;

  // Evaluates |x^T D x| along the ascent and folds it into the running max.
  std::size_t index = 0;
  auto visit = [&](const std::vector<std::size_t>& support) {
    Rng rng(seed, "monte-carlo-rip", index++);
    const Eigen::MatrixXd cols = sampled_columns(op, support);
    Eigen::MatrixXd d = cols.transpose() * cols / m;
    d.diagonal().array() -= 1.0;

    const auto ss = static_cast<Eigen::Index>(s);
    Eigen::VectorXd x(ss);
    for (auto& v : x) v = rng.gaussian();
    x /= x.norm();

    double best = std::abs(x.dot(d * x));
    const double radius = d.cwiseAbs().rowwise().sum().maxCoeff();
    for (double sign : {1.0, -1.0}) {
      const Eigen::MatrixXd shifted =
          radius * Eigen::MatrixXd::Identity(ss, ss) + sign * d;
      Eigen::VectorXd v = x;
      for (std::size_t step = 0; step < options.power_steps; ++step) {
        Eigen::VectorXd next = shifted * v;
        const double norm = next.norm();
        if (norm == 0.0) break;
        next /= norm;
        const double change = (next - v).norm();
        v = next;
        best = std::max(best, std::abs(v.dot(d * v)));
        if (change <= options.power_tolerance) break;
      }
    }
    if (best > est.delta || est.witness_support.empty()) {
      est.delta = best;
      est.witness_support = support;
    }
  };

  if (options.all_supports) {
    const std::uint64_t supports = binomial(op.n(), s);
    if (supports > options.budget) {
      throw BudgetExceeded("monte_carlo_rip: support enumeration exceeds budget");
    }
    for_each_support(op.n(), s, visit);
  } else {
    for (std::size_t t = 0; t < trials; ++t) {
      Rng support_rng(seed, "monte-carlo-rip/support", t);
      visit(sample_without_replacement(support_rng, op.n(), s));
    }
  }
  est.trials = index;
  return est;
}

PartialCirculantOperator draw_operator(GeneratorModel model, std::size_t n,
                                       std::size_t m, OmegaMode omega_mode,
                                       std::uint64_t seed, std::string_view tag,
                                       std::uint64_t d) {
  if (m == 0 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  Rng rng(seed, tag, d);
  const std::uint64_t generator_seed = rng.next();
  SampleSet samples = make_samples(omega_mode, n, m, rng);
  return PartialCirculantOperator(make_generator(model, n, generator_seed),
                                  std::move(samples));
}

RipMethod resolve_method(RipMethodChoice choice, std::size_t n, std::size_t s,
                         std::uint64_t budget) {
  switch (choice) {
    case RipMethodChoice::kExact:
      if (binomial(n, s) > budget) {
        throw BudgetExceeded("exact method requested but C(" +
                             std::to_string(n) + ", " + std::to_string(s) +
                             ") exceeds the enumeration budget");
      }
      return RipMethod::kExact;
    case RipMethodChoice::kMonteCarlo:
      return RipMethod::kMonteCarlo;
    case RipMethodChoice::kAuto:
      return binomial(n, s) <= budget ? RipMethod::kExact : RipMethod::kMonteCarlo;
  }
  return RipMethod::kExact;
}

std::vector<double> sample_deltas(GeneratorModel model, std::size_t n,
                                  std::size_t m, std::size_t s,
                                  std::size_t draws, std::uint64_t seed,
                                  std::string_view tag,
                                  const DrawOptions& options) {
  check_sparsity(n, s);
  const RipMethod method = resolve_method(options.method, n, s, options.budget);
  std::vector<double> deltas(draws);
  const std::string draw_tag = std::string(tag) + "/m=" + std::to_string(m);
  parallel_for(draws, options.workers, [&](std::size_t d) {
    const auto op =
        draw_operator(model, n, m, options.omega_mode, seed, draw_tag, d);
    if (method == RipMethod::kExact) {
      deltas[d] = exact_rip(op, s, options.budget).delta;
    } else {
      const std::uint64_t mc_seed = derive_seed(seed, draw_tag + "/mc", d);
      deltas[d] = monte_carlo_rip(op, s, options.mc_trials, mc_seed).delta;
    }
  });
  return deltas;
}

std::vector<MeanDeltaRow> mean_delta(GeneratorModel model, std::size_t n,
                                     const std::vector<std::size_t>& m_list,
                                     std::size_t s, std::size_t draws,
                                     std::uint64_t seed,
                                     const DrawOptions& options) {
  if (draws < 2) throw std::invalid_argument("mean_delta: draws must be >= 2");
  std::vector<MeanDeltaRow> rows;
  for (std::size_t m : m_list) {
    const auto deltas =
        sample_deltas(model, n, m, s, draws, seed, "mean-delta", options);
    double sum = 0.0;
    for (double v : deltas) sum += v;
    const double mean = sum / static_cast<double>(draws);
    double ss = 0.0;
    for (double v : deltas) ss += (v - mean) * (v - mean);
    const double variance = ss / static_cast<double>(draws - 1);
    MeanDeltaRow row;
    row.m = m;
    row.mean = mean;
    row.std_error = std::sqrt(variance / static_cast<double>(draws));
    row.method = resolve_method(options.method, n, s, options.budget);
    row.draws = draws;
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> default_lambda_grid() {
  std::vector<double> grid(101);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = static_cast<double>(i) / 100.0;
  }
  return grid;
}

std::vector<double> normalize_lambda_grid(std::vector<double> grid) {
  for (double& v : grid) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("lambda grid contains a non-finite value");
    }
    v = std::clamp(v, 0.0, 1.0);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.size() < 2) {
    throw std::invalid_argument(
        "degenerate lambda grid: need two distinct levels in [0, 1]");
  }
  return grid;
}

TailProfile tail_profile_from_samples(const std::vector<double>& deltas,
                                      std::vector<double> lambda_grid) {
  if (deltas.empty()) throw std::invalid_argument("tail profile needs draws");
  TailProfile profile;
  profile.lambdas = normalize_lambda_grid(std::move(lambda_grid));
  profile.draws = deltas.size();
  double sum = 0.0;
  for (double v : deltas) sum += v;
  profile.empirical_mean = sum / static_cast<double>(deltas.size());

  std::vector<double> xs;
  std::vector<double> ys;
  for (double lambda : profile.lambdas) {
    const double threshold = profile.empirical_mean + lambda;
    std::size_t count = 0;
    for (double v : deltas) count += v >= threshold ? 1 : 0;
    profile.exceed_count.push_back(count);
    const double p = static_cast<double>(count) / static_cast<double>(deltas.size());
    profile.exceed_prob.push_back(p);
    if (count >= TailProfile::kMinExceedances) {
      xs.push_back(lambda * lambda);
      ys.push_back(std::log(p));
    }
  }

  profile.fitted_levels = xs.size();
  profile.fitted_slope = std::numeric_limits<double>::quiet_NaN();
  if (xs.size() >= 2) {
    const double k = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= k;
    my /= k;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx > 0.0) profile.fitted_slope = sxy / sxx;
  }
  return profile;
}

TailProfile tail_profile(GeneratorModel model, std::size_t n, std::size_t m,
                         std::size_t s, std::size_t draws,
                         std::vector<double> lambda_grid, std::uint64_t seed,
                         const DrawOptions& options) {
  // Validate the grid before spending time on draws.
  lambda_grid = normalize_lambda_grid(std::move(lambda_grid));
  const auto deltas =
      sample_deltas(model, n, m, s, draws, seed, "tail-profile", options);
  return tail_profile_from_samples(deltas, std::move(lambda_grid));
}

namespace {

void check_bound_inputs(const BoundParams& params, std::size_t n,
                        std::size_t s) {
  if (params.c1 < 0.0 || params.c2 < 0.0 || params.c3 < 0.0) {
    throw std::invalid_argument("bound constants must be non-negative");
  }
  if (n < 2) throw std::domain_error("bound needs n >= 2 (log n > 0)");
  if (s < 2) throw std::domain_error("bound needs s >= 2 (log s > 0)");
}

}  // namespace

double theoretical_mean_bound(const BoundParams& params, std::size_t n,
                              std::size_t m, std::size_t s) {
  check_bound_inputs(params, n, s);
  if (m < 1) throw std::domain_error("bound needs m >= 1");
  const double sd = static_cast<double>(s);
  const double md = static_cast<double>(m);
  const double log_n = std::log(static_cast<double>(n));
  const double first = std::pow(sd, 1.5) / md * std::pow(log_n, 1.5);
  const double second = std::sqrt(sd / md) * std::log(sd) * log_n;
  return params.c1 * std::max(first, second);
}

double theoretical_sample_bound(const BoundParams& params, double delta,
                                std::size_t n, std::size_t s) {
  check_bound_inputs(params, n, s);
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::domain_error("sample bound needs 0 < delta < 1");
  }
  const double sd = static_cast<double>(s);
  const double log_n = std::log(static_cast<double>(n));
  const double log_s = std::log(sd);
  const double first = std::pow(sd, 1.5) * std::pow(log_n, 1.5) / delta;
  const double second = sd * log_n * log_n * log_s * log_s / (delta * delta);
  return params.c2 * std::max(first, second);
}

double theoretical_tail_variance(const BoundParams& params, std::size_t n,
                                 std::size_t m, std::size_t s) {
  check_bound_inputs(params, n, s);
  if (m < 1) throw std::domain_error("tail variance needs m >= 1");
  const double log_n = std::log(static_cast<double>(n));
  const double log_s = std::log(static_cast<double>(s));
  return params.c3 * static_cast<double>(s) / static_cast<double>(m) * log_s *
         log_s * log_n * log_n;
}

}  // namespace circsense
