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

#ifndef CIRCSENSE_RIP_HPP_
#define CIRCSENSE_RIP_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "circsense/circulant.hpp"

namespace circsense {

// Support enumerations larger than this are refused by exact_rip.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RipMethod { kExact, kMonteCarlo };
std::string_view to_string(RipMethod method);

struct RipEstimate {
  double delta = 0.0;
  std::size_t s = 0;
  RipMethod method = RipMethod::kExact;
  std::vector<std::size_t> witness_support;  // support attaining delta
  std::size_t trials = 0;                    // supports examined
};

// n choose k, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Spectral norm of a small symmetric matrix. Uses a closed form for 1x1 and
// 2x2, a dense eigensolver otherwise, and power iteration (tolerance 1e-12,
// at most 1000 steps) if the eigensolver reports failure.
double symmetric_spectral_norm(const Eigen::Ref<const Eigen::MatrixXd>& d);

// delta_s = max over |S| = s of ||A_S^T A_S - I||. Enumerates every support
// in lexicographic order; the witness is the first support reaching the
// maximum. Throws BudgetExceeded when C(n, s) > budget and
// std::invalid_argument when s == 0 or s > n.
RipEstimate exact_rip(const PartialCirculantOperator& op, std::size_t s,
                      std::uint64_t budget = kDefaultEnumerationBudget);

struct MonteCarloOptions {
  // Power-iteration steps per support, run once for the top and once for the
  // bottom of the spectrum of A_S^T A_S - I.
  std::size_t power_steps = 50;
  double power_tolerance = 1e-12;
  // Visit every support once instead of sampling `trials` supports. Turns
  // the estimator into an exhaustive (but still lower-bound) search.
  bool all_supports = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

// Lower bound on delta_s from sampled points of the s-sparse unit sphere:
// each trial draws a uniform support and a Gaussian direction on it, then
// ascends by power iteration; the result is the running maximum of
// |x^T (A^T A - I) x| over every visited x. Trial t uses its own random stream,
// so a run with more trials only adds candidates.
RipEstimate monte_carlo_rip(const PartialCirculantOperator& op, std::size_t s,
                            std::size_t trials, std::uint64_t seed,
                            const MonteCarloOptions& options = {});

// How each operator draw in a sweep is measured.
enum class RipMethodChoice {
  kAuto,        // exact when C(n, s) fits the budget, else Monte Carlo
  kExact,
  kMonteCarlo,
};
RipMethodChoice parse_rip_method(std::string_view name);

struct DrawOptions {
  OmegaMode omega_mode = OmegaMode::kUniform;
  RipMethodChoice method = RipMethodChoice::kAuto;
  std::size_t mc_trials = 200;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::size_t workers = 0;  // 0 = hardware concurrency
};

// The operator for draw `d`: its generator and Omega come from the stream
// keyed by (seed, tag, d).
PartialCirculantOperator draw_operator(GeneratorModel model, std::size_t n,
                                       std::size_t m, OmegaMode omega_mode,
                                       std::uint64_t seed, std::string_view tag,
                                       std::uint64_t d);

// delta_s for each of `draws` fresh operators, in draw order.
std::vector<double> sample_deltas(GeneratorModel model, std::size_t n,
                                  std::size_t m, std::size_t s,
                                  std::size_t draws, std::uint64_t seed,
                                  std::string_view tag,
                                  const DrawOptions& options = {});

RipMethod resolve_method(RipMethodChoice choice, std::size_t n, std::size_t s,
                         std::uint64_t budget);

struct MeanDeltaRow {
  std::size_t m = 0;
  double mean = 0.0;
  double std_error = 0.0;
  RipMethod method = RipMethod::kExact;
  std::size_t draws = 0;
};

// Empirical E[delta_s] and its standard error for every m in m_list.
std::vector<MeanDeltaRow> mean_delta(GeneratorModel model, std::size_t n,
                                     const std::vector<std::size_t>& m_list,
                                     std::size_t s, std::size_t draws,
                                     std::uint64_t seed,
                                     const DrawOptions& options = {});

struct TailProfile {
  std::vector<double> lambdas;
  std::vector<double> exceed_prob;       // P(delta_s >= mean + lambda)
  std::vector<std::size_t> exceed_count;
  std::size_t draws = 0;
  double empirical_mean = 0.0;
  // Least-squares slope of log(exceed_prob) against lambda^2 over levels with
  // at least kMinExceedances hits; NaN when fewer than two such levels exist.
  double fitted_slope = 0.0;
  std::size_t fitted_levels = 0;

  static constexpr std::size_t kMinExceedances = 5;
};

// 0, 0.01, ..., 1.
std::vector<double> default_lambda_grid();

// Clamps to [0, 1], sorts, and drops duplicates. Throws std::invalid_argument
// if the result has fewer than two levels or the input has non-finite values.
std::vector<double> normalize_lambda_grid(std::vector<double> grid);

TailProfile tail_profile_from_samples(const std::vector<double>& deltas,
                                      std::vector<double> lambda_grid);

TailProfile tail_profile(GeneratorModel model, std::size_t n, std::size_t m,
                         std::size_t s, std::size_t draws,
                         std::vector<double> lambda_grid, std::uint64_t seed,
                         const DrawOptions& options = {});

// The universal constants in the bounds below have no known values. They
// default to 1 and only fix the shape of the curves.
struct BoundParams {
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 1.0;
};

// c1 * max{ s^{3/2}/m * ln^{3/2} n, sqrt(s/m) * ln s * ln n }.
double theoretical_mean_bound(const BoundParams& params, std::size_t n,
                              std::size_t m, std::size_t s);

// c2 * max{ s^{3/2} ln^{3/2} n / delta, s ln^2 n ln^2 s / delta^2 }.
double theoretical_sample_bound(const BoundParams& params, double delta,
                                std::size_t n, std::size_t s);

// c3 * (s/m) * ln^2 s * ln^2 n.
double theoretical_tail_variance(const BoundParams& params, std::size_t n,
                                 std::size_t m, std::size_t s);

}  // namespace circsense

#endif  // CIRCSENSE_RIP_HPP_
