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

#ifndef CIRCSENSE_RECOVERY_HPP_
#define CIRCSENSE_RECOVERY_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "circsense/circulant.hpp"
#include "circsense/linear_operator.hpp"
#include "circsense/rip.hpp"

namespace circsense {

enum class Algorithm { kL1, kCoSaMP, kIht, kHtp };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);
inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kL1, Algorithm::kCoSaMP,
                                               Algorithm::kIht, Algorithm::kHtp};

// Recovery is guaranteed for every s-sparse signal once delta_{kappa s} <
// delta_star. Values are the best published ones for each algorithm.
struct AlgorithmConstants {
  double kappa;
  double delta_star;
};
AlgorithmConstants algorithm_constants(Algorithm algorithm);

// y = A x + e with ||e||_2 <= noise_level. The operator must outlive the
// problem.
struct RecoveryProblem {
  const LinearOperator& op;
  Eigen::VectorXd y;
  std::size_t s;
  double noise_level = 0.0;
};

struct RecoveryReport {
  Algorithm algorithm = Algorithm::kIht;
  Eigen::VectorXd xhat;
  std::size_t iterations = 0;
  double residual = 0.0;  // ||y - A xhat||_2
  std::vector<std::size_t> support;  // nonzeros of xhat, ascending
  bool converged = false;
  bool diverged = false;     // a non-finite value appeared; xhat is the last
                             // finite iterate
  bool regularized = false;  // a least-squares subproblem was rank deficient
  std::vector<std::vector<std::size_t>> support_history;
  // Basis pursuit: l1 norm of the incumbent (best feasible) iterate after
  // each step. Non-increasing from the first entry on.
  std::vector<double> objective_trace;
};

// Gradient step used by IHT.
//  kNormalized:   mu = ||g_S||^2 / ||A g_S||^2 on the current support, shrunk
//                 when the support changes and the step would not descend.
//  kUnit:         mu = 1.
//  kOperatorNorm: mu = 1 / ||A||^2 when the 20-step power estimate exceeds 1.
enum class IhtStep { kNormalized, kUnit, kOperatorNorm };

struct GreedyOptions {
  std::size_t max_iters = 500;
  double tol = 1e-8;
  IhtStep iht_step = IhtStep::kNormalized;
};

struct BasisPursuitOptions {
  std::size_t max_iters = 50'000;
  double tol = 1e-8;
  std::size_t window = 50;  // objective change is measured over this many steps
};

// x <- H_s(x + mu A^T (y - A x)).
RecoveryReport iht(const RecoveryProblem& problem, const GreedyOptions& options = {});
// Hard-threshold a unit gradient step, then least squares on that support.
RecoveryReport htp(const RecoveryProblem& problem, const GreedyOptions& options = {});
// Merge the 2s largest proxy entries with the current support, least squares,
// prune to s.
RecoveryReport cosamp(const RecoveryProblem& problem,
                      const GreedyOptions& options = {});
// min ||z||_1 subject to ||A z - y||_2 <= noise_level, then a least-squares
// debias on the entries above 1e-6 ||z||_inf.
RecoveryReport basis_pursuit(const RecoveryProblem& problem,
                             const BasisPursuitOptions& options = {});

RecoveryReport recover(Algorithm algorithm, const RecoveryProblem& problem);

// Indices of the s largest magnitudes; ties keep the lower index.
std::vector<std::size_t> largest_support(const Eigen::Ref<const Eigen::VectorXd>& v,
                                         std::size_t s);
Eigen::VectorXd hard_threshold(const Eigen::Ref<const Eigen::VectorXd>& v,
                               std::size_t s);

struct LeastSquaresResult {
  Eigen::VectorXd coefficients;  // one per support index
  bool regularized = false;
  std::size_t iterations = 0;
};

// min ||A_S c - y|| by conjugate gradients on the normal equations (relative
// tolerance 1e-12, at most 4|S| iterations). A stalled or breaking-down solve
// is redone with a small ridge term and flagged.
LeastSquaresResult least_squares_on_support(const LinearOperator& op,
                                            const Eigen::Ref<const Eigen::VectorXd>& y,
                                            const std::vector<std::size_t>& support);

// ||A||^2 estimated with `iterations` power steps on A^T A from a fixed start.
double estimate_squared_norm(const LinearOperator& op, std::size_t iterations = 20);

// sigma_s(x)_1: l1 norm of everything but the s largest magnitudes.
double best_s_term_error(const Eigen::Ref<const Eigen::VectorXd>& x, std::size_t s);

// ||x0 - xhat|| / (sigma_s(x0)_1 / sqrt(s) + tau). A zero denominator gives 0
// when the numerator is <= 1e-10 and +infinity otherwise.
double stability_ratio(const Eigen::Ref<const Eigen::VectorXd>& x0,
                       const Eigen::Ref<const Eigen::VectorXd>& xhat,
                       std::size_t s, double tau);

enum class Certification { kCertified, kNotCertified, kUnknown };
std::string_view to_string(Certification c);

struct CertificateCheck {
  double delta_measured = 0.0;  // exact delta_{kappa s}; NaN when unknown
  double kappa = 0.0;
  double delta_star = 0.0;
  Certification certified = Certification::kUnknown;
};

// Computes exact delta_{kappa s} and compares it with the algorithm's
// delta_star. Unknown when kappa s > n or the enumeration exceeds the budget.
CertificateCheck rip_certificate_check(const PartialCirculantOperator& op,
                                       Algorithm algorithm, std::size_t s,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace circsense

#endif  // CIRCSENSE_RECOVERY_HPP_
