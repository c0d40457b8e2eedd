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

#include "circsense/recovery.hpp"

#include "circsense/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circsense {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kL1:
      return "l1";
    case Algorithm::kCoSaMP:
      return "cosamp";
    case Algorithm::kIht:
      return "iht";
    case Algorithm::kHtp:
      return "htp";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "l1" || name == "bp" || name == "basis-pursuit") return Algorithm::kL1;
  if (name == "cosamp") return Algorithm::kCoSaMP;
  if (name == "iht") return Algorithm::kIht;
  if (name == "htp") return Algorithm::kHtp;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

AlgorithmConstants algorithm_constants(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kL1:
      return {2.0, 3.0 / (4.0 + std::sqrt(6.0))};
    case Algorithm::kCoSaMP:
      return {4.0, std::sqrt(2.0 / (5.0 + std::sqrt(73.0)))};
    case Algorithm::kIht:
      return {3.0, 0.5};
    case Algorithm::kHtp:
      return {3.0, 1.0 / std::sqrt(3.0)};
  }
  throw std::invalid_argument("algorithm_constants: bad algorithm");
}

std::string_view to_string(Certification c) {
  switch (c) {
    case Certification::kCertified:
      return "certified";
    case Certification::kNotCertified:
      return "not-certified";
    case Certification::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::vector<std::size_t> largest_support(const Eigen::Ref<const Eigen::VectorXd>& v,
                                         std::size_t s) {
  const auto n = static_cast<std::size_t>(v.size());
  s = std::min(s, n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(s),
                    order.end(), [&](std::size_t a, std::size_t b) {
                      const double ma = std::abs(v[static_cast<Eigen::Index>(a)]);
                      const double mb = std::abs(v[static_cast<Eigen::Index>(b)]);
                      return ma > mb || (ma == mb && a < b);
                    });
  order.resize(s);
  std::sort(order.begin(), order.end());
  return order;
}

Eigen::VectorXd hard_threshold(const Eigen::Ref<const Eigen::VectorXd>& v,
                               std::size_t s) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (std::size_t j : largest_support(v, s)) {
    out[static_cast<Eigen::Index>(j)] = v[static_cast<Eigen::Index>(j)];
  }
  return out;
}

namespace {

std::vector<std::size_t> nonzeros(const Eigen::VectorXd& x) {
  std::vector<std::size_t> idx;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] != 0.0) idx.push_back(static_cast<std::size_t>(i));
  }
  return idx;
}

Eigen::VectorXd embed(const Eigen::VectorXd& coefficients,
                      const std::vector<std::size_t>& support, Eigen::Index n) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (std::size_t c = 0; c < support.size(); ++c) {
    x[static_cast<Eigen::Index>(support[c])] = coefficients[static_cast<Eigen::Index>(c)];
  }
  return x;
}

Eigen::VectorXd restrict_to(const Eigen::VectorXd& v,
                            const std::vector<std::size_t>& support) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(support.size()));
  for (std::size_t c = 0; c < support.size(); ++c) {
    out[static_cast<Eigen::Index>(c)] = v[static_cast<Eigen::Index>(support[c])];
  }
  return out;
}

// Non-finite entries, or entries so large that norms overflow.
bool blew_up(const Eigen::VectorXd& x) {
  return !x.allFinite() || !std::isfinite(x.norm());
}

void validate(const RecoveryProblem& problem) {
  if (problem.y.size() != problem.op.rows()) {
    throw std::invalid_argument("recovery: measurement length differs from rows");
  }
  if (problem.s == 0 || problem.s > static_cast<std::size_t>(problem.op.cols())) {
    throw std::invalid_argument("recovery: need 1 <= s <= n");
  }
  if (!(problem.noise_level >= 0.0)) {
    throw std::invalid_argument("recovery: noise level must be >= 0");
  }
}

struct CgOutcome {
  Eigen::VectorXd c;
  bool converged = false;
  bool breakdown = false;
  std::size_t iterations = 0;
  double curvature_scale = 0.0;
};

// CG on (A_S^T A_S + ridge I) c = A_S^T y.
CgOutcome normal_equations_cg(const LinearOperator& op, const Eigen::VectorXd& y,
                              const std::vector<std::size_t>& support,
                              double ridge, std::size_t cap) {
  const auto k = static_cast<Eigen::Index>(support.size());
  CgOutcome out;
  out.c = Eigen::VectorXd::Zero(k);
  const Eigen::VectorXd b = restrict_to(op.adjoint(y), support);
  const double b_norm = b.norm();
  if (b_norm == 0.0) {
    out.converged = true;
    return out;
  }
  Eigen::VectorXd r = b;
  Eigen::VectorXd p = r;
  double rs = r.squaredNorm();
  for (std::size_t it = 0; it < cap; ++it) {
    Eigen::VectorXd np =
        restrict_to(op.adjoint(op.apply(embed(p, support, op.cols()))), support);
    np += ridge * p;
    const double pnp = p.dot(np);
    const double rayleigh = pnp / p.squaredNorm();
    if (it == 0) out.curvature_scale = rayleigh;
    if (!(rayleigh > 1e-12 * out.curvature_scale)) {
      out.breakdown = true;
      break;
    }
    const double alpha = rs / pnp;
    out.c += alpha * p;
    r -= alpha * np;
    const double rs_next = r.squaredNorm();
    out.iterations = it + 1;
    if (std::sqrt(rs_next) <= 1e-12 * b_norm) {
      out.converged = true;
      break;
    }
    p = r + (rs_next / rs) * p;
    rs = rs_next;
  }
  return out;
}

}  // namespace

LeastSquaresResult least_squares_on_support(const LinearOperator& op,
                                            const Eigen::Ref<const Eigen::VectorXd>& y,
                                            const std::vector<std::size_t>& support) {
  LeastSquaresResult result;
  if (support.empty()) return result;
  const Eigen::VectorXd yv = y;
  const std::size_t cap = 4 * support.size();
  CgOutcome cg = normal_equations_cg(op, yv, support, 0.0, cap);
  if (!cg.converged) {
    const double ridge = 1e-10 * std::max(cg.curvature_scale, 1e-300);
    const CgOutcome reg = normal_equations_cg(op, yv, support, ridge, cap);
    // Keep whichever iterate fits the data better.
    const double r0 = (op.apply(embed(cg.c, support, op.cols())) - yv).norm();
    const double r1 = (op.apply(embed(reg.c, support, op.cols())) - yv).norm();
    if (r1 <= r0 || !std::isfinite(r0)) cg = reg;
    result.regularized = true;
  }
  result.coefficients = std::move(cg.c);
  result.iterations = cg.iterations;
  return result;
}

double estimate_squared_norm(const LinearOperator& op, std::size_t iterations) {
  Rng rng(0x6e6f726dULL);
  Eigen::VectorXd v(op.cols());
  for (auto& e : v) e = rng.gaussian();
  v /= v.norm();
  double estimate = 0.0;
  for (std::size_t it = 0; it < iterations; ++it) {
    Eigen::VectorXd w = op.adjoint(op.apply(v));
    estimate = w.norm();
    if (estimate == 0.0) break;
    v = w / estimate;
  }
  return estimate;
}

namespace {

void finish(const RecoveryProblem& problem, RecoveryReport& report) {
  report.residual = (problem.y - problem.op.apply(report.xhat)).norm();
  report.support = nonzeros(report.xhat);
}

}  // namespace

RecoveryReport iht(const RecoveryProblem& problem, const GreedyOptions& options) {
  validate(problem);
  const LinearOperator& op = problem.op;
  RecoveryReport report;
  report.algorithm = Algorithm::kIht;
  double fixed_step = 1.0;
  if (options.iht_step == IhtStep::kOperatorNorm) {
    const double norm_sq = estimate_squared_norm(op, 20);
    if (norm_sq > 1.0) fixed_step = 1.0 / norm_sq;
  }

  Eigen::VectorXd x = Eigen::VectorXd::Zero(op.cols());
  std::vector<std::size_t> support;
  for (std::size_t t = 1; t <= options.max_iters; ++t) {
    const Eigen::VectorXd gradient = op.adjoint(problem.y - op.apply(x));
    if (t == 1) support = largest_support(gradient, problem.s);
    Eigen::VectorXd next;
    if (options.iht_step == IhtStep::kNormalized) {
      Eigen::VectorXd g_s = Eigen::VectorXd::Zero(op.cols());
      for (std::size_t j : support) {
        g_s[static_cast<Eigen::Index>(j)] = gradient[static_cast<Eigen::Index>(j)];
      }
      const double g_norm = g_s.squaredNorm();
      const double a_norm = op.apply(g_s).squaredNorm();
      double step = (g_norm > 0.0 && a_norm > 0.0) ? g_norm / a_norm : 1.0;
      next = hard_threshold(x + step * gradient, problem.s);
      for (int shrink = 0; shrink < 100 && nonzeros(next) != support; ++shrink) {
        // Accept a support change only when the step is short enough to
        // decrease the residual.
        const Eigen::VectorXd d = next - x;
        const double ad = op.apply(d).squaredNorm();
        const double limit = ad > 0.0 ? 0.99 * d.squaredNorm() / ad : step;
        if (step <= limit) break;
        step /= 1.1 * 0.99;
        next = hard_threshold(x + step * gradient, problem.s);
      }
    } else {
      next = hard_threshold(x + fixed_step * gradient, problem.s);
    }
    report.iterations = t;
    if (blew_up(next)) {
      report.diverged = true;
      break;
    }
    auto next_support = nonzeros(next);
    if (!next_support.empty()) support = next_support;
    report.support_history.push_back(std::move(next_support));
    const double change = (next - x).norm();
    const double size = x.norm();
    x = std::move(next);
    if (change <= options.tol * size) {
      report.converged = true;
      break;
    }
  }
  report.xhat = std::move(x);
  finish(problem, report);
  return report;
}

RecoveryReport htp(const RecoveryProblem& problem, const GreedyOptions& options) {
  validate(problem);
  const LinearOperator& op = problem.op;
  RecoveryReport report;
  report.algorithm = Algorithm::kHtp;

  Eigen::VectorXd x = Eigen::VectorXd::Zero(op.cols());
  std::vector<std::size_t> previous;
  for (std::size_t t = 1; t <= options.max_iters; ++t) {
    const Eigen::VectorXd gradient = op.adjoint(problem.y - op.apply(x));
    const auto support = largest_support(x + gradient, problem.s);
    const auto ls = least_squares_on_support(op, problem.y, support);
    report.regularized = report.regularized || ls.regularized;
    Eigen::VectorXd next = embed(ls.coefficients, support, op.cols());
    report.iterations = t;
    if (blew_up(next)) {
      report.diverged = true;
      break;
    }
    report.support_history.push_back(support);
    const double change = (next - x).norm();
    const double size = x.norm();
    x = std::move(next);
    if (support == previous || change <= options.tol * size) {
      report.converged = true;
      break;
    }
    previous = support;
  }
  report.xhat = std::move(x);
  finish(problem, report);
  return report;
}

RecoveryReport cosamp(const RecoveryProblem& problem, const GreedyOptions& options) {
  validate(problem);
  const LinearOperator& op = problem.op;
  RecoveryReport report;
  report.algorithm = Algorithm::kCoSaMP;
  const double y_norm = problem.y.norm();

  Eigen::VectorXd x = Eigen::VectorXd::Zero(op.cols());
  Eigen::VectorXd residual = problem.y;
  for (std::size_t t = 1; t <= options.max_iters; ++t) {
    const Eigen::VectorXd proxy = op.adjoint(residual);
    std::vector<std::size_t> merged = largest_support(proxy, 2 * problem.s);
    for (std::size_t j : nonzeros(x)) merged.push_back(j);
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    const auto ls = least_squares_on_support(op, problem.y, merged);
    report.regularized = report.regularized || ls.regularized;
    Eigen::VectorXd next =
        hard_threshold(embed(ls.coefficients, merged, op.cols()), problem.s);
    report.iterations = t;
    if (blew_up(next)) {
      report.diverged = true;
      break;
    }
    report.support_history.push_back(nonzeros(next));
    const double change = (next - x).norm();
    const double size = x.norm();
    x = std::move(next);
    residual = problem.y - op.apply(x);
    if (residual.norm() <= options.tol * y_norm || change <= options.tol * size) {
      report.converged = true;
      break;
    }
  }
  report.xhat = std::move(x);
  finish(problem, report);
  return report;
}

namespace {

Eigen::VectorXd soft_threshold(const Eigen::VectorXd& v, double level) {
  return v.unaryExpr([level](double e) {
    const double mag = std::abs(e) - level;
    return mag > 0.0 ? std::copysign(mag, e) : 0.0;
  });
}

// Euclidean projection onto {z : ||A z - y|| <= tau}, using only A and A^T.
class FeasibleSetProjector {
 public:
  FeasibleSetProjector(const LinearOperator& op, const Eigen::VectorXd& y,
                       double tau)
      : op_(op), y_(y), tau_(tau), dual_(Eigen::VectorXd::Zero(op.rows())) {}

  Eigen::VectorXd operator()(const Eigen::VectorXd& v) {
    return tau_ == 0.0 ? onto_affine(v) : onto_ball(v);
  }

 private:
  // v - A^T (A A^T)^{-1} (A v - y), with the dual vector warm-started.
  Eigen::VectorXd onto_affine(const Eigen::VectorXd& v) {
    const Eigen::VectorXd rhs = op_.apply(v) - y_;
    const double target = 1e-13 * std::max(1.0, y_.norm());
    Eigen::VectorXd r = rhs - op_.apply(op_.adjoint(dual_));
    Eigen::VectorXd p = r;
    double rs = r.squaredNorm();
    const std::size_t cap = 10 * static_cast<std::size_t>(op_.rows()) + 50;
    for (std::size_t it = 0; it < cap && std::sqrt(rs) > target; ++it) {
      const Eigen::VectorXd ap = op_.apply(op_.adjoint(p));
      const double pap = p.dot(ap);
      if (!(pap > 0.0)) break;
      const double alpha = rs / pap;
      dual_ += alpha * p;
      r -= alpha * ap;
      const double rs_next = r.squaredNorm();
      p = r + (rs_next / rs) * p;
      rs = rs_next;
    }
    return v - op_.adjoint(dual_);
  }

  // (I + mu A^T A) z = v + mu A^T y, solved by CG from `start`.
  Eigen::VectorXd ridge_solve(const Eigen::VectorXd& v, double mu,
                              const Eigen::VectorXd& start) const {
    const Eigen::VectorXd b = v + mu * op_.adjoint(y_);
    auto normal = [&](const Eigen::VectorXd& z) {
      return Eigen::VectorXd(z + mu * op_.adjoint(op_.apply(z)));
    };
    Eigen::VectorXd z = start;
    Eigen::VectorXd r = b - normal(z);
    Eigen::VectorXd p = r;
    double rs = r.squaredNorm();
    const double target = 1e-13 * b.norm();
    for (std::size_t it = 0; it < 500 && std::sqrt(rs) > target; ++it) {
      const Eigen::VectorXd np = normal(p);
      const double alpha = rs / p.dot(np);
      z += alpha * p;
      r -= alpha * np;
      const double rs_next = r.squaredNorm();
      p = r + (rs_next / rs) * p;
      rs = rs_next;
    }
    return z;
  }

  // Outside the set the projection is z(mu) for the mu > 0 where
  // ||A z(mu) - y|| = tau; the misfit decreases in mu.
  Eigen::VectorXd onto_ball(const Eigen::VectorXd& v) {
    if ((op_.apply(v) - y_).norm() <= tau_) return v;
    auto misfit = [&](const Eigen::VectorXd& z) { return (op_.apply(z) - y_).norm(); };
    double lo = 0.0;
    double g_lo = misfit(v);
    double hi = mu_hint_;
    Eigen::VectorXd z_hi = ridge_solve(v, hi, v);
    double g_hi = misfit(z_hi);
    for (int grow = 0; grow < 80 && g_hi > tau_; ++grow) {
      lo = hi;
      g_lo = g_hi;
      hi *= 4.0;
      z_hi = ridge_solve(v, hi, z_hi);
      g_hi = misfit(z_hi);
    }
    // Illinois regula falsi on 1/g - 1/tau, which is close to linear in mu.
    double h_lo = 1.0 / g_lo - 1.0 / tau_;
    double h_hi = 1.0 / g_hi - 1.0 / tau_;
    int side = 0;
    for (int it = 0; it < 60 && g_hi < tau_ * (1.0 - 1e-10); ++it) {
      const double mu = hi - h_hi * (hi - lo) / (h_hi - h_lo);
      const Eigen::VectorXd z = ridge_solve(v, mu, z_hi);
      const double g = misfit(z);
      const double h = 1.0 / g - 1.0 / tau_;
      if (g <= tau_) {
        hi = mu;
        z_hi = z;
        g_hi = g;
        h_hi = h;
        if (side == 1) h_lo /= 2.0;
        side = 1;
      } else {
        lo = mu;
        h_lo = h;
        if (side == -1) h_hi /= 2.0;
        side = -1;
      }
      if (hi - lo <= 1e-14 * hi) break;
    }
    mu_hint_ = std::max(hi / 16.0, 1e-12);
    return z_hi;
  }

  const LinearOperator& op_;
  const Eigen::VectorXd& y_;
  double tau_;
  Eigen::VectorXd dual_;
  double mu_hint_ = 1.0;
};

}  // namespace

RecoveryReport basis_pursuit(const RecoveryProblem& problem,
                             const BasisPursuitOptions& options) {
  validate(problem);
  const LinearOperator& op = problem.op;
  const double tau = problem.noise_level;
  RecoveryReport report;
  report.algorithm = Algorithm::kL1;

  // ADMM on min ||w||_1 + indicator_C(z) subject to z = w, where C is the
  // feasible set. z is always feasible; w carries the sparsity.
  FeasibleSetProjector project(op, problem.y, tau);
  Eigen::VectorXd z = project(Eigen::VectorXd::Zero(op.cols()));
  Eigen::VectorXd w = z;
  Eigen::VectorXd u = Eigen::VectorXd::Zero(op.cols());
  const double scale = z.cwiseAbs().maxCoeff();
  double rho = scale > 0.0 ? 10.0 / scale : 1.0;

  // rho adapts only early on; a frozen rho keeps the convergence theory.
  constexpr std::size_t kAdaptiveSteps = 500;
  // The reported iterate is the best feasible z seen so far; the raw ADMM
  // sequence is feasible too but its l1 norm oscillates on the way in.
  Eigen::VectorXd best = z;
  double best_objective = z.lpNorm<1>();
  for (std::size_t k = 1; k <= options.max_iters; ++k) {
    z = project(w - u);
    const Eigen::VectorXd w_prev = w;
    w = soft_threshold(z + u, 1.0 / rho);
    u += z - w;
    report.iterations = k;
    if (blew_up(z) || blew_up(w)) {
      report.diverged = true;
      break;
    }
    const double objective = z.lpNorm<1>();
    if (objective <= best_objective) {
      best_objective = objective;
      best = z;
    }
    report.objective_trace.push_back(best_objective);

    const double primal = (z - w).norm();
    const double dual = rho * (w - w_prev).norm();
    if (k % 10 == 0 && k <= kAdaptiveSteps) {
      // Residual balancing; u is the scaled dual so it rescales with rho.
      if (primal > 10.0 * dual) {
        rho *= 2.0;
        u /= 2.0;
      } else if (dual > 10.0 * primal) {
        rho /= 2.0;
        u *= 2.0;
      }
    }
    if (k > options.window) {
      const double past = report.objective_trace[k - 1 - options.window];
      const double tol = options.tol * std::max(1.0, best_objective);
      if (past - best_objective < tol &&
          primal <= options.tol * std::max(1.0, z.norm())) {
        report.converged = true;
        break;
      }
    }
  }

  // Debias on the numerically nonzero support of the feasible iterate.
  Eigen::VectorXd xhat = Eigen::VectorXd::Zero(op.cols());
  const double peak = best.cwiseAbs().maxCoeff();
  std::vector<std::size_t> support;
  for (Eigen::Index i = 0; i < best.size(); ++i) {
    if (std::abs(best[i]) > 1e-6 * peak) support.push_back(static_cast<std::size_t>(i));
  }
  if (!support.empty() && !report.diverged) {
    const auto ls = least_squares_on_support(op, problem.y, support);
    report.regularized = ls.regularized;
    xhat = embed(ls.coefficients, support, op.cols());
  }
  const double feasibility =
      std::max(options.tol * std::max(1.0, problem.y.norm()), tau);
  const double debiased_misfit = (op.apply(xhat) - problem.y).norm();
  if (debiased_misfit > feasibility &&
      debiased_misfit > (op.apply(best) - problem.y).norm()) {
    xhat = best;  // keep the feasible iterate if the debias made things worse
  }
  report.xhat = std::move(xhat);
  finish(problem, report);
  if (report.residual > feasibility) {
    report.converged = false;
  }
  return report;
}

RecoveryReport recover(Algorithm algorithm, const RecoveryProblem& problem) {
  switch (algorithm) {
    case Algorithm::kL1:
      return basis_pursuit(problem);
    case Algorithm::kCoSaMP:
      return cosamp(problem);
    case Algorithm::kIht:
      return iht(problem);
    case Algorithm::kHtp:
      return htp(problem);
  }
  throw std::invalid_argument("recover: bad algorithm");
}

double best_s_term_error(const Eigen::Ref<const Eigen::VectorXd>& x, std::size_t s) {
  std::vector<double> mags(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    mags[static_cast<std::size_t>(i)] = std::abs(x[i]);
  }
  std::sort(mags.begin(), mags.end(), std::greater<>());
  double tail = 0.0;
  for (std::size_t i = s; i < mags.size(); ++i) tail += mags[i];
  return tail;
}

double stability_ratio(const Eigen::Ref<const Eigen::VectorXd>& x0,
                       const Eigen::Ref<const Eigen::VectorXd>& xhat,
                       std::size_t s, double tau) {
  if (x0.size() != xhat.size()) {
    throw std::invalid_argument("stability_ratio: length mismatch");
  }
  if (s == 0) throw std::invalid_argument("stability_ratio: s must be >= 1");
  const double numerator = (x0 - xhat).norm();
  const double denominator =
      best_s_term_error(x0, s) / std::sqrt(static_cast<double>(s)) + tau;
  if (denominator == 0.0) {
    return numerator <= 1e-10 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return numerator / denominator;
}

CertificateCheck rip_certificate_check(const PartialCirculantOperator& op,
                                       Algorithm algorithm, std::size_t s,
                                       std::uint64_t budget) {
  const AlgorithmConstants constants = algorithm_constants(algorithm);
  CertificateCheck check;
  check.kappa = constants.kappa;
  check.delta_star = constants.delta_star;
  check.delta_measured = std::numeric_limits<double>::quiet_NaN();
  const auto order = static_cast<std::size_t>(constants.kappa) * s;
  if (s == 0 || order > op.n() || binomial(op.n(), order) > budget) {
    check.certified = Certification::kUnknown;
    return check;
  }
  check.delta_measured = exact_rip(op, order, budget).delta;
  check.certified = check.delta_measured < check.delta_star
                        ? Certification::kCertified
                        : Certification::kNotCertified;
  return check;
}

}  // namespace circsense
