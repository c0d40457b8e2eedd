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

#include "circsense/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace circsense {

std::string_view to_string(GeneratorModel model) {
  switch (model) {
    case GeneratorModel::kRademacher:
      return "rademacher";
    case GeneratorModel::kGaussian:
      return "gaussian";
    case GeneratorModel::kFourierBernoulli:
      return "fourier-bernoulli";
    case GeneratorModel::kDeterministic:
      return "deterministic";
  }
  return "unknown";
}

GeneratorModel parse_generator_model(std::string_view name) {
  if (name == "rademacher") return GeneratorModel::kRademacher;
  if (name == "gaussian") return GeneratorModel::kGaussian;
  if (name == "fourier-bernoulli") return GeneratorModel::kFourierBernoulli;
  if (name == "deterministic" || name == "impulse") {
    return GeneratorModel::kDeterministic;
  }
  throw std::invalid_argument("unknown generator model '" + std::string(name) +
                              "'");
}

GeneratorSequence make_generator(GeneratorModel model, std::size_t n,
                                 std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("make_generator: n must be >= 1");
  GeneratorSequence g;
  g.model = model;
  g.seed = seed;
  g.values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  Rng rng(seed, "generator", static_cast<std::uint64_t>(model));
  switch (model) {
    case GeneratorModel::kRademacher:
      for (auto& v : g.values) v = rng.sign();
      break;
    case GeneratorModel::kGaussian:
      for (auto& v : g.values) v = rng.gaussian();
      break;
    case GeneratorModel::kFourierBernoulli: {
      Eigen::VectorXcd signs(static_cast<Eigen::Index>(n));
      for (std::size_t w = 0; w <= n / 2; ++w) {
        const double e = rng.sign();
        signs[static_cast<Eigen::Index>(w)] = e;
        signs[static_cast<Eigen::Index>((n - w) % n)] = e;
      }
      const Fft fft(n);
      g.values = fft.inverse(signs).real() * std::sqrt(static_cast<double>(n));
      break;
    }
    case GeneratorModel::kDeterministic:
      g.values[0] = 1.0;
      break;
  }
  return g;
}

GeneratorSequence generator_from_values(Eigen::VectorXd values) {
  if (values.size() == 0) {
    throw std::invalid_argument("generator_from_values: empty generator");
  }
  GeneratorSequence g;
  g.values = std::move(values);
  g.model = GeneratorModel::kDeterministic;
  return g;
}

SampleSet::SampleSet(std::vector<std::size_t> indices, std::size_t n)
    : indices_(std::move(indices)), n_(n) {
  if (indices_.empty()) throw std::invalid_argument("SampleSet: empty");
  if (indices_.size() > n_) throw std::invalid_argument("SampleSet: m > n");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] >= n_) {
      throw std::invalid_argument("SampleSet: index out of range");
    }
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw std::invalid_argument("SampleSet: indices must strictly increase");
    }
  }
}

SampleSet SampleSet::all(std::size_t n) { return consecutive(n, n); }

SampleSet SampleSet::consecutive(std::size_t n, std::size_t m) {
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  return SampleSet(std::move(idx), n);
}

SampleSet SampleSet::equispaced(std::size_t n, std::size_t m) {
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = (i * n) / m;
  return SampleSet(std::move(idx), n);
}

SampleSet SampleSet::uniform(std::size_t n, std::size_t m, Rng& rng) {
  return SampleSet(sample_without_replacement(rng, n, m), n);
}

std::string_view to_string(OmegaMode mode) {
  switch (mode) {
    case OmegaMode::kUniform:
      return "uniform";
    case OmegaMode::kConsecutive:
      return "consecutive";
    case OmegaMode::kEquispaced:
      return "equispaced";
  }
  return "unknown";
}

OmegaMode parse_omega_mode(std::string_view name) {
  if (name == "uniform") return OmegaMode::kUniform;
  if (name == "consecutive") return OmegaMode::kConsecutive;
  if (name == "equispaced") return OmegaMode::kEquispaced;
  throw std::invalid_argument("unknown omega mode '" + std::string(name) + "'");
}

SampleSet make_samples(OmegaMode mode, std::size_t n, std::size_t m, Rng& rng) {
  switch (mode) {
    case OmegaMode::kUniform:
      return SampleSet::uniform(n, m, rng);
    case OmegaMode::kConsecutive:
      return SampleSet::consecutive(n, m);
    case OmegaMode::kEquispaced:
      return SampleSet::equispaced(n, m);
  }
  throw std::invalid_argument("make_samples: bad mode");
}

Eigen::VectorXd cyclic_shift(const Eigen::Ref<const Eigen::VectorXd>& x,
                             std::ptrdiff_t k) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  Eigen::VectorXd out(x.size());
  if (n == 0) return out;
  const std::ptrdiff_t shift = ((k % n) + n) % n;
  for (std::ptrdiff_t l = 0; l < n; ++l) out[(l + shift) % n] = x[l];
  return out;
}

Eigen::VectorXd circulant_apply(const GeneratorSequence& generator,
                                const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != generator.values.size()) {
    throw std::invalid_argument("circulant_apply: dimension mismatch");
  }
  return detail::CirculantKernel(generator.values).convolve(x);
}

namespace detail {

CirculantKernel::CirculantKernel(const Eigen::Ref<const Eigen::VectorXd>& phi)
    : fft_(static_cast<std::size_t>(phi.size())),
      spectrum_(fft_.forward(phi.cast<std::complex<double>>())),
      peak_(phi.cwiseAbs().maxCoeff()) {}

Eigen::VectorXd CirculantKernel::real_part_checked(const Eigen::VectorXcd& z,
                                                   double reference_norm) const {
  // Imaginary residue above this level means a transform defect, not rounding.
  const double tol = 1e-10 * reference_norm * std::max(1.0, peak_);
  const double residue = z.imag().cwiseAbs().maxCoeff();
  if (residue > tol) {
    throw std::runtime_error("circulant transform left imaginary residue " +
                             std::to_string(residue));
  }
  return z.real();
}

Eigen::VectorXd CirculantKernel::convolve(
    const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (static_cast<std::size_t>(x.size()) != size()) {
    throw std::invalid_argument("CirculantKernel: dimension mismatch");
  }
  Eigen::VectorXcd xh = fft_.forward(x.cast<std::complex<double>>());
  xh.array() *= spectrum_.array();
  return real_part_checked(fft_.inverse(xh), x.norm());
}

Eigen::VectorXd CirculantKernel::correlate(
    const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (static_cast<std::size_t>(x.size()) != size()) {
    throw std::invalid_argument("CirculantKernel: dimension mismatch");
  }
  Eigen::VectorXcd xh = fft_.forward(x.cast<std::complex<double>>());
  xh.array() *= spectrum_.array().conjugate();
  return real_part_checked(fft_.inverse(xh), x.norm());
}

}  // namespace detail

PartialCirculantOperator::PartialCirculantOperator(GeneratorSequence generator,
                                                   SampleSet samples)
    : generator_(std::move(generator)),
      samples_(std::move(samples)),
      scale_(1.0 / std::sqrt(static_cast<double>(samples_.m()))) {
  if (generator_.size() != samples_.n()) {
    throw std::invalid_argument(
        "PartialCirculantOperator: generator length differs from n");
  }
  kernel_ = std::make_shared<const detail::CirculantKernel>(generator_.values);
}

Eigen::VectorXd PartialCirculantOperator::apply(
    const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (static_cast<std::size_t>(x.size()) != n()) {
    throw std::invalid_argument("PartialCirculantOperator::apply: bad length");
  }
  const Eigen::VectorXd full = kernel_->convolve(x);
  Eigen::VectorXd out(rows());
  for (std::size_t i = 0; i < m(); ++i) {
    out[static_cast<Eigen::Index>(i)] =
        scale_ * full[static_cast<Eigen::Index>(samples_[i])];
  }
  return out;
}

Eigen::VectorXd PartialCirculantOperator::adjoint(
    const Eigen::Ref<const Eigen::VectorXd>& y) const {
  if (static_cast<std::size_t>(y.size()) != m()) {
    throw std::invalid_argument("PartialCirculantOperator::adjoint: bad length");
  }
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(cols());
  for (std::size_t i = 0; i < m(); ++i) {
    padded[static_cast<Eigen::Index>(samples_[i])] =
        y[static_cast<Eigen::Index>(i)];
  }
  return scale_ * kernel_->correlate(padded);
}

Eigen::MatrixXd PartialCirculantOperator::sampled_rows(
    std::size_t dense_limit) const {
  if (n() > dense_limit) {
    throw std::length_error("materialize: n exceeds the dense limit");
  }
  const auto nn = static_cast<std::ptrdiff_t>(n());
  Eigen::MatrixXd rows_out(rows(), cols());
  for (std::size_t i = 0; i < m(); ++i) {
    const auto row = static_cast<std::ptrdiff_t>(samples_[i]);
    for (std::ptrdiff_t j = 0; j < nn; ++j) {
      rows_out(static_cast<Eigen::Index>(i), j) =
          generator_.values[((row - j) % nn + nn) % nn];
    }
  }
  return rows_out;
}

Eigen::MatrixXd PartialCirculantOperator::materialize(
    std::size_t dense_limit) const {
  return scale_ * sampled_rows(dense_limit);
}

ToeplitzOperator::ToeplitzOperator(
    const Eigen::Ref<const Eigen::VectorXd>& diagonals,
    std::vector<std::size_t> row_indices, std::size_t n)
    : n_(n), rows_(std::move(row_indices)) {
  if (n == 0) throw std::invalid_argument("ToeplitzOperator: n must be >= 1");
  if (static_cast<std::size_t>(diagonals.size()) < 2 * n - 1) {
    throw std::invalid_argument("ToeplitzOperator: need 2n-1 diagonals");
  }
  for (std::size_t r : rows_) {
    if (r >= n) throw std::invalid_argument("ToeplitzOperator: row out of range");
  }
  // First column of the 2n circulant: t_0..t_{n-1}, 0, t_{-(n-1)}..t_{-1}.
  Eigen::VectorXd column = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * n));
  for (std::size_t k = 0; k < n; ++k) {
    column[static_cast<Eigen::Index>(k)] = diagonals[static_cast<Eigen::Index>(k)];
  }
  for (std::size_t j = 1; j < n; ++j) {
    column[static_cast<Eigen::Index>(2 * n - j)] =
        diagonals[static_cast<Eigen::Index>(2 * n - 1 - j)];
  }
  kernel_ = std::make_shared<const detail::CirculantKernel>(column);
}

Eigen::VectorXd ToeplitzOperator::apply(
    const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (static_cast<std::size_t>(x.size()) != n_) {
    throw std::invalid_argument("ToeplitzOperator::apply: bad length");
  }
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * n_));
  padded.head(x.size()) = x;
  const Eigen::VectorXd full = kernel_->convolve(padded);
  Eigen::VectorXd out(rows());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = full[static_cast<Eigen::Index>(rows_[i])];
  }
  return out;
}

Eigen::VectorXd ToeplitzOperator::adjoint(
    const Eigen::Ref<const Eigen::VectorXd>& y) const {
  if (y.size() != rows()) {
    throw std::invalid_argument("ToeplitzOperator::adjoint: bad length");
  }
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * n_));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    padded[static_cast<Eigen::Index>(rows_[i])] += y[static_cast<Eigen::Index>(i)];
  }
  return kernel_->correlate(padded).head(static_cast<Eigen::Index>(n_));
}

ToeplitzOperator toeplitz_operator(const GeneratorSequence& generator,
                                   std::vector<std::size_t> row_indices,
                                   std::size_t n) {
  if (n == 0 || generator.size() < 2 * n - 1) {
    throw std::invalid_argument(
        "toeplitz_operator: generator must have length >= 2n-1");
  }
  return ToeplitzOperator(generator.values.head(static_cast<Eigen::Index>(2 * n - 1)),
                          std::move(row_indices), n);
}

}  // namespace circsense
