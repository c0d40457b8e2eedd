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

#ifndef CIRCSENSE_CIRCULANT_HPP_
#define CIRCSENSE_CIRCULANT_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "circsense/fft.hpp"
#include "circsense/linear_operator.hpp"
#include "circsense/rng.hpp"

namespace circsense {

// Largest dimension for which dense n x n (or m x n) objects are built.
inline constexpr std::size_t kDefaultDenseLimit = 4096;

enum class GeneratorModel {
  kRademacher,       // i.i.d. +-1
  kGaussian,         // i.i.d. N(0, 1)
  kFourierBernoulli, // sqrt(n) * inverse DFT of a sign vector
  kDeterministic,    // caller-supplied values; the unit impulse by default
};

std::string_view to_string(GeneratorModel model);
GeneratorModel parse_generator_model(std::string_view name);

// The pulse phi that generates the circulant matrix.
struct GeneratorSequence {
  Eigen::VectorXd values;
  GeneratorModel model = GeneratorModel::kDeterministic;
  std::uint64_t seed = 0;

  std::size_t size() const { return static_cast<std::size_t>(values.size()); }
};

// Draws a generator of length n. The same (model, n, seed) always gives
// bitwise identical values.
//
// kFourierBernoulli draws a sign vector with e[w] == e[n - w] so that the
// pulse sqrt(n) F^{-1} e is real; its DFT then has modulus sqrt(n) at every
// frequency. kDeterministic returns the unit impulse e_0.
GeneratorSequence make_generator(GeneratorModel model, std::size_t n,
                                 std::uint64_t seed);

// Wraps explicit values as a deterministic generator.
GeneratorSequence generator_from_values(Eigen::VectorXd values);

// Ordered set of retained output samples, a subset of {0, ..., n-1}.
class SampleSet {
 public:
  // Throws std::invalid_argument unless indices are strictly increasing,
  // inside [0, n) and non-empty.
  SampleSet(std::vector<std::size_t> indices, std::size_t n);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return indices_.size(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }

  static SampleSet all(std::size_t n);
  static SampleSet consecutive(std::size_t n, std::size_t m);
  // floor(i * n / m) for i < m.
  static SampleSet equispaced(std::size_t n, std::size_t m);
  static SampleSet uniform(std::size_t n, std::size_t m, Rng& rng);

 private:
  std::vector<std::size_t> indices_;
  std::size_t n_;
};

enum class OmegaMode { kUniform, kConsecutive, kEquispaced };

std::string_view to_string(OmegaMode mode);
OmegaMode parse_omega_mode(std::string_view name);
SampleSet make_samples(OmegaMode mode, std::size_t n, std::size_t m, Rng& rng);

// Downward cyclic shift: (S^k x)_l = x_{(l - k) mod n}. Negative k shifts up.
Eigen::VectorXd cyclic_shift(const Eigen::Ref<const Eigen::VectorXd>& x,
                             std::ptrdiff_t k);

// Circular convolution phi * x through the DFT, i.e. the full circulant
// matrix C(i, j) = phi_{(i - j) mod n} applied to x.
Eigen::VectorXd circulant_apply(const GeneratorSequence& generator,
                                const Eigen::Ref<const Eigen::VectorXd>& x);

namespace detail {

// Cached spectrum of phi. convolve() applies C, correlate() applies C^T.
class CirculantKernel {
 public:
  explicit CirculantKernel(const Eigen::Ref<const Eigen::VectorXd>& phi);

  std::size_t size() const { return fft_.size(); }
  const Eigen::VectorXcd& spectrum() const { return spectrum_; }

  Eigen::VectorXd convolve(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  Eigen::VectorXd correlate(const Eigen::Ref<const Eigen::VectorXd>& x) const;

 private:
  Eigen::VectorXd real_part_checked(const Eigen::VectorXcd& z,
                                    double reference_norm) const;

  Fft fft_;
  Eigen::VectorXcd spectrum_;
  double peak_;  // max |phi_k|
};

}  // namespace detail

// Phi = (1 / sqrt(m)) R_Omega C: convolve with phi, keep the samples in Omega.
// Immutable after construction; apply and adjoint cost O(n log n).
class PartialCirculantOperator final : public LinearOperator {
 public:
  PartialCirculantOperator(GeneratorSequence generator, SampleSet samples);

  Eigen::Index rows() const override {
    return static_cast<Eigen::Index>(samples_.m());
  }
  Eigen::Index cols() const override {
    return static_cast<Eigen::Index>(samples_.n());
  }
  std::size_t n() const { return samples_.n(); }
  std::size_t m() const { return samples_.m(); }

  const GeneratorSequence& generator() const { return generator_; }
  const SampleSet& samples() const { return samples_; }
  const Eigen::VectorXcd& fhat() const { return kernel_->spectrum(); }
  double scale() const { return scale_; }

  Eigen::VectorXd apply(
      const Eigen::Ref<const Eigen::VectorXd>& x) const override;
  Eigen::VectorXd adjoint(
      const Eigen::Ref<const Eigen::VectorXd>& y) const override;

  // Dense m x n matrix with entries scale * phi_{(Omega[i] - j) mod n}.
  // Throws std::length_error when n exceeds dense_limit.
  Eigen::MatrixXd materialize(std::size_t dense_limit = kDefaultDenseLimit) const;

  // R_Omega C without the 1/sqrt(m) factor. For +-1 generators the entries
  // are exactly +-1, which keeps Gram computations exact.
  Eigen::MatrixXd sampled_rows(std::size_t dense_limit = kDefaultDenseLimit) const;

 private:
  GeneratorSequence generator_;
  SampleSet samples_;
  std::shared_ptr<const detail::CirculantKernel> kernel_;
  double scale_;
};

// Selected rows of the n x n Toeplitz matrix T(i, j) = t_{i-j}, evaluated by
// zero-padding x to length 2n and convolving with a circulant of size 2n.
//
// The diagonals are passed in circulant order: diagonals[0..n-1] holds
// t_0, ..., t_{n-1} (first column) and diagonals[n..2n-2] holds
// t_{-(n-1)}, ..., t_{-1}. No 1/sqrt(m) factor is applied.
class ToeplitzOperator final : public LinearOperator {
 public:
  ToeplitzOperator(const Eigen::Ref<const Eigen::VectorXd>& diagonals,
                   std::vector<std::size_t> row_indices, std::size_t n);

  Eigen::Index rows() const override {
    return static_cast<Eigen::Index>(rows_.size());
  }
  Eigen::Index cols() const override { return static_cast<Eigen::Index>(n_); }
  const std::vector<std::size_t>& row_indices() const { return rows_; }

  Eigen::VectorXd apply(
      const Eigen::Ref<const Eigen::VectorXd>& x) const override;
  Eigen::VectorXd adjoint(
      const Eigen::Ref<const Eigen::VectorXd>& y) const override;

 private:
  std::size_t n_;
  std::vector<std::size_t> rows_;
  std::shared_ptr<const detail::CirculantKernel> kernel_;  // size 2n
};

// Builds the Toeplitz map from the first 2n-1 values of a generator.
ToeplitzOperator toeplitz_operator(const GeneratorSequence& generator,
                                   std::vector<std::size_t> row_indices,
                                   std::size_t n);

}  // namespace circsense

#endif  // CIRCSENSE_CIRCULANT_HPP_
