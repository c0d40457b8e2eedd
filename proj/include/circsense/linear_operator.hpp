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

#ifndef CIRCSENSE_LINEAR_OPERATOR_HPP_
#define CIRCSENSE_LINEAR_OPERATOR_HPP_

#include <Eigen/Core>

namespace circsense {

// A real m x n linear map available only through its action and the action
// of its transpose. Recovery algorithms are written against this interface.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;

  virtual Eigen::Index rows() const = 0;
  virtual Eigen::Index cols() const = 0;

  virtual Eigen::VectorXd apply(
      const Eigen::Ref<const Eigen::VectorXd>& x) const = 0;
  virtual Eigen::VectorXd adjoint(
      const Eigen::Ref<const Eigen::VectorXd>& y) const = 0;
};

// Explicit matrix. Used as the slow reference path in tests and benchmarks.
class DenseOperator final : public LinearOperator {
 public:
  explicit DenseOperator(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {}

  Eigen::Index rows() const override { return matrix_.rows(); }
  Eigen::Index cols() const override { return matrix_.cols(); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

  Eigen::VectorXd apply(
      const Eigen::Ref<const Eigen::VectorXd>& x) const override;
  Eigen::VectorXd adjoint(
      const Eigen::Ref<const Eigen::VectorXd>& y) const override;

 private:
  Eigen::MatrixXd matrix_;
};

}  // namespace circsense

#endif  // CIRCSENSE_LINEAR_OPERATOR_HPP_
