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

#include "circsense/linear_operator.hpp"

#include <stdexcept>

namespace circsense {

Eigen::VectorXd DenseOperator::apply(
    const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (x.size() != matrix_.cols()) {
    throw std::invalid_argument("DenseOperator::apply: dimension mismatch");
  }
  return matrix_ * x;
}

Eigen::VectorXd DenseOperator::adjoint(
    const Eigen::Ref<const Eigen::VectorXd>& y) const {
  if (y.size() != matrix_.rows()) {
    throw std::invalid_argument("DenseOperator::adjoint: dimension mismatch");
  }
  return matrix_.transpose() * y;
}

}  // namespace circsense
