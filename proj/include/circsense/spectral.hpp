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

#ifndef CIRCSENSE_SPECTRAL_HPP_
#define CIRCSENSE_SPECTRAL_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "circsense/circulant.hpp"

// Fourier-domain objects behind the restricted isometry analysis of partial
// circulant matrices. Everything here is dense n x n and gated by the dense
// limit; the fast operators in circulant.hpp never go through this code.

namespace circsense {

// Unnormalized DFT matrix F(w, l) = exp(-i 2 pi w l / n); F F^* = n I.
Eigen::MatrixXcd dft_matrix(std::size_t n,
                            std::size_t dense_limit = kDefaultDenseLimit);

// Diagonal modulation M(w, w) = exp(-i 2 pi w / n), raised to the power k.
Eigen::VectorXcd modulation_diagonal(std::size_t n, std::ptrdiff_t k);

// Dense downward cyclic shift S^k.
Eigen::MatrixXd shift_matrix(std::size_t n, std::ptrdiff_t k);

// The Fourier conjugate of the coordinate projector onto Omega,
// n^{-1} F P_Omega F^{-1}.
struct FourierProjector {
  Eigen::MatrixXcd matrix;
  std::vector<std::size_t> source;  // Omega
  std::size_t n = 0;

  std::size_t m() const { return source.size(); }
};

FourierProjector fourier_projector(const SampleSet& samples,
                                   std::size_t dense_limit = kDefaultDenseLimit);

// Largest violation of each structural property of the projector, measured
// as absolute deviations from the closed-form values.
struct ProjectorDeviations {
  double circulant = 0.0;        // P(i, j) vs P(i+1, j+1)
  double conjugate_symmetry = 0.0;
  double diagonal = 0.0;         // P(w, w) vs m / n^2
  double off_diagonal = 0.0;     // excess of |P(w, x)| over m / n^2
  double row_energy = 0.0;       // sum_x |P(w, x)|^2 (and columns) vs m / n^3
  double eigenvalues = 0.0;      // sorted spectrum vs {0 (n - m times), 1/n}
  double spectral_norm = 0.0;    // vs 1/n
  double frobenius = 0.0;        // ||P||_F^2 vs m / n^2

  // Grouped the way the properties are usually stated: 1 circulant and
  // conjugate symmetric; 2 diagonal and off-diagonal bounds; 3 row energy;
  // 4 spectrum and norms.
  double property(int index) const;
  double max() const;
};

// m is taken from the argument so a tampered matrix is still compared against
// the values implied by Omega.
ProjectorDeviations projector_deviations(const Eigen::MatrixXcd& projector,
                                         std::size_t m);

// True iff max |F S^k - M^k F| <= 1e-10 entrywise.
bool modulation_identity_check(std::size_t n, std::ptrdiff_t k,
                               std::size_t dense_limit = kDefaultDenseLimit);
double modulation_identity_deviation(std::size_t n, std::ptrdiff_t k,
                                     std::size_t dense_limit = kDefaultDenseLimit);

// Throws std::domain_error unless ||x||_0 <= s and ||x||_2 <= 1 (up to
// rounding), i.e. x is in the set indexing the chaos process.
void require_sparse_unit_ball(const Eigen::Ref<const Eigen::VectorXd>& x,
                              std::size_t s);

// G_x = ||Phi x||^2 - ||x||^2 through two fast applies.
double chaos_value(const PartialCirculantOperator& op,
                   const Eigen::Ref<const Eigen::VectorXd>& x, std::size_t s);

// G_x as the off-diagonal shift double sum
//   m^{-1} sum_{k != l} phi_k phi_l <P_Omega S^k x, P_Omega S^l x>.
// Agrees with chaos_value whenever phi is a sign sequence.
double chaos_value_shift_sum(const PartialCirculantOperator& op,
                             const Eigen::Ref<const Eigen::VectorXd>& x);

// G_x in the Fourier domain,
//   m^{-1} sum_{k != l} phi_k phi_l xhat^* M^{-k} Phat M^l xhat,
// evaluated as the full double sum minus its diagonal.
double chaos_value_fourier(const PartialCirculantOperator& op,
                           const Eigen::Ref<const Eigen::VectorXd>& x);

// Z_x = m^{-1} (F^* X^* Phat X F - diag(F^* X^* Phat X F)) with X = diag(F x).
// Hollow and conjugate symmetric; G_x = <phi, Z_x phi> for sign sequences.
struct ChaosMatrix {
  Eigen::MatrixXcd matrix;
  Eigen::VectorXd x;
};

ChaosMatrix chaos_matrix(const Eigen::Ref<const Eigen::VectorXd>& x,
                         const SampleSet& samples, std::size_t s,
                         std::size_t dense_limit = kDefaultDenseLimit);

// <eps, Z eps> for a real vector eps.
double quadratic_form(const ChaosMatrix& z,
                      const Eigen::Ref<const Eigen::VectorXd>& eps);

}  // namespace circsense

#endif  // CIRCSENSE_SPECTRAL_HPP_
