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

#include "circsense/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace circsense {

namespace {

using cplx = std::complex<double>;

cplx unit_root(std::size_t numerator, std::size_t n) {
  const double angle = -2.0 * std::numbers::pi *
                       static_cast<double>(numerator % n) /
                       static_cast<double>(n);
  return std::polar(1.0, angle);
}

void check_dense(std::size_t n, std::size_t dense_limit) {
  if (n > dense_limit) {
    throw std::length_error("dense Fourier object exceeds the dense limit");
  }
}

}  // namespace

Eigen::MatrixXcd dft_matrix(std::size_t n, std::size_t dense_limit) {
  check_dense(n, dense_limit);
  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd f(nn, nn);
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t l = 0; l < n; ++l) {
      f(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(l)) =
          unit_root(w * l, n);
    }
  }
  return f;
}

Eigen::VectorXcd modulation_diagonal(std::size_t n, std::ptrdiff_t k) {
  const auto nn = static_cast<std::ptrdiff_t>(n);
  const auto power = static_cast<std::size_t>(((k % nn) + nn) % nn);
  Eigen::VectorXcd d(static_cast<Eigen::Index>(n));
  for (std::size_t w = 0; w < n; ++w) {
    d[static_cast<Eigen::Index>(w)] = unit_root(w * power, n);
  }
  return d;
}

Eigen::MatrixXd shift_matrix(std::size_t n, std::ptrdiff_t k) {
  const auto nn = static_cast<std::ptrdiff_t>(n);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(nn, nn);
  for (std::ptrdiff_t l = 0; l < nn; ++l) s((((l + k) % nn) + nn) % nn, l) = 1.0;
  return s;
}

FourierProjector fourier_projector(const SampleSet& samples,
                                   std::size_t dense_limit) {
  const std::size_t n = samples.n();
  check_dense(n, dense_limit);
  // n^{-1} F P F^{-1} = n^{-2} F_Omega F_Omega^*, F_Omega = columns in Omega.
  const Eigen::MatrixXcd f = dft_matrix(n, dense_limit);
  Eigen::MatrixXcd f_omega(f.rows(), static_cast<Eigen::Index>(samples.m()));
  for (std::size_t i = 0; i < samples.m(); ++i) {
    f_omega.col(static_cast<Eigen::Index>(i)) =
        f.col(static_cast<Eigen::Index>(samples[i]));
  }
  FourierProjector p;
  p.n = n;
  p.source = samples.indices();
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  p.matrix = (f_omega * f_omega.adjoint()) / n2;
  return p;
}

double ProjectorDeviations::property(int index) const {
  switch (index) {
    case 1:
      return std::max(circulant, conjugate_symmetry);
    case 2:
      return std::max(diagonal, off_diagonal);
    case 3:
      return row_energy;
    case 4:
      return std::max({eigenvalues, spectral_norm, frobenius});
    default:
      throw std::out_of_range("projector property index must be 1..4");
  }
}

double ProjectorDeviations::max() const {
  return std::max({property(1), property(2), property(3), property(4)});
}

ProjectorDeviations projector_deviations(const Eigen::MatrixXcd& p,
                                         std::size_t m) {
  const Eigen::Index n = p.rows();
  if (p.cols() != n || n == 0) {
    throw std::invalid_argument("projector_deviations: matrix must be square");
  }
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  const double diag_value = md / (nd * nd);
  ProjectorDeviations dev;

  for (Eigen::Index i = 0; i < n; ++i) {
    double row_energy = 0.0;
    double col_energy = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx v = p(i, j);
      dev.circulant =
          std::max(dev.circulant, std::abs(v - p((i + 1) % n, (j + 1) % n)));
      dev.conjugate_symmetry =
          std::max(dev.conjugate_symmetry, std::abs(v - std::conj(p(j, i))));
      if (i == j) {
        dev.diagonal = std::max(dev.diagonal, std::abs(v - diag_value));
      } else {
        dev.off_diagonal =
            std::max(dev.off_diagonal, std::abs(v) - diag_value);
      }
      row_energy += std::norm(v);
      col_energy += std::norm(p(j, i));
    }
    const double energy_value = md / (nd * nd * nd);
    dev.row_energy = std::max({dev.row_energy, std::abs(row_energy - energy_value),
                               std::abs(col_energy - energy_value)});
  }

  // Decompose n * P so the spectrum sits at 0 and 1; the tridiagonal QR
  // sweep can stall on entries of size 1/n^2 for larger n.
  const Eigen::MatrixXcd hermitian = (p + p.adjoint()) * (nd / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hermitian,
                                                      Eigen::EigenvaluesOnly);
  Eigen::VectorXd lambda;
  if (eig.info() == Eigen::Success) {
    lambda = eig.eigenvalues() / nd;
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> general(hermitian, false);
    if (general.info() != Eigen::Success) {
      throw std::runtime_error("projector eigenvalues did not converge");
    }
    lambda = general.eigenvalues().real() / nd;
    std::sort(lambda.begin(), lambda.end());
  }
  const Eigen::Index zeros = n - static_cast<Eigen::Index>(m);
  double spectral = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double expected = i < zeros ? 0.0 : 1.0 / nd;
    dev.eigenvalues = std::max(dev.eigenvalues, std::abs(lambda[i] - expected));
    spectral = std::max(spectral, std::abs(lambda[i]));
  }
  dev.spectral_norm = std::abs(spectral - 1.0 / nd);
  dev.frobenius = std::abs(p.squaredNorm() - md / (nd * nd));
  return dev;
}

double modulation_identity_deviation(std::size_t n, std::ptrdiff_t k,
                                     std::size_t dense_limit) {
  const Eigen::MatrixXcd f = dft_matrix(n, dense_limit);
  const Eigen::MatrixXcd lhs = f * shift_matrix(n, k).cast<cplx>();
  const Eigen::MatrixXcd rhs = modulation_diagonal(n, k).asDiagonal() * f;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

bool modulation_identity_check(std::size_t n, std::ptrdiff_t k,
                               std::size_t dense_limit) {
  return modulation_identity_deviation(n, k, dense_limit) <= 1e-10;
}

void require_sparse_unit_ball(const Eigen::Ref<const Eigen::VectorXd>& x,
                              std::size_t s) {
  const auto support = static_cast<std::size_t>((x.array() != 0.0).count());
  if (support > s) {
    throw std::domain_error("vector has " + std::to_string(support) +
                            " nonzeros, more than s = " + std::to_string(s));
  }
  if (x.squaredNorm() > 1.0 + 1e-12) {
    throw std::domain_error("vector lies outside the Euclidean unit ball");
  }
}

double chaos_value(const PartialCirculantOperator& op,
                   const Eigen::Ref<const Eigen::VectorXd>& x, std::size_t s) {
  require_sparse_unit_ball(x, s);
  return op.apply(x).squaredNorm() - x.squaredNorm();
}

double chaos_value_shift_sum(const PartialCirculantOperator& op,
                             const Eigen::Ref<const Eigen::VectorXd>& x) {
  const std::size_t n = op.n();
  const std::size_t m = op.m();
  if (static_cast<std::size_t>(x.size()) != n) {
    throw std::invalid_argument("chaos_value_shift_sum: dimension mismatch");
  }
  // Column k holds R_Omega S^k x.
  Eigen::MatrixXd shifted(static_cast<Eigen::Index>(m),
                          static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::VectorXd sx = cyclic_shift(x, static_cast<std::ptrdiff_t>(k));
    for (std::size_t i = 0; i < m; ++i) {
      shifted(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          sx[static_cast<Eigen::Index>(op.samples()[i])];
    }
  }
  const Eigen::VectorXd& phi = op.generator().values;
  double sum = 0.0;
  for (Eigen::Index k = 0; k < shifted.cols(); ++k) {
    for (Eigen::Index l = 0; l < shifted.cols(); ++l) {
      if (k == l) continue;
      sum += phi[k] * phi[l] * shifted.col(k).dot(shifted.col(l));
    }
  }
  return sum / static_cast<double>(m);
}

double chaos_value_fourier(const PartialCirculantOperator& op,
                           const Eigen::Ref<const Eigen::VectorXd>& x) {
  const std::size_t n = op.n();
  if (static_cast<std::size_t>(x.size()) != n) {
    throw std::invalid_argument("chaos_value_fourier: dimension mismatch");
  }
  const Eigen::MatrixXcd f = dft_matrix(n);
  const Eigen::MatrixXcd phat = fourier_projector(op.samples()).matrix;
  const Eigen::VectorXcd xhat = f * x.cast<cplx>();
  const Eigen::VectorXd& phi = op.generator().values;

  // sum_k phi_k M^k xhat, the full double sum being w^* Phat w.
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(xhat.size());
  cplx diagonal_terms = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::VectorXcd mk_xhat =
        modulation_diagonal(n, static_cast<std::ptrdiff_t>(k)).asDiagonal() * xhat;
    const double phik = phi[static_cast<Eigen::Index>(k)];
    w += phik * mk_xhat;
    diagonal_terms += phik * phik * mk_xhat.dot(phat * mk_xhat);
  }
  const cplx full = w.dot(phat * w);
  return (full - diagonal_terms).real() / static_cast<double>(op.m());
}

ChaosMatrix chaos_matrix(const Eigen::Ref<const Eigen::VectorXd>& x,
                         const SampleSet& samples, std::size_t s,
                         std::size_t dense_limit) {
  const std::size_t n = samples.n();
  if (static_cast<std::size_t>(x.size()) != n) {
    throw std::invalid_argument("chaos_matrix: dimension mismatch");
  }
  require_sparse_unit_ball(x, s);
  check_dense(n, dense_limit);
  const Eigen::MatrixXcd f = dft_matrix(n, dense_limit);
  const Eigen::MatrixXcd phat = fourier_projector(samples, dense_limit).matrix;
  const Eigen::VectorXcd xhat = f * x.cast<cplx>();
  const Eigen::MatrixXcd xf = xhat.asDiagonal() * f;  // Xhat F
  ChaosMatrix z;
  z.x = x;
  z.matrix = xf.adjoint() * phat * xf;
  z.matrix.diagonal().setZero();
  z.matrix /= static_cast<double>(samples.m());
  return z;
}

double quadratic_form(const ChaosMatrix& z,
                      const Eigen::Ref<const Eigen::VectorXd>& eps) {
  if (eps.size() != z.matrix.rows()) {
    throw std::invalid_argument("quadratic_form: dimension mismatch");
  }
  const Eigen::VectorXcd e = eps.cast<cplx>();
  return e.dot(z.matrix * e).real();
}

}  // namespace circsense
