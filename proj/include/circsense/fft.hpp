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

#ifndef CIRCSENSE_FFT_HPP_
#define CIRCSENSE_FFT_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace circsense {

/// Discrete Fourier transform of a fixed length n, using the unnormalized
/// kernel F(w, l) = exp(-i 2 pi w l / n). The inverse carries the 1/n factor,
/// so inverse(forward(x)) == x.
///
/// Powers of two run an iterative radix-2 transform; every other length goes
/// through Bluestein's chirp-z reduction onto a power-of-two transform. A plan
/// is immutable after construction and may be shared between threads.
class Fft {
 public:
  explicit Fft(std::size_t n);

  std::size_t size() const { return n_; }

  Eigen::VectorXcd forward(const Eigen::Ref<const Eigen::VectorXcd>& x) const;
  Eigen::VectorXcd inverse(const Eigen::Ref<const Eigen::VectorXcd>& x) const;

 private:
  using cplx = std::complex<double>;

  // In-place radix-2 transform of length radix2_size_. sign = -1 is forward.
  void radix2(std::vector<cplx>& data, int sign) const;
  Eigen::VectorXcd transform(const Eigen::Ref<const Eigen::VectorXcd>& x,
                             int sign) const;

  std::size_t n_;
  std::size_t radix2_size_;
  bool bluestein_;
  std::vector<std::size_t> bitrev_;
  std::vector<cplx> twiddle_;  // exp(-i 2 pi k / radix2_size_), k < size/2
  std::vector<cplx> chirp_;    // exp(-i pi k^2 / n), k < n
  std::vector<cplx> chirp_filter_hat_;  // transformed conj-chirp filter
};

bool is_power_of_two(std::size_t n);

}  // namespace circsense

#endif  // CIRCSENSE_FFT_HPP_
