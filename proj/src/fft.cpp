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

#include "circsense/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace circsense {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("Fft: length must be positive");
  bluestein_ = !is_power_of_two(n);
  radix2_size_ = bluestein_ ? next_power_of_two(2 * n - 1) : n;

  const std::size_t len = radix2_size_;
  bitrev_.resize(len);
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < len) ++bits;
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    }
    bitrev_[i] = r;
  }
  twiddle_.resize(len / 2);
  for (std::size_t k = 0; k < len / 2; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(len);
    twiddle_[k] = std::polar(1.0, angle);
  }

  if (!bluestein_) return;

  // k^2 is reduced mod 2n before scaling so the angle stays small.
  chirp_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t k2 = (k * k) % (2 * n);
    const double angle =
        -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
    chirp_[k] = std::polar(1.0, angle);
  }
  std::vector<cplx> filter(len, cplx{0.0, 0.0});
  filter[0] = std::conj(chirp_[0]);
  for (std::size_t k = 1; k < n; ++k) {
    filter[k] = std::conj(chirp_[k]);
    filter[len - k] = std::conj(chirp_[k]);
  }
  radix2(filter, -1);
  chirp_filter_hat_ = std::move(filter);
}

void Fft::radix2(std::vector<cplx>& data, int sign) const {
  const std::size_t len = radix2_size_;
  for (std::size_t i = 0; i < len; ++i) {
    if (i < bitrev_[i]) std::swap(data[i], data[bitrev_[i]]);
  }
  for (std::size_t half = 1; half < len; half <<= 1) {
    const std::size_t stride = len / (2 * half);
    for (std::size_t start = 0; start < len; start += 2 * half) {
      for (std::size_t j = 0; j < half; ++j) {
        cplx w = twiddle_[j * stride];
        if (sign > 0) w = std::conj(w);
        const cplx u = data[start + j];
        const cplx v = data[start + j + half] * w;
        data[start + j] = u + v;
        data[start + j + half] = u - v;
      }
    }
  }
}

Eigen::VectorXcd Fft::transform(const Eigen::Ref<const Eigen::VectorXcd>& x,
                                int sign) const {
  if (static_cast<std::size_t>(x.size()) != n_) {
    throw std::invalid_argument("Fft: input length does not match plan");
  }
  Eigen::VectorXcd out(static_cast<Eigen::Index>(n_));
  if (!bluestein_) {
    std::vector<cplx> data(x.data(), x.data() + n_);
    radix2(data, sign);
    for (std::size_t i = 0; i < n_; ++i) out[static_cast<Eigen::Index>(i)] = data[i];
    return out;
  }

  // Bluestein: X_w = c_w * sum_k (x_k c_k) conj(c_{w-k}) with c_k the chirp.
  // The inverse direction conjugates the chirp, which is the same as
  // conjugating input and output around a forward transform.
  const std::size_t len = radix2_size_;
  std::vector<cplx> a(len, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < n_; ++k) {
    const cplx xk = sign < 0 ? x[static_cast<Eigen::Index>(k)]
                             : std::conj(x[static_cast<Eigen::Index>(k)]);
    a[k] = xk * chirp_[k];
  }
  radix2(a, -1);
  for (std::size_t k = 0; k < len; ++k) a[k] *= chirp_filter_hat_[k];
  radix2(a, +1);
  const double inv_len = 1.0 / static_cast<double>(len);
  for (std::size_t w = 0; w < n_; ++w) {
    cplx v = a[w] * inv_len * chirp_[w];
    out[static_cast<Eigen::Index>(w)] = sign < 0 ? v : std::conj(v);
  }
  return out;
}

Eigen::VectorXcd Fft::forward(const Eigen::Ref<const Eigen::VectorXcd>& x) const {
  return transform(x, -1);
}

Eigen::VectorXcd Fft::inverse(const Eigen::Ref<const Eigen::VectorXcd>& x) const {
  Eigen::VectorXcd out = transform(x, +1);
  out /= static_cast<double>(n_);
  return out;
}

}  // namespace circsense
