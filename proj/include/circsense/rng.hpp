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

#ifndef CIRCSENSE_RNG_HPP_
#define CIRCSENSE_RNG_HPP_

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace circsense {

// Stream key for one unit of work: hashes (seed, purpose tag, index) into a
// fresh 64-bit seed. Streams for different indices are independent, so draw d
// of an experiment sees the same numbers whatever thread runs it.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                          std::uint64_t index);

std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256** seeded through splitmix64. Every distribution below is
// implemented here rather than taken from <random>, whose distributions are
// allowed to differ between standard library vendors.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);
  Rng(std::uint64_t seed, std::string_view tag, std::uint64_t index)
      : Rng(derive_seed(seed, tag, index)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return next(); }

  std::uint64_t next();
  double uniform();                         // [0, 1)
  std::uint64_t below(std::uint64_t bound);  // [0, bound), unbiased
  double gaussian();                         // standard normal
  double sign();                             // +1 or -1, equal odds

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// k distinct indices from [0, n), uniformly over k-subsets, sorted ascending.
std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t n,
                                                    std::size_t k);

}  // namespace circsense

#endif  // CIRCSENSE_RNG_HPP_
