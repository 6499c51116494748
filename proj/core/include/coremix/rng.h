// Copyright 2026 The coremix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reproducible random numbers.
//
// Every sampler takes a 64-bit seed and owns a private Rng built from it.
// Parallel trials never share a generator: trial i of a run with base seed s
// uses substream_seed(s, i), which mixes both values through SplitMix64. All
// variates are produced by the functions below rather than <random>
// distributions so that streams are identical across standard libraries.

#ifndef COREMIX_RNG_H_
#define COREMIX_RNG_H_

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace coremix {

// SplitMix64 finalizer; used for seeding and stream splitting.
std::uint64_t splitmix64(std::uint64_t x);

// Seed of the index-th independent substream of `base`.
std::uint64_t substream_seed(std::uint64_t base, std::uint64_t index);

// xoshiro256** 1.0 (Blackman & Vigna). Satisfies
// std::uniform_random_bit_generator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();

  // Bernoulli(p).
  bool bernoulli(double p) { return uniform() < p; }

  // Geometric number of failures before the first success, P(success)=p.
  std::uint64_t geometric(double p);

  // Poisson(mean) by inversion (mean <= ~700) or sum-splitting above.
  std::uint64_t poisson(double mean);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::array<std::uint64_t, 4> s_;
};

}  // namespace coremix

#endif  // COREMIX_RNG_H_
