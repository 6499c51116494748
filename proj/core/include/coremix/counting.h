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

// Exact matching counts for the pairing model.

#ifndef COREMIX_COUNTING_H_
#define COREMIX_COUNTING_H_

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace coremix {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest 2m for which crossing_prob uses exact rational arithmetic; above it
// the value is computed in log space with lgamma.
inline constexpr std::uint64_t kExactCrossingLimit = 64;

// Number of perfect matchings of k labelled points, k!/((k/2)! 2^{k/2});
// zero for odd k.
BigInt matchings_count(std::uint64_t k);

// Probability that a uniform perfect matching of 2m points has exactly t
// pairs with one end in a fixed set of q points:
//   C(2m-q, t) C(q, t) t! M(q-t) M(2m-q-t) / M(2m).
Rational crossing_prob_exact(std::uint64_t m, std::uint64_t t, std::uint64_t q);

// Natural log of the same quantity; -infinity when it is zero.
double log_crossing_prob(std::uint64_t m, std::uint64_t t, std::uint64_t q);

struct CrossingProbability {
  bool exact = false;
  Rational value;  // meaningful when exact
  double log_value = 0.0;

  double probability() const;
};

// Exact for 2m <= kExactCrossingLimit, log-space beyond.
CrossingProbability crossing_prob(std::uint64_t m, std::uint64_t t,
                                  std::uint64_t q);

}  // namespace coremix

#endif  // COREMIX_COUNTING_H_
