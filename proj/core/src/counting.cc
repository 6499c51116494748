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

#include "coremix/counting.h"

#include <cmath>
#include <limits>
#include <string>

#include "coremix/error.h"

namespace coremix {
namespace {

void check_range(std::uint64_t m, std::uint64_t t, std::uint64_t q) {
  if (q > 2 * m || t > q) {
    throw InvalidArgument("crossing_prob: need 0 <= t <= q <= 2m (m=" +
                          std::to_string(m) + ", t=" + std::to_string(t) +
                          ", q=" + std::to_string(q) + ")");
  }
}

bool crossing_possible(std::uint64_t m, std::uint64_t t, std::uint64_t q) {
  return t <= 2 * m - q && (q - t) % 2 == 0;
}

BigInt factorial(std::uint64_t k) {
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= k; ++i) out *= i;
  return out;
}

BigInt binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    out *= a - b + i;
    out /= i;
  }
  return out;
}

double log_binomial(double a, double b) {
  return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1);
}

double log_matchings(double k) {
  return std::lgamma(k + 1) - std::lgamma(k / 2 + 1) - (k / 2) * std::log(2.0);
}

}  // namespace

BigInt matchings_count(std::uint64_t k) {
  if (k % 2 != 0) return 0;
  // (k-1)!!
  BigInt out = 1;
  for (std::uint64_t i = 1; i < k; i += 2) out *= i;
  return out;
}

Rational crossing_prob_exact(std::uint64_t m, std::uint64_t t,
                             std::uint64_t q) {
  check_range(m, t, q);
  if (!crossing_possible(m, t, q)) return Rational(0);
  BigInt numerator = binomial(2 * m - q, t) * binomial(q, t) * factorial(t) *
                     matchings_count(q - t) * matchings_count(2 * m - q - t);
  return Rational(numerator, matchings_count(2 * m));
}

double log_crossing_prob(std::uint64_t m, std::uint64_t t, std::uint64_t q) {
  check_range(m, t, q);
  if (!crossing_possible(m, t, q)) {
    return -std::numeric_limits<double>::infinity();
  }
  const auto md = static_cast<double>(m);
  const auto td = static_cast<double>(t);
  const auto qd = static_cast<double>(q);
  return log_binomial(2 * md - qd, td) + log_binomial(qd, td) +
         std::lgamma(td + 1) + log_matchings(qd - td) +
         log_matchings(2 * md - qd - td) - log_matchings(2 * md);
}

double CrossingProbability::probability() const {
  if (exact) return value.convert_to<double>();
  return std::exp(log_value);
}

CrossingProbability crossing_prob(std::uint64_t m, std::uint64_t t,
                                  std::uint64_t q) {
  CrossingProbability out;
  if (2 * m <= kExactCrossingLimit) {
    out.exact = true;
    out.value = crossing_prob_exact(m, t, q);
    out.log_value = out.value == 0
                        ? -std::numeric_limits<double>::infinity()
                        : std::log(out.value.convert_to<double>());
  } else {
    out.log_value = log_crossing_prob(m, t, q);
  }
  return out;
}

}  // namespace coremix
