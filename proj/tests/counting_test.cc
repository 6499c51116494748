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
#include <functional>
#include <vector>

#include "coremix/error.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace coremix {
namespace {

using ::coremix::testing::for_each_matching;

TEST(MatchingsCountTest, SmallValues) {
  EXPECT_EQ(matchings_count(0), 1);
  EXPECT_EQ(matchings_count(2), 1);
  EXPECT_EQ(matchings_count(4), 3);
  EXPECT_EQ(matchings_count(6), 15);
  EXPECT_EQ(matchings_count(5), 0);
}

TEST(MatchingsCountTest, MatchesEnumeration) {
  for (std::size_t k = 0; k <= 10; ++k) {
    std::uint64_t count = 0;
    for_each_matching(k, [&](const std::vector<int>&) { ++count; });
    EXPECT_EQ(matchings_count(k), count) << "k = " << k;
  }
}

TEST(CrossingProbTest, MarkedPairOfFour) {
  EXPECT_EQ(crossing_prob_exact(2, 0, 2), Rational(1, 3));
  EXPECT_EQ(crossing_prob_exact(2, 2, 2), Rational(2, 3));
  EXPECT_EQ(crossing_prob_exact(2, 1, 2), 0);
}

TEST(CrossingProbTest, ParityZeros) {
  for (std::uint64_t m = 1; m <= 6; ++m) {
    for (std::uint64_t q = 0; q <= 2 * m; ++q) {
      for (std::uint64_t t = 0; t <= q; ++t) {
        if ((q - t) % 2 == 1) EXPECT_EQ(crossing_prob_exact(m, t, q), 0);
      }
    }
  }
}

TEST(CrossingProbTest, SumsToOneExactly) {
  for (std::uint64_t m = 0; 2 * m <= 16; ++m) {
    for (std::uint64_t q = 0; q <= 2 * m; ++q) {
      Rational total = 0;
      for (std::uint64_t t = 0; t <= q; ++t) total += crossing_prob_exact(m, t, q);
      EXPECT_EQ(total, 1) << "m = " << m << ", q = " << q;
    }
  }
}

TEST(CrossingProbTest, LawMatchesMatchingEnumeration) {
  for (std::uint64_t m = 1; 2 * m <= 10; ++m) {
    const std::size_t k = 2 * m;
    for (std::uint64_t q = 0; q <= k; ++q) {
      // Points 0..q-1 form the marked set.
      std::vector<std::uint64_t> hist(q + 1, 0);
      std::uint64_t total = 0;
      for_each_matching(k, [&](const std::vector<int>& partner) {
        std::uint64_t cross = 0;
        for (std::size_t i = 0; i < q; ++i) {
          cross += static_cast<std::uint64_t>(partner[i]) >= q;
        }
        ++hist[cross];
        ++total;
      });
      Rational mean = 0;
      BigInt enumerated_mean_numerator = 0;
      for (std::uint64_t t = 0; t <= q; ++t) {
        EXPECT_EQ(crossing_prob_exact(m, t, q),
                  Rational(BigInt(hist[t]), BigInt(total)));
        mean += t * crossing_prob_exact(m, t, q);
        enumerated_mean_numerator += BigInt(t * hist[t]);
      }
      EXPECT_EQ(mean, Rational(enumerated_mean_numerator, BigInt(total)));
    }
  }
}

TEST(CrossingProbTest, LogSpaceAgreesWithExact) {
  for (std::uint64_t q : {3u, 10u, 21u}) {
    for (std::uint64_t t = 0; t <= q; ++t) {
      const Rational exact = crossing_prob_exact(20, t, q);
      const double log_value = log_crossing_prob(20, t, q);
      if (exact == 0) {
        EXPECT_TRUE(std::isinf(log_value) && log_value < 0);
      } else {
        EXPECT_NEAR(log_value, std::log(exact.convert_to<double>()), 1e-9);
      }
    }
  }
}

TEST(CrossingProbTest, DispatchesOnSize) {
  const CrossingProbability small = crossing_prob(4, 2, 4);
  EXPECT_TRUE(small.exact);
  EXPECT_EQ(small.value, crossing_prob_exact(4, 2, 4));
  const CrossingProbability large = crossing_prob(100, 10, 30);
  EXPECT_FALSE(large.exact);
  EXPECT_GT(large.probability(), 0.0);
  EXPECT_LT(large.probability(), 1.0);
  EXPECT_THROW(crossing_prob(2, 3, 2), InvalidArgument);
  EXPECT_THROW(crossing_prob(2, 0, 5), InvalidArgument);
}

}  // namespace
}  // namespace coremix
