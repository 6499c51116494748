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

#include "coremix/rng.h"

#include <cmath>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace coremix {
namespace {

TEST(RngTest, SameSeedSameStream) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(RngTest, SubstreamsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(substream_seed(7, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(substream_seed(7, 0), substream_seed(8, 0));
}

TEST(RngTest, BelowIsUniform) {
  Rng rng(1);
  std::vector<int> counts(6, 0);
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[rng.below(6)];
  for (int c : counts) EXPECT_NEAR(c, draws / 6.0, 5 * std::sqrt(draws / 6.0));
}

TEST(RngTest, UniformInUnitInterval) {
  Rng rng(2);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(RngTest, GeometricAndPoissonMeans) {
  Rng rng(3);
  const int draws = 200000;
  double geo = 0.0;
  double poi = 0.0;
  for (int i = 0; i < draws; ++i) {
    geo += static_cast<double>(rng.geometric(0.5));
    poi += static_cast<double>(rng.poisson(3.5));
  }
  // Failures before the first success: mean (1 - p) / p.
  EXPECT_NEAR(geo / draws, 1.0, 0.02);
  EXPECT_NEAR(poi / draws, 3.5, 0.03);
}

TEST(RngTest, ShuffleIsPermutation) {
  Rng rng(4);
  std::vector<int> v = {0, 1, 2, 3, 4, 5, 6, 7};
  rng.shuffle(std::span<int>(v));
  EXPECT_EQ(std::set<int>(v.begin(), v.end()).size(), 8u);
}

}  // namespace
}  // namespace coremix
