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

#include "coremix/genmodels.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "coremix/error.h"
#include "coremix/multigraph.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace coremix {
namespace {

using EdgeMultiset = std::vector<std::pair<VertexId, VertexId>>;

std::pair<VertexId, VertexId> sorted_pair(VertexId a, VertexId b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

EdgeMultiset canonical(const Multigraph& g) {
  EdgeMultiset out;
  for (const Edge& e : g.edges()) out.push_back(sorted_pair(e.u, e.v));
  std::sort(out.begin(), out.end());
  return out;
}

// Exact law of the edge multiset of C(n,m) conditioned by `keep`, by
// enumerating all n^(2m) endpoint functions.
template <typename Keep>
std::map<EdgeMultiset, double> enumerate_cnm(std::size_t n, std::size_t m,
                                             Keep keep) {
  std::map<EdgeMultiset, double> law;
  std::size_t total = 1;
  for (std::size_t i = 0; i < 2 * m; ++i) total *= n;
  double kept = 0;
  std::vector<VertexId> ends(2 * m);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (auto& e : ends) {
      e = static_cast<VertexId>(x % n);
      x /= n;
    }
    Multigraph g(n);
    for (std::size_t i = 0; i < m; ++i) g.add_edge(ends[2 * i], ends[2 * i + 1]);
    if (!keep(g)) continue;
    law[canonical(g)] += 1;
    kept += 1;
  }
  for (auto& [key, p] : law) p /= kept;
  return law;
}

// Every class frequency within 5 sigma of its exact probability.
void expect_matches_law(const std::map<EdgeMultiset, double>& law,
                        const std::map<EdgeMultiset, double>& counts,
                        double samples) {
  for (const auto& [key, count] : counts) {
    ASSERT_TRUE(law.count(key)) << "outcome outside the support";
  }
  for (const auto& [key, p] : law) {
    auto it = counts.find(key);
    const double observed = it == counts.end() ? 0.0 : it->second;
    EXPECT_NEAR(observed, p * samples, 5 * std::sqrt(samples * p * (1 - p)) + 1);
  }
}

TEST(GnpTest, Extremes) {
  EXPECT_EQ(sample_gnp(10, 0.0, 1).edge_count(), 0u);
  const Multigraph k = sample_gnp(10, 1.0, 1);
  EXPECT_EQ(k.edge_count(), 45u);
  EXPECT_TRUE(is_simple(k));
  EXPECT_THROW(sample_gnp(10, 1.5, 1), InvalidArgument);
}

TEST(GnpTest, MeanEdgeCount) {
  const std::size_t n = 10000;
  const double p = 2.0 / n;
  const double pairs = n * (n - 1) / 2.0;
  double sum = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Multigraph g = sample_gnp(n, p, seed);
    ASSERT_TRUE(is_simple(g));
    sum += static_cast<double>(g.edge_count());
  }
  const double sigma = std::sqrt(pairs * p * (1 - p) / 100);
  EXPECT_NEAR(sum / 100, pairs * p, 3 * sigma);
}

TEST(GnmTest, Extremes) {
  EXPECT_EQ(sample_gnm(6, 0, 1).edge_count(), 0u);
  const Multigraph k = sample_gnm(6, 15, 1);
  EXPECT_EQ(k.edge_count(), 15u);
  EXPECT_TRUE(is_simple(k));
  EXPECT_THROW(sample_gnm(6, 16, 1), InvalidArgument);
}

TEST(GnmTest, UniformOverLabeledGraphs) {
  std::map<EdgeMultiset, double> counts;
  const int samples = 60000;
  for (int seed = 0; seed < samples; ++seed) {
    const Multigraph g = sample_gnm(6, 3, seed);
    ASSERT_TRUE(is_simple(g));
    counts[canonical(g)] += 1;
  }
  ASSERT_EQ(counts.size(), 455u);
  const double p = 1.0 / 455;
  for (const auto& [key, c] : counts) {
    EXPECT_NEAR(c, samples * p, 5 * std::sqrt(samples * p * (1 - p)));
  }
}

TEST(CnmTest, SingleVertexLoop) {
  const Multigraph g = sample_cnm(1, 1, 9);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.edge(0).is_loop());
  EXPECT_EQ(degree(g, 0), 2u);
}

TEST(CnmTest, DegreeSumAndLoopMean) {
  double loops = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Multigraph g = sample_cnm(1000, 1000, seed);
    std::size_t sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    ASSERT_EQ(sum, 2000u);
    for (const Edge& e : g.edges()) loops += e.is_loop();
  }
  // Loop count is Binomial(1000, 1/1000).
  const double sigma = std::sqrt(1000 * 0.001 * 0.999 / 200);
  EXPECT_NEAR(loops / 200, 1.0, 3 * sigma);
}

TEST(CnmTest, ConditionedOnSimpleIsGnm) {
  std::map<EdgeMultiset, double> cnm;
  std::map<EdgeMultiset, double> gnm;
  double accepted = 0;
  for (std::uint64_t seed = 0; seed < 100000; ++seed) {
    const Multigraph g = sample_cnm(4, 3, seed);
    gnm[canonical(sample_gnm(4, 3, seed))] += 1;
    if (!is_simple(g)) continue;
    cnm[canonical(g)] += 1;
    accepted += 1;
  }
  std::map<EdgeMultiset, double> uniform;
  for (const auto& [key, c] : gnm) uniform[key] = 1.0 / 20;
  ASSERT_EQ(uniform.size(), 20u);
  expect_matches_law(uniform, cnm, accepted);
  expect_matches_law(uniform, gnm, 100000);
}

TEST(CnmMindegTest, ForcedOutcomes) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Multigraph g = sample_cnm_mindeg(2, 3, 3, seed);
    EXPECT_EQ(g.degree(0), 3u);
    EXPECT_EQ(g.degree(1), 3u);
  }
  const Multigraph h = sample_cnm_mindeg(1, 2, 3, 5);
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(h.degree(0), 4u);
  EXPECT_THROW(sample_cnm_mindeg(3, 4, 3, 1), InvalidArgument);
}

TEST(CnmMindegTest, RetryLimit) {
  // With n=50, m=75 every degree must be exactly 3; one try almost never
  // succeeds.
  EXPECT_THROW(sample_cnm_mindeg(50, 75, 3, 1, 2), LimitExceeded);
}

TEST(CnmMindegTest, MatchesEnumeratedLaw) {
  const auto law = enumerate_cnm(3, 5, [](const Multigraph& g) {
    return min_degree(g) >= 3;
  });
  std::map<EdgeMultiset, double> counts;
  const int samples = 100000;
  for (int seed = 0; seed < samples; ++seed) {
    counts[canonical(sample_cnm_mindeg(3, 5, 3, seed))] += 1;
  }
  expect_matches_law(law, counts, samples);
}

TEST(PairingTest, SmallSequences) {
  const Multigraph loop = sample_pairing({2}, 1);
  ASSERT_EQ(loop.edge_count(), 1u);
  EXPECT_TRUE(loop.edge(0).is_loop());
  const Multigraph edge = sample_pairing({1, 1}, 1);
  ASSERT_EQ(edge.edge_count(), 1u);
  EXPECT_EQ(edge.edge(0).other(0), 1u);
  EXPECT_THROW(sample_pairing({1, 2}, 1), InvalidArgument);
}

TEST(PairingTest, TripleEdgeFraction) {
  // Of the 15 matchings of 3 + 3 points, 3! = 6 pair every point across.
  const int samples = 100000;
  int triple = 0;
  for (int seed = 0; seed < samples; ++seed) {
    const Multigraph g = sample_pairing({3, 3}, seed);
    bool all_cross = true;
    for (const Edge& e : g.edges()) all_cross = all_cross && !e.is_loop();
    triple += all_cross;
  }
  const double p = 6.0 / 15;
  EXPECT_NEAR(triple, samples * p, 3 * std::sqrt(samples * p * (1 - p)));
}

TEST(PairingTest, MatchesConfigurationModelGivenDegrees) {
  const std::vector<std::size_t> d = {3, 3, 2};
  const auto law = enumerate_cnm(3, 4, [&](const Multigraph& g) {
    for (VertexId v = 0; v < 3; ++v) {
      if (g.degree(v) != d[v]) return false;
    }
    return true;
  });
  std::map<EdgeMultiset, double> counts;
  const int samples = 100000;
  for (int seed = 0; seed < samples; ++seed) {
    const Multigraph g = sample_pairing(d, seed);
    for (VertexId v = 0; v < 3; ++v) ASSERT_EQ(g.degree(v), d[v]);
    counts[canonical(g)] += 1;
  }
  double chi2 = 0;
  for (const auto& [key, p] : law) {
    const double expected = p * samples;
    const double diff = counts[key] - expected;
    chi2 += diff * diff / expected;
  }
  const double df = static_cast<double>(law.size() - 1);
  EXPECT_LT(chi2, df + 5 * std::sqrt(2 * df));
}

TEST(KernelDegreesTest, SingleCellAndPostconditions) {
  EXPECT_EQ(sample_kernel_degrees(1, 7, 3), DegreeSequence{14});
  EXPECT_EQ(sample_kernel_degrees(4, 6, 3), DegreeSequence(4, 3));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DegreeSequence d = sample_kernel_degrees(100, 170, seed);
    std::size_t sum = 0;
    for (std::size_t x : d) {
      EXPECT_GE(x, 3u);
      sum += x;
    }
    EXPECT_EQ(sum, 340u);
  }
  EXPECT_THROW(sample_kernel_degrees(10, 14, 1), InvalidArgument);
}

TEST(KernelDegreesTest, ConditionedMultinomialLaw) {
  // 8 throws into 2 cells: P(d1 = k) is proportional to C(8, k), k = 3, 4, 5.
  const int samples = 100000;
  std::map<std::size_t, double> counts;
  for (int seed = 0; seed < samples; ++seed) {
    const DegreeSequence d = sample_kernel_degrees(2, 4, seed);
    ASSERT_EQ(d[0] + d[1], 8u);
    counts[d[0]] += 1;
  }
  const std::map<std::size_t, double> law = {
      {3, 56.0 / 182}, {4, 70.0 / 182}, {5, 56.0 / 182}};
  ASSERT_EQ(counts.size(), 3u);
  for (const auto& [k, p] : law) {
    EXPECT_NEAR(counts[k], samples * p, 5 * std::sqrt(samples * p * (1 - p)));
  }
}

TEST(KernelDegreesTest, TruncatedPoissonRate) {
  for (double mean : {3.2, 3.4, 4.0, 6.0, 20.0}) {
    const double l = truncated_poisson_rate(mean);
    const double p0 = std::exp(-l);
    const double p1 = l * p0;
    const double p2 = l * p1 / 2;
    // E[X | X >= 3] = (l - p1 - 2 p2) / (1 - p0 - p1 - p2).
    EXPECT_NEAR((l - p1 - 2 * p2) / (1 - p0 - p1 - p2), mean, 1e-9);
  }
  EXPECT_THROW(truncated_poisson_rate(3.0), InvalidArgument);
}

TEST(OrderedAssignmentTest, EmptyItems) {
  const auto lists = random_ordered_assignment(4, 0, 1);
  ASSERT_EQ(lists.size(), 4u);
  for (const auto& l : lists) EXPECT_TRUE(l.empty());
  EXPECT_THROW(random_ordered_assignment(0, 1, 1), InvalidArgument);
}

TEST(OrderedAssignmentTest, SingleEdgeOrderingsUniform) {
  std::map<std::vector<std::uint32_t>, double> counts;
  const int samples = 100000;
  for (int seed = 0; seed < samples; ++seed) {
    counts[random_ordered_assignment(1, 3, seed)[0]] += 1;
  }
  ASSERT_EQ(counts.size(), 6u);
  double chi2 = 0;
  for (const auto& [key, c] : counts) {
    chi2 += (c - samples / 6.0) * (c - samples / 6.0) / (samples / 6.0);
  }
  // 99.99th percentile of chi-square with 5 degrees of freedom.
  EXPECT_LT(chi2, 25.7);
}

TEST(OrderedAssignmentTest, TwoEdgesTwoItemsEnumerated) {
  // Each of the 2 * 3 = 6 (assignment, ordering) configurations has
  // probability 1/6.
  std::map<std::vector<std::vector<std::uint32_t>>, double> counts;
  const int samples = 60000;
  for (int seed = 0; seed < samples; ++seed) {
    counts[random_ordered_assignment(2, 2, seed)] += 1;
  }
  ASSERT_EQ(counts.size(), 6u);
  const double p = 1.0 / 6;
  for (const auto& [key, c] : counts) {
    EXPECT_NEAR(c, samples * p, 5 * std::sqrt(samples * p * (1 - p)));
  }
}

TEST(GiantConstantsTest, KnownValues) {
  const GiantConstants two = giant_constants(2.0);
  EXPECT_NEAR(two.t, 0.40637, 1e-5);
  EXPECT_NEAR(two.b, 0.79681, 1e-5);
  EXPECT_NEAR(two.b_core, 0.4730, 1e-4);
  const GiantConstants mid = giant_constants(1.5);
  EXPECT_NEAR(mid.t, 0.6257, 1e-4);
  EXPECT_NEAR(mid.b, 0.5829, 1e-4);
  EXPECT_THROW(giant_constants(1.0), InvalidArgument);
}

TEST(GiantConstantsTest, RootResidualAndMonotonicity) {
  double prev = 0.0;
  for (int i = 11; i <= 100; ++i) {
    const double c = i / 10.0;
    const GiantConstants k = giant_constants(c);
    EXPECT_NEAR(k.t * std::exp(-k.t), c * std::exp(-c), 1e-12);
    EXPECT_GT(k.t, 0.0);
    EXPECT_LT(k.t, 1.0);
    EXPECT_DOUBLE_EQ(k.b, 1 - k.t / c);
    EXPECT_GT(k.b, prev);
    prev = k.b;
  }
  const GiantConstants near_one = giant_constants(1.0001);
  EXPECT_GT(near_one.t, 0.999);
  EXPECT_LT(near_one.b, 0.001);
}

TEST(EdgesForAverageDegreeTest, Rounds) {
  EXPECT_EQ(edges_for_average_degree(1000, 2.0), 1000u);
  EXPECT_EQ(edges_for_average_degree(3, 1.0), 2u);
}

}  // namespace
}  // namespace coremix
