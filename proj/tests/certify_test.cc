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

#include "coremix/certify.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "coremix/error.h"
#include "coremix/rng.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace coremix {
namespace {

using ::coremix::testing::append_graph;
using ::coremix::testing::brute_densest;
using ::coremix::testing::complete_graph;
using ::coremix::testing::cycle_graph;
using ::coremix::testing::make_graph;
using ::coremix::testing::path_graph;
using ::coremix::testing::random_connected;
using ::testing::ElementsAre;

std::vector<VertexId> iota_set(std::size_t n) {
  std::vector<VertexId> out(n);
  std::iota(out.begin(), out.end(), VertexId{0});
  return out;
}

VertexId new_vertex(Multigraph& g) { return append_graph(g, Multigraph(1)); }

// K4 on {0..3} with one pendant vertex hanging off each corner.
Multigraph k4_with_pendants() {
  Multigraph g = complete_graph(4);
  for (VertexId v = 0; v < 4; ++v) g.add_edge(v, new_vertex(g));
  return g;
}

TEST(DensestSubgraphTest, HandValues) {
  EXPECT_DOUBLE_EQ(densest_subgraph(cycle_graph(5)).density, 1.0);
  const DensestSubgraph k4 = densest_subgraph(complete_graph(4));
  EXPECT_EQ(k4.edges, 6u);
  EXPECT_EQ(k4.vertices, 4u);
  EXPECT_DOUBLE_EQ(k4.density, 1.5);
  EXPECT_DOUBLE_EQ(densest_subgraph(Multigraph(3)).density, 0.0);
  EXPECT_THROW(densest_subgraph(Multigraph(0)), InvalidArgument);
}

TEST(DensestSubgraphTest, FindsDenseBlockInsideSparseGraph) {
  Multigraph g = path_graph(30);
  const VertexId off = append_graph(g, complete_graph(5));
  g.add_edge(0, off);
  const DensestSubgraph d = densest_subgraph(g);
  EXPECT_DOUBLE_EQ(d.density, 2.0);
  EXPECT_THAT(d.witness, ElementsAre(off, off + 1, off + 2, off + 3, off + 4));
}

TEST(DensestSubgraphTest, MatchesSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const Multigraph g = random_connected(n, seed % 15, seed, seed % 2 == 0);
    const Rational brute = brute_densest(g);
    const DensestSubgraph d = densest_subgraph(g);
    ASSERT_EQ(Rational(static_cast<long long>(d.edges),
                       static_cast<long long>(d.vertices)),
              brute)
        << "seed " << seed;
    ASSERT_EQ(d.vertices, d.witness.size());
    std::uint32_t mask = 0;
    for (VertexId v : d.witness) mask |= 1u << v;
    EXPECT_EQ(::coremix::testing::edges_inside(g, mask), d.edges);
  }
}

TEST(KernelExpansionRatioTest, HandValues) {
  const Multigraph k4 = complete_graph(4);
  EXPECT_EQ(kernel_expansion_ratio(k4, {0}), Rational(1));
  EXPECT_EQ(kernel_expansion_ratio(k4, {0, 1}), Rational(2, 3));
  // Duplicates are ignored.
  EXPECT_EQ(kernel_expansion_ratio(k4, {1, 0, 1}), Rational(2, 3));
  EXPECT_THROW(kernel_expansion_ratio(k4, {0, 1, 2}), InvalidArgument);
  EXPECT_THROW(kernel_expansion_ratio(k4, {}), InvalidArgument);
  EXPECT_THROW(kernel_expansion_ratio(k4, {9}), InvalidArgument);
  // A loop adds 2 to d(S) and nothing to e(S).
  const Multigraph loopy = make_graph(3, {{0, 0}, {0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(kernel_expansion_ratio(loopy, {0}), Rational(1, 2));
}

TEST(DecorationsTest, PendantsAndPaths) {
  Multigraph g = complete_graph(4);
  const VertexId a = new_vertex(g);
  const VertexId b = new_vertex(g);
  const VertexId c = new_vertex(g);
  g.add_edge(0, a);
  g.add_edge(a, b);
  g.add_edge(b, 1);  // D = {a, b} touches 0 and 1
  g.add_edge(0, c);
  g.add_edge(0, c);  // D = {c} via a double edge
  const DecorationReport r = decorations(g, {3, 2, 1, 0, 0});
  EXPECT_THAT(r.b_vertices, ElementsAre(0, 1, 2, 3));
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_THAT(r.components[0], ElementsAre(a, b));
  EXPECT_THAT(r.components[1], ElementsAre(c));
  EXPECT_THAT(r.eprime, ElementsAre(3, 2));
  EXPECT_THAT(r.attach_count, ElementsAre(2, 1, 0, 0));
  EXPECT_EQ(r.b_induced_edges, 6u);
  EXPECT_THROW(decorations(g, {99}), InvalidArgument);
}

TEST(DecorationsTest, PartitionIdentity) {
  Rng rng(7);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 2 + seed % 30;
    const Multigraph g = random_connected(n, seed % 20, seed);
    std::vector<VertexId> b;
    for (VertexId v = 0; v < n; ++v) {
      if (rng.uniform() < 0.4) b.push_back(v);
    }
    const DecorationReport r = decorations(g, b);
    std::size_t covered = r.b_vertices.size();
    for (const auto& comp : r.components) covered += comp.size();
    EXPECT_EQ(covered, n);
    EXPECT_EQ(std::accumulate(r.eprime.begin(), r.eprime.end(),
                              r.b_induced_edges),
              g.edge_count());
    std::size_t attachments = 0;
    for (std::size_t x : r.attach_count) attachments += x;
    // Each attachment is a distinct (B vertex, decoration) pair; every
    // decoration of a connected graph has at least one when B is nonempty.
    if (!b.empty()) {
      EXPECT_GE(attachments, r.components.size());
    }
  }
}

TEST(CheckANTest, CycleExpansionThreshold) {
  const Multigraph c4 = cycle_graph(4);
  const ANCertificate pass = check_AN(c4, iota_set(4), 0.4);
  EXPECT_TRUE(pass.condition1);
  EXPECT_TRUE(pass.condition2);
  EXPECT_TRUE(pass.condition3);
  EXPECT_TRUE(pass.pass);
  EXPECT_DOUBLE_EQ(pass.phi, 0.5);
  EXPECT_EQ(pass.phi_method, "exact");
  const ANCertificate fail = check_AN(c4, iota_set(4), 0.6);
  EXPECT_FALSE(fail.condition1);
  EXPECT_FALSE(fail.pass);
  EXPECT_FALSE(fail.condition1_reason.empty());
}

TEST(CheckANTest, AttachmentLimit) {
  Multigraph g = complete_graph(4);
  g.add_edge(0, new_vertex(g));
  g.add_edge(0, new_vertex(g));
  const ANCertificate cert = check_AN(g, iota_set(4), 1.0);
  EXPECT_FALSE(cert.condition3);
  EXPECT_EQ(cert.max_attach, 2u);
  ASSERT_TRUE(cert.violating_vertex.has_value());
  EXPECT_EQ(*cert.violating_vertex, 0u);
  EXPECT_TRUE(check_AN(g, iota_set(4), 0.5).condition3);
}

TEST(CheckANTest, LongDecorationViolatesTail) {
  Multigraph g = complete_graph(4);
  const VertexId off = append_graph(g, path_graph(20));
  g.add_edge(0, off);
  const ANCertificate cert = check_AN(g, iota_set(4), 0.5);
  EXPECT_TRUE(cert.condition1);
  EXPECT_FALSE(cert.condition2);
  ASSERT_TRUE(cert.violating_lambda.has_value());
  EXPECT_EQ(*cert.violating_lambda, 20u);
  EXPECT_EQ(cert.max_eprime, 20u);
}

TEST(CheckANTest, DisconnectedWitness) {
  Multigraph g = cycle_graph(6);
  const ANCertificate cert = check_AN(g, std::vector<VertexId>{0, 3}, 0.1);
  EXPECT_FALSE(cert.condition1);
  EXPECT_EQ(cert.condition1_reason, "B is disconnected");
  EXPECT_EQ(cert.phi_method, "none");
}

TEST(CheckANTest, AlphaRange) {
  EXPECT_THROW(check_AN(cycle_graph(4), iota_set(4), 0.0), InvalidArgument);
  EXPECT_THROW(check_AN(cycle_graph(4), iota_set(4), 1.5), InvalidArgument);
}

TEST(CheckANTest, MonotoneInAlpha) {
  Rng rng(11);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 3 + seed % 25;
    const Multigraph g = random_connected(n, n / 2 + seed % 8, seed);
    std::vector<VertexId> b;
    for (VertexId v = 0; v < n; ++v) {
      if (rng.uniform() < 0.6) b.push_back(v);
    }
    if (b.empty()) b.push_back(0);
    bool passed = false;
    for (double alpha : {1.0, 0.7, 0.5, 0.3, 0.2, 0.1, 0.05, 0.02, 0.01}) {
      const ANCertificate cert = check_AN(g, b, alpha);
      // Once a condition holds it keeps holding as alpha shrinks.
      if (passed) EXPECT_TRUE(cert.pass) << "seed " << seed << " alpha " << alpha;
      passed = passed || cert.pass;
    }
  }
}

TEST(CheckANTest, JsonFields) {
  const nlohmann::json j = check_AN(cycle_graph(4), iota_set(4), 0.4);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_TRUE(j.at("condition1").at("pass").get<bool>());
  EXPECT_TRUE(j.contains("condition2"));
  EXPECT_TRUE(j.contains("condition3"));
}

TEST(CheckStrongCoreTest, K4WithPendants) {
  const ANCertificate cert = check_strong_core(k4_with_pendants(), 10, 0.2, 1);
  EXPECT_EQ(cert.b_vertices, 4u);
  EXPECT_EQ(cert.b_edges, 6u);
  EXPECT_TRUE(cert.pass);
  EXPECT_TRUE(cert.strip_summary.is_object());
}

TEST(CheckStrongCoreTest, Errors) {
  EXPECT_THROW(check_strong_core(cycle_graph(8), 4, 0.2, 1), InvalidArgument);
  EXPECT_THROW(check_strong_core(make_graph(4, {{0, 1}, {2, 3}}), 4, 0.2, 1),
               InvalidArgument);
}

}  // namespace
}  // namespace coremix
