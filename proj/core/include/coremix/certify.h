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

// Certification of decorated expanders: densest subgraphs, kernel expansion
// ratios, decorations of a subgraph B, and the three conditions of an
// alpha-AN graph with B as witness.

#ifndef COREMIX_CERTIFY_H_
#define COREMIX_CERTIFY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coremix/counting.h"
#include "coremix/multigraph.h"
#include "coremix/spectral.h"
#include "coremix/strip.h"

namespace coremix {

struct DensestSubgraph {
  std::size_t edges = 0;     // |E(S)|, loops counted once
  std::size_t vertices = 0;  // |S|
  double density = 0.0;
  std::vector<VertexId> witness;
};

// Exact max |E(S)|/|S| via Goldberg's max-flow reduction. Throws on an empty
// graph.
DensestSubgraph densest_subgraph(const Multigraph& g);

// e(S)/d(S): edges leaving S over the degree sum of S. Throws InvalidArgument
// if S is empty or d(S) > |E(g)|.
Rational kernel_expansion_ratio(const Multigraph& g,
                                const std::vector<VertexId>& set);

// Components D_i of g minus the vertices of B.
struct DecorationReport {
  std::vector<std::vector<VertexId>> components;
  std::vector<std::size_t> eprime;  // edges with an end in D_i
  std::vector<VertexId> b_vertices;  // sorted
  std::vector<std::size_t> attach_count;  // aligned with b_vertices
  std::size_t b_induced_edges = 0;
};

DecorationReport decorations(const Multigraph& g,
                             const std::vector<VertexId>& b_vertices);

struct ANCertificate {
  double alpha = 0.0;
  std::size_t b_vertices = 0;
  std::size_t b_edges = 0;
  std::size_t graph_edges = 0;

  bool condition1 = false;
  double phi = 0.0;       // exact value or spectral lower bound
  double phi_upper = 0.0;
  std::string phi_method;  // "exact", "spectral", "trivial" or "none"
  std::string condition1_reason;

  bool condition2 = false;
  std::size_t decorations = 0;
  std::size_t max_eprime = 0;
  std::optional<std::size_t> violating_lambda;
  std::string condition2_reason;

  bool condition3 = false;
  std::size_t max_attach = 0;
  std::optional<VertexId> violating_vertex;

  bool pass = false;
  nlohmann::json strip_summary;  // filled by check_strong_core
};

void to_json(nlohmann::json& j, const ANCertificate& c);

// B is a subgraph of g given by vertex and edge sets. Throws InvalidArgument
// unless 0 < alpha <= 1.
ANCertificate check_AN(const Multigraph& g, const Subgraph& b, double alpha);

// B is the subgraph of g induced on b_vertices.
ANCertificate check_AN(const Multigraph& g,
                       const std::vector<VertexId>& b_vertices, double alpha);

// Runs severe stripping and certifies B = R_N(g). Throws InvalidArgument if g
// is disconnected or R_N(g) is empty.
ANCertificate check_strong_core(const Multigraph& g, std::size_t N,
                                double alpha, std::uint64_t seed);

}  // namespace coremix

#endif  // COREMIX_CERTIFY_H_
