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

// Deterministic structural decompositions: the 2-core, the trimmed core (the
// 2-core without its isolated cycles), the kernel obtained by suppressing
// degree-2 vertices, the forest hanging off the 2-core, and empirical tail
// statistics.

#ifndef COREMIX_DECOMPOSE_H_
#define COREMIX_DECOMPOSE_H_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coremix/multigraph.h"

namespace coremix {

// Kernel of a graph of minimum degree >= 2.
//
// Kernel vertex i is input vertex kernel_vertex[i] (ascending). Kernel edge e
// runs from kernel.edge(e).u to kernel.edge(e).v with u <= v; path_map[e]
// lists the suppressed degree-2 input vertices met walking from u to v, and
// path_edges[e] the input edges walked (one more than the vertices). For
// loops the walk starts along the first unused incidence in u's adjacency.
// Components that are bare cycles are not part of the kernel; they are kept
// in dropped_cycles (vertices and edges in walking order).
struct KernelResult {
  Multigraph kernel;
  std::vector<VertexId> kernel_vertex;
  std::vector<std::vector<VertexId>> path_map;
  std::vector<std::vector<EdgeId>> path_edges;
  std::vector<std::vector<VertexId>> dropped_cycles;
  std::vector<std::vector<EdgeId>> dropped_cycle_edges;
  std::size_t input_vertex_count = 0;
  std::size_t input_edge_count = 0;
};

struct TwoPath {
  std::size_t length = 0;  // interior degree-2 vertices
  VertexId u = 0;          // endpoints, input vertex ids
  VertexId v = 0;
};

struct ForestStats {
  std::vector<std::size_t> tree_size;  // per core vertex, root excluded
  std::size_t r = 0;                   // giant vertices outside the core
  std::size_t s = 0;                   // core vertices
  double rho = 1.0;                    // s / (s + r)
};

struct TailFit {
  // (j, fraction of values >= j) for j = 0..max+1.
  std::vector<std::pair<std::size_t, double>> ccdf;
  std::size_t sample_size = 0;
  std::size_t eligible_points = 0;  // j with fraction >= 5 / sample_size
  double slope = 0.0;               // least squares fit of log fraction vs j
  double intercept = 0.0;
  double rate_min = 0.05;
  bool pass = false;
  std::string note;
};

inline constexpr double kDefaultTailRate = 0.05;
inline constexpr std::size_t kMinTailSample = 20;

// Maximum subgraph of minimum degree >= 2, by peeling degree <= 1 vertices.
Subgraph two_core(const Multigraph& g);

// 2-core minus components that are bare cycles; maps back to g.
Subgraph trimmed_core(const Multigraph& g);

// Throws InvalidArgument if g has a vertex of degree < 2.
KernelResult kernel(const Multigraph& g);

// Rebuilds the input of kernel(): edge ids as in the input, each edge
// oriented along its path.
Multigraph expand_kernel(const KernelResult& k);

std::vector<TwoPath> maximal_2paths(const Multigraph& g);

// `core` must be two_core(giant) and nonempty.
ForestStats attached_forest(const Multigraph& giant, const Subgraph& core);

// Throws InvalidArgument when fewer than kMinTailSample values are given.
TailFit tail_statistics(std::span<const std::size_t> values,
                        double rate_min = kDefaultTailRate);

}  // namespace coremix

#endif  // COREMIX_DECOMPOSE_H_
