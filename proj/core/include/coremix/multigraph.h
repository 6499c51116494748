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

// Undirected multigraph with loops, and the elementary queries every other
// module builds on.
//
// Vertices are 0..vertex_count()-1. Edges keep the id they were added with;
// a loop is stored once in the edge list and twice in its vertex's adjacency,
// so it contributes 2 to the degree. Subgraph extraction renumbers vertices
// and edges preserving their relative order and records the map back to the
// parent.

#ifndef COREMIX_MULTIGRAPH_H_
#define COREMIX_MULTIGRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace coremix {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  EdgeId edge = 0;
  VertexId other = 0;
};

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count);
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  EdgeId add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return adjacency_.empty(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  // Each loop at v appears twice.
  std::span<const Incidence> incident(VertexId v) const {
    return adjacency_[v];
  }

  // Throws InvalidArgument on an out-of-range id.
  std::size_t degree(VertexId v) const;

  bool valid(VertexId v) const { return v < adjacency_.size(); }

  // Same vertex count and identical edge sequence.
  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// A subgraph together with its embedding into a parent graph. Both maps are
// strictly increasing.
struct Subgraph {
  Multigraph graph;
  std::vector<VertexId> parent_vertex;
  std::vector<EdgeId> parent_edge;
};

struct ComponentPartition {
  // Components are numbered in order of their smallest vertex.
  std::vector<std::uint32_t> component_of;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> edge_counts;

  std::size_t count() const { return sizes.size(); }
};

std::size_t degree(const Multigraph& g, VertexId v);
std::size_t min_degree(const Multigraph& g);

ComponentPartition connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Induced subgraph on `vertices` (any order, duplicates ignored).
Subgraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices);

// Subgraph with the given vertex set and edge set; every edge must have both
// ends in the vertex set.
Subgraph make_subgraph(const Multigraph& g, std::span<const VertexId> vertices,
                       std::span<const EdgeId> edges);

// Largest component by vertex count, ties to the component holding the
// smallest vertex id. Empty input gives an empty result.
Subgraph extract_giant(const Multigraph& g);
Multigraph giant_component(const Multigraph& g);

// Unreachable vertices get -1.
std::vector<std::int64_t> bfs_distances(const Multigraph& g, VertexId source);

// Exact diameter using eccentricity bounds (Takes & Kosters); usually a
// handful of BFS runs on sparse graphs. Throws on disconnected input.
std::size_t diameter(const Multigraph& g);

// Exact diameter by one BFS per vertex.
std::size_t diameter_all_pairs(const Multigraph& g);

// Eccentricity of the far end of a BFS from the far end of a BFS from v.
// A lower bound on the diameter of v's component.
std::size_t double_sweep_lower_bound(const Multigraph& g, VertexId v = 0);

// Vertex count of the largest maximal path (or cycle) made only of vertices of
// degree exactly 2.
std::size_t longest_2path(const Multigraph& g);

bool is_simple(const Multigraph& g);

}  // namespace coremix

#endif  // COREMIX_MULTIGRAPH_H_
