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

// Severe stripping of the painted kernel, producing the N-reduced core, and an
// order-free fixpoint characterization of the same result used as an oracle.

#ifndef COREMIX_STRIP_H_
#define COREMIX_STRIP_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coremix/decompose.h"
#include "coremix/multigraph.h"
#include "coremix/rng.h"

namespace coremix {

enum class EdgeColor : std::uint8_t { kUncoloured, kPurple, kRed };
enum class VertexColor : std::uint8_t { kUncoloured, kPink, kRed };

const char* to_string(EdgeColor c);
const char* to_string(VertexColor c);

// One kernel edge of the evolving painted kernel. Endpoints are kernel vertex
// ids; interior and g_edges are ids in the original graph G, ordered from a
// to b.
struct KernelEdge {
  VertexId a = 0;
  VertexId b = 0;
  bool alive = true;
  EdgeColor color = EdgeColor::kUncoloured;
  std::size_t deg2_count = 0;   // interior degree-2 vertices
  std::size_t merge_count = 1;  // original kernel edges merged into this one
  std::vector<VertexId> interior;
  std::vector<EdgeId> g_edges;
};

// Painted kernel of the trimmed core of G together with the mutable state of
// the stripping process. Merged edges are appended, so the newest edge always
// carries the largest id.
class PaintedKernel {
 public:
  std::size_t N = 2;
  std::size_t g_vertex_count = 0;
  std::vector<VertexId> g_vertex;  // kernel vertex -> G vertex
  std::vector<KernelEdge> edges;
  std::vector<VertexColor> vertex_color;
  std::vector<char> vertex_alive;
  std::vector<std::uint32_t> losses;  // kernel half-edges lost so far
  std::vector<std::vector<EdgeId>> incident;  // loops listed twice

  std::size_t red_edge_count() const { return red_.size(); }
  std::size_t alive_edge_count() const;
  std::size_t original_edge_count() const { return original_edges_; }
  EdgeId red_edge(std::size_t i) const { return red_[i]; }
  std::size_t degree(VertexId v) const { return incident[v].size(); }

  // Recolours an edge, keeping the red index in sync. Red is final.
  void set_edge_color(EdgeId e, EdgeColor c);
  // Paints v red together with every incident edge.
  void paint_vertex_red(VertexId v);

  EdgeId add_edge(KernelEdge e);
  void remove_edge(EdgeId e);
  void remove_vertex(VertexId v);

  // Surviving graph as a subgraph of G.
  Subgraph expand(const Multigraph& g) const;

  // Internal consistency (colour and index invariants); for tests.
  bool check_invariants(std::string* why = nullptr) const;

 private:
  friend PaintedKernel paint_kernel(const Multigraph& g, std::size_t N);
  void detach(VertexId v, EdgeId e);

  std::vector<EdgeId> red_;
  std::vector<std::size_t> red_pos_;
  std::size_t original_edges_ = 0;
};

struct StepRecord {
  std::size_t step = 0;
  EdgeId chosen = 0;
  VertexId a = 0;  // G ids of the chosen edge's ends
  VertexId b = 0;
  std::vector<std::string> cases;
  std::vector<EdgeId> new_red_edges;
  std::vector<std::pair<VertexId, VertexColor>> recoloured;  // G ids
};

void to_json(nlohmann::json& j, const StepRecord& r);

struct StripTrace {
  std::size_t initial_red_edges = 0;
  std::size_t initial_red_vertices = 0;
  std::size_t kernel_vertices = 0;
  std::size_t kernel_edges = 0;
  std::size_t steps = 0;
  std::vector<StepRecord> records;  // empty unless recording was requested

  // One JSON object per line, one line per step.
  void write_json_lines(std::ostream& out) const;
  nlohmann::json summary() const;
};

struct StripParams {
  std::size_t N = 32;
  std::uint64_t seed = 0;
  bool record_trace = false;
};

struct StripResult {
  Subgraph reduced;  // R_N(G) inside G
  StripTrace trace;
};

// Builds the trimmed core G0 of g, its kernel, and the initial colouring.
// Throws InvalidArgument if N < 2 or the trimmed core is empty.
PaintedKernel paint_kernel(const Multigraph& g, std::size_t N);

// Removes one uniformly chosen red edge and applies the recolouring rules.
// Returns false (and does nothing) when no red edge is left.
bool strip_step(PaintedKernel& state, Rng& rng, StepRecord* record = nullptr);

// Runs stripping to exhaustion. An empty trimmed core gives an empty result.
StripResult severe_strip(const Multigraph& g, const StripParams& params);

// Closure of the recursive removal rules, computed on the original kernel.
// With an order seed, the vertices and chains are visited in a random order in
// each sweep; the result must not depend on it.
Subgraph reduced_core_fixpoint(const Multigraph& g, std::size_t N,
                               std::optional<std::uint64_t> order_seed = {});

}  // namespace coremix

#endif  // COREMIX_STRIP_H_
