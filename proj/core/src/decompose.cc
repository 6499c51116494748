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

#include "coremix/decompose.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coremix/error.h"

namespace coremix {
namespace {

constexpr auto kNone = std::numeric_limits<VertexId>::max();

// Follows a 2-path starting from `start` along incidence `first`. Returns the
// far endpoint; interior vertices and walked edges are appended.
VertexId walk_2path(const Multigraph& g, VertexId start, const Incidence& first,
                    std::vector<char>& edge_used,
                    std::vector<VertexId>& interior,
                    std::vector<EdgeId>& walked) {
  (void)start;
  EdgeId edge = first.edge;
  VertexId at = first.other;
  edge_used[edge] = 1;
  walked.push_back(edge);
  while (g.degree(at) == 2) {
    auto inc = g.incident(at);
    // The incidence not belonging to the edge we arrived on. A loop at a
    // degree-2 vertex closes an isolated cycle and never reaches here.
    const Incidence& next = inc[0].edge == edge ? inc[1] : inc[0];
    if (edge_used[next.edge]) break;  // closed a cycle
    interior.push_back(at);
    edge = next.edge;
    edge_used[edge] = 1;
    walked.push_back(edge);
    at = next.other;
  }
  return at;
}

}  // namespace

Subgraph two_core(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (const Incidence& inc : g.incident(v)) {
      const VertexId w = inc.other;
      if (removed[w]) continue;
      if (--deg[w] <= 1) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Subgraph trimmed_core(const Multigraph& g) {
  const Subgraph core = two_core(g);
  const ComponentPartition parts = connected_components(core.graph);
  std::vector<char> is_cycle(parts.count(), 1);
  for (VertexId v = 0; v < core.graph.vertex_count(); ++v) {
    if (core.graph.degree(v) != 2) is_cycle[parts.component_of[v]] = 0;
  }
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < core.graph.vertex_count(); ++v) {
    if (!is_cycle[parts.component_of[v]]) keep.push_back(core.parent_vertex[v]);
  }
  return induced_subgraph(g, keep);
}

KernelResult kernel(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  KernelResult out;
  out.input_vertex_count = n;
  out.input_edge_count = g.edge_count();
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) < 2) {
      throw InvalidArgument("kernel: vertex " + std::to_string(v) +
                            " has degree " + std::to_string(g.degree(v)) +
                            " < 2");
    }
  }

  std::vector<VertexId> kernel_id(n, kNone);
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) {
      kernel_id[v] = static_cast<VertexId>(out.kernel_vertex.size());
      out.kernel_vertex.push_back(v);
    }
  }
  out.kernel = Multigraph(out.kernel_vertex.size());

  std::vector<char> edge_used(g.edge_count(), 0);
  for (VertexId v : out.kernel_vertex) {
    for (const Incidence& inc : g.incident(v)) {
      if (edge_used[inc.edge]) continue;
      std::vector<VertexId> interior;
      std::vector<EdgeId> walked;
      const VertexId w = walk_2path(g, v, inc, edge_used, interior, walked);
      VertexId a = kernel_id[v];
      VertexId b = kernel_id[w];
      if (a > b) {
        std::swap(a, b);
        std::reverse(interior.begin(), interior.end());
        std::reverse(walked.begin(), walked.end());
      }
      out.kernel.add_edge(a, b);
      out.path_map.push_back(std::move(interior));
      out.path_edges.push_back(std::move(walked));
    }
  }

  // Whatever is left consists of bare cycles.
  std::vector<char> vertex_seen(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (kernel_id[v] != kNone || vertex_seen[v]) continue;
    const auto inc = g.incident(v);
    if (edge_used[inc[0].edge] || edge_used[inc[1].edge]) continue;
    std::vector<VertexId> cycle{v};
    std::vector<EdgeId> edges;
    vertex_seen[v] = 1;
    EdgeId edge = inc[0].edge;
    VertexId at = inc[0].other;
    edge_used[edge] = 1;
    edges.push_back(edge);
    while (at != v) {
      vertex_seen[at] = 1;
      cycle.push_back(at);
      const auto a_inc = g.incident(at);
      const Incidence& next = a_inc[0].edge == edge ? a_inc[1] : a_inc[0];
      edge = next.edge;
      edge_used[edge] = 1;
      edges.push_back(edge);
      at = next.other;
    }
    out.dropped_cycles.push_back(std::move(cycle));
    out.dropped_cycle_edges.push_back(std::move(edges));
  }
  return out;
}

Multigraph expand_kernel(const KernelResult& k) {
  std::vector<Edge> edges(k.input_edge_count);
  std::vector<char> filled(k.input_edge_count, 0);
  auto place = [&](const std::vector<VertexId>& seq,
                   const std::vector<EdgeId>& walked) {
    for (std::size_t i = 0; i < walked.size(); ++i) {
      edges[walked[i]] = {seq[i], seq[(i + 1) % seq.size()]};
      filled[walked[i]] = 1;
    }
  };
  for (EdgeId e = 0; e < k.kernel.edge_count(); ++e) {
    std::vector<VertexId> seq;
    seq.push_back(k.kernel_vertex[k.kernel.edge(e).u]);
    seq.insert(seq.end(), k.path_map[e].begin(), k.path_map[e].end());
    seq.push_back(k.kernel_vertex[k.kernel.edge(e).v]);
    // Non-cyclic sequence: one more vertex than edges, no wrap-around.
    for (std::size_t i = 0; i < k.path_edges[e].size(); ++i) {
      edges[k.path_edges[e][i]] = {seq[i], seq[i + 1]};
      filled[k.path_edges[e][i]] = 1;
    }
  }
  for (std::size_t c = 0; c < k.dropped_cycles.size(); ++c) {
    place(k.dropped_cycles[c], k.dropped_cycle_edges[c]);
  }
  if (std::find(filled.begin(), filled.end(), 0) != filled.end()) {
    throw InvalidArgument("expand_kernel: kernel does not cover every edge");
  }
  return Multigraph(k.input_vertex_count, std::move(edges));
}

std::vector<TwoPath> maximal_2paths(const Multigraph& g) {
  const KernelResult k = kernel(g);
  std::vector<TwoPath> out;
  out.reserve(k.kernel.edge_count());
  for (EdgeId e = 0; e < k.kernel.edge_count(); ++e) {
    out.push_back({k.path_map[e].size(), k.kernel_vertex[k.kernel.edge(e).u],
                   k.kernel_vertex[k.kernel.edge(e).v]});
  }
  return out;
}

ForestStats attached_forest(const Multigraph& giant, const Subgraph& core) {
  if (core.graph.empty()) {
    throw InvalidArgument("attached_forest: empty core");
  }
  const std::size_t n = giant.vertex_count();
  std::vector<VertexId> root(n, kNone);
  std::vector<VertexId> queue;
  for (VertexId i = 0; i < core.parent_vertex.size(); ++i) {
    const VertexId v = core.parent_vertex[i];
    if (!giant.valid(v)) throw InvalidArgument("attached_forest: bad core");
    root[v] = i;
    queue.push_back(v);
  }
  ForestStats out;
  out.s = core.parent_vertex.size();
  out.tree_size.assign(out.s, 0);
  std::vector<char> in_core(n, 0);
  for (VertexId v : core.parent_vertex) in_core[v] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (const Incidence& inc : giant.incident(v)) {
      if (root[inc.other] != kNone) continue;
      root[inc.other] = root[v];
      ++out.tree_size[root[v]];
      queue.push_back(inc.other);
    }
  }
  out.r = n - out.s;
  if (queue.size() != n) {
    throw InvalidArgument("attached_forest: giant is not connected");
  }
  // A forest hanging off the core has exactly one edge per non-core vertex.
  std::size_t forest_edges = 0;
  for (const Edge& e : giant.edges()) {
    if (!in_core[e.u] || !in_core[e.v]) ++forest_edges;
  }
  if (forest_edges != out.r) {
    throw InvalidArgument("attached_forest: core is not the 2-core of giant");
  }
  out.rho = static_cast<double>(out.s) / static_cast<double>(out.s + out.r);
  return out;
}

TailFit tail_statistics(std::span<const std::size_t> values, double rate_min) {
  if (values.size() < kMinTailSample) {
    throw InvalidArgument("tail_statistics: need at least " +
                          std::to_string(kMinTailSample) + " values, got " +
                          std::to_string(values.size()));
  }
  TailFit fit;
  fit.rate_min = rate_min;
  fit.sample_size = values.size();
  const std::size_t max_value = *std::max_element(values.begin(), values.end());
  std::vector<std::size_t> counts(max_value + 2, 0);
  for (std::size_t x : values) ++counts[x];
  const auto total = static_cast<double>(values.size());
  std::size_t at_least = values.size();
  for (std::size_t j = 0; j <= max_value + 1; ++j) {
    fit.ccdf.emplace_back(j, static_cast<double>(at_least) / total);
    at_least -= counts[j];
  }

  const double floor = 5.0 / total;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [j, frac] : fit.ccdf) {
    if (frac < floor) continue;
    const auto x = static_cast<double>(j);
    const double y = std::log(frac);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++fit.eligible_points;
  }
  if (fit.eligible_points < 2) {
    // Mass collapses before a second point is resolvable: trivially light.
    fit.slope = -std::numeric_limits<double>::infinity();
    fit.intercept = 0.0;
    fit.pass = true;
    fit.note = "fewer than two eligible ccdf points";
    return fit;
  }
  const auto k = static_cast<double>(fit.eligible_points);
  fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / k;
  fit.pass = fit.slope <= -rate_min;
  return fit;
}

}  // namespace coremix
