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

#include "coremix/multigraph.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <unordered_set>

#include "coremix/error.h"

namespace coremix {

Multigraph::Multigraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : adjacency_(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  if (!valid(u) || !valid(v)) {
    throw InvalidArgument("add_edge: endpoint out of range (" +
                          std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v});
  adjacency_[u].push_back({id, v});
  adjacency_[v].push_back({id, u});
  return id;
}

std::size_t Multigraph::degree(VertexId v) const {
  if (!valid(v)) {
    throw InvalidArgument("degree: invalid vertex id " + std::to_string(v));
  }
  return adjacency_[v].size();
}

std::size_t degree(const Multigraph& g, VertexId v) { return g.degree(v); }

std::size_t min_degree(const Multigraph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    best = std::min(best, g.incident(v).size());
  }
  return g.empty() ? 0 : best;
}

ComponentPartition connected_components(const Multigraph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  ComponentPartition out;
  out.component_of.assign(g.vertex_count(), kUnset);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (out.component_of[root] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.sizes.size());
    out.sizes.push_back(0);
    out.edge_counts.push_back(0);
    out.component_of[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++out.sizes[id];
      for (const Incidence& inc : g.incident(v)) {
        if (out.component_of[inc.other] == kUnset) {
          out.component_of[inc.other] = id;
          stack.push_back(inc.other);
        }
      }
    }
  }
  for (const Edge& e : g.edges()) ++out.edge_counts[out.component_of[e.u]];
  return out;
}

bool is_connected(const Multigraph& g) {
  return connected_components(g).count() <= 1;
}

Subgraph make_subgraph(const Multigraph& g, std::span<const VertexId> vertices,
                       std::span<const EdgeId> edges) {
  Subgraph out;
  out.parent_vertex.assign(vertices.begin(), vertices.end());
  std::sort(out.parent_vertex.begin(), out.parent_vertex.end());
  out.parent_vertex.erase(
      std::unique(out.parent_vertex.begin(), out.parent_vertex.end()),
      out.parent_vertex.end());
  out.parent_edge.assign(edges.begin(), edges.end());
  std::sort(out.parent_edge.begin(), out.parent_edge.end());
  out.parent_edge.erase(
      std::unique(out.parent_edge.begin(), out.parent_edge.end()),
      out.parent_edge.end());

  constexpr auto kAbsent = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> local(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < out.parent_vertex.size(); ++i) {
    if (!g.valid(out.parent_vertex[i])) {
      throw InvalidArgument("make_subgraph: invalid vertex id");
    }
    local[out.parent_vertex[i]] = static_cast<VertexId>(i);
  }
  out.graph = Multigraph(out.parent_vertex.size());
  for (EdgeId e : out.parent_edge) {
    if (e >= g.edge_count()) {
      throw InvalidArgument("make_subgraph: invalid edge id");
    }
    const Edge& edge = g.edge(e);
    if (local[edge.u] == kAbsent || local[edge.v] == kAbsent) {
      throw InvalidArgument("make_subgraph: edge leaves the vertex set");
    }
    out.graph.add_edge(local[edge.u], local[edge.v]);
  }
  return out;
}

Subgraph induced_subgraph(const Multigraph& g,
                          std::span<const VertexId> vertices) {
  std::vector<char> member(g.vertex_count(), 0);
  for (VertexId v : vertices) {
    if (!g.valid(v)) throw InvalidArgument("induced_subgraph: invalid vertex");
    member[v] = 1;
  }
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (member[g.edge(e).u] && member[g.edge(e).v]) edges.push_back(e);
  }
  return make_subgraph(g, vertices, edges);
}

Subgraph extract_giant(const Multigraph& g) {
  if (g.empty()) return {};
  const ComponentPartition parts = connected_components(g);
  // Components are numbered by smallest vertex, so the first maximum wins ties.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(parts.sizes.begin(), parts.sizes.end()) -
      parts.sizes.begin());
  std::vector<VertexId> vertices;
  vertices.reserve(parts.sizes[best]);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (parts.component_of[v] == best) vertices.push_back(v);
  }
  return induced_subgraph(g, vertices);
}

Multigraph giant_component(const Multigraph& g) {
  return extract_giant(g).graph;
}

std::vector<std::int64_t> bfs_distances(const Multigraph& g, VertexId source) {
  if (!g.valid(source)) throw InvalidArgument("bfs_distances: invalid source");
  std::vector<std::int64_t> dist(g.vertex_count(), -1);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId v = queue[head];
    for (const Incidence& inc : g.incident(v)) {
      if (dist[inc.other] < 0) {
        dist[inc.other] = dist[v] + 1;
        queue.push_back(inc.other);
      }
    }
  }
  return dist;
}

namespace {

std::size_t eccentricity(const std::vector<std::int64_t>& dist) {
  std::int64_t ecc = 0;
  for (std::int64_t d : dist) {
    if (d < 0) throw InvalidArgument("diameter: graph is disconnected");
    ecc = std::max(ecc, d);
  }
  return static_cast<std::size_t>(ecc);
}

}  // namespace

std::size_t diameter(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  std::vector<std::size_t> lower(n, 0);
  std::vector<std::size_t> upper(n, std::numeric_limits<std::size_t>::max());
  std::vector<VertexId> candidates(n);
  for (VertexId v = 0; v < n; ++v) candidates[v] = v;

  std::size_t best_lower = 0;
  bool pick_high = true;
  while (!candidates.empty()) {
    // Alternate between the most promising and the least settled vertex.
    VertexId v = candidates.front();
    for (VertexId w : candidates) {
      const bool better =
          pick_high ? (upper[w] > upper[v] ||
                       (upper[w] == upper[v] && g.degree(w) > g.degree(v)))
                    : (lower[w] < lower[v] ||
                       (lower[w] == lower[v] && g.degree(w) > g.degree(v)));
      if (better) v = w;
    }
    pick_high = !pick_high;

    const auto dist = bfs_distances(g, v);
    const std::size_t ecc = eccentricity(dist);
    best_lower = std::max(best_lower, ecc);
    lower[v] = upper[v] = ecc;

    std::size_t best_upper = best_lower;
    std::vector<VertexId> next;
    next.reserve(candidates.size());
    for (VertexId w : candidates) {
      const auto d = static_cast<std::size_t>(dist[w]);
      lower[w] = std::max(lower[w], std::max(ecc - d, d));
      upper[w] = std::min(upper[w], ecc + d);
      best_lower = std::max(best_lower, lower[w]);
    }
    for (VertexId w : candidates) {
      if (w == v || upper[w] <= best_lower || lower[w] == upper[w]) continue;
      next.push_back(w);
      best_upper = std::max(best_upper, upper[w]);
    }
    candidates.swap(next);
    if (best_upper <= best_lower) break;
  }
  return best_lower;
}

std::size_t diameter_all_pairs(const Multigraph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    best = std::max(best, eccentricity(bfs_distances(g, v)));
  }
  return best;
}

std::size_t double_sweep_lower_bound(const Multigraph& g, VertexId v) {
  if (g.empty()) return 0;
  auto far_end = [&](VertexId from) {
    const auto dist = bfs_distances(g, from);
    VertexId arg = from;
    for (VertexId w = 0; w < dist.size(); ++w) {
      if (dist[w] > dist[arg]) arg = w;
    }
    return std::pair{arg, static_cast<std::size_t>(dist[arg])};
  };
  return far_end(far_end(v).first).second;
}

std::size_t longest_2path(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::size_t best = 0;
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root] || g.degree(root) != 2) continue;
    std::size_t size = 0;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++size;
      for (const Incidence& inc : g.incident(v)) {
        if (!seen[inc.other] && g.degree(inc.other) == 2) {
          seen[inc.other] = 1;
          stack.push_back(inc.other);
        }
      }
    }
    best = std::max(best, size);
  }
  return best;
}

bool is_simple(const Multigraph& g) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(g.edge_count() * 2);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return false;
    const std::uint64_t a = std::min(e.u, e.v);
    const std::uint64_t b = std::max(e.u, e.v);
    if (!seen.insert((a << 32) | b).second) return false;
  }
  return true;
}

}  // namespace coremix
