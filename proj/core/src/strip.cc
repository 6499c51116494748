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

#include "coremix/strip.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <span>
#include <string>

#include "coremix/error.h"

namespace coremix {
namespace {

constexpr auto kNoEdge = std::numeric_limits<EdgeId>::max();

// Distinct neighbours of each G vertex lying outside G0 (0 for vertices not
// in G0).
std::vector<std::size_t> outside_neighbours(const Multigraph& g,
                                            const std::vector<char>& in_g0) {
  std::vector<std::size_t> out(g.vertex_count(), 0);
  std::vector<VertexId> seen;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!in_g0[v]) continue;
    seen.clear();
    for (const Incidence& inc : g.incident(v)) {
      if (!in_g0[inc.other]) seen.push_back(inc.other);
    }
    std::sort(seen.begin(), seen.end());
    out[v] = std::unique(seen.begin(), seen.end()) - seen.begin();
  }
  return out;
}

std::vector<char> membership(std::size_t n, const std::vector<VertexId>& ids) {
  std::vector<char> in(n, 0);
  for (VertexId v : ids) in[v] = 1;
  return in;
}

}  // namespace

const char* to_string(EdgeColor c) {
  switch (c) {
    case EdgeColor::kUncoloured:
      return "uncoloured";
    case EdgeColor::kPurple:
      return "purple";
    case EdgeColor::kRed:
      return "red";
  }
  return "?";
}

const char* to_string(VertexColor c) {
  switch (c) {
    case VertexColor::kUncoloured:
      return "uncoloured";
    case VertexColor::kPink:
      return "pink";
    case VertexColor::kRed:
      return "red";
  }
  return "?";
}

std::size_t PaintedKernel::alive_edge_count() const {
  return std::count_if(edges.begin(), edges.end(),
                       [](const KernelEdge& e) { return e.alive; });
}

void PaintedKernel::set_edge_color(EdgeId e, EdgeColor c) {
  KernelEdge& edge = edges[e];
  if (!edge.alive || edge.color == EdgeColor::kRed) return;
  edge.color = c;
  if (c == EdgeColor::kRed) {
    red_pos_[e] = red_.size();
    red_.push_back(e);
  }
}

void PaintedKernel::paint_vertex_red(VertexId v) {
  vertex_color[v] = VertexColor::kRed;
  for (EdgeId e : incident[v]) set_edge_color(e, EdgeColor::kRed);
}

EdgeId PaintedKernel::add_edge(KernelEdge e) {
  const auto id = static_cast<EdgeId>(edges.size());
  const EdgeColor color = e.color;
  e.color = EdgeColor::kUncoloured;
  e.alive = true;
  incident[e.a].push_back(id);
  incident[e.b].push_back(id);
  edges.push_back(std::move(e));
  red_pos_.push_back(0);
  set_edge_color(id, color);
  return id;
}

void PaintedKernel::detach(VertexId v, EdgeId e) {
  auto& list = incident[v];
  auto it = std::find(list.begin(), list.end(), e);
  list.erase(it);
}

void PaintedKernel::remove_edge(EdgeId e) {
  KernelEdge& edge = edges[e];
  if (!edge.alive) return;
  edge.alive = false;
  detach(edge.a, e);
  detach(edge.b, e);
  if (edge.color == EdgeColor::kRed) {
    const std::size_t pos = red_pos_[e];
    red_[pos] = red_.back();
    red_pos_[red_[pos]] = pos;
    red_.pop_back();
  }
}

void PaintedKernel::remove_vertex(VertexId v) {
  while (!incident[v].empty()) remove_edge(incident[v].back());
  vertex_alive[v] = 0;
}

Subgraph PaintedKernel::expand(const Multigraph& g) const {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> g_edges;
  for (VertexId v = 0; v < g_vertex.size(); ++v) {
    if (vertex_alive[v]) vertices.push_back(g_vertex[v]);
  }
  for (const KernelEdge& e : edges) {
    if (!e.alive) continue;
    vertices.insert(vertices.end(), e.interior.begin(), e.interior.end());
    g_edges.insert(g_edges.end(), e.g_edges.begin(), e.g_edges.end());
  }
  return make_subgraph(g, vertices, g_edges);
}

bool PaintedKernel::check_invariants(std::string* why) const {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  std::size_t red = 0;
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const KernelEdge& edge = edges[e];
    if (!edge.alive) continue;
    if (!vertex_alive[edge.a] || !vertex_alive[edge.b]) {
      return fail("edge " + std::to_string(e) + " has a dead endpoint");
    }
    if (edge.deg2_count != edge.interior.size()) {
      return fail("deg2_count mismatch on edge " + std::to_string(e));
    }
    if (edge.g_edges.size() != edge.interior.size() + 1) {
      return fail("path length mismatch on edge " + std::to_string(e));
    }
    if (edge.merge_count < 1) return fail("merge_count < 1");
    const bool red_end = vertex_color[edge.a] == VertexColor::kRed ||
                         vertex_color[edge.b] == VertexColor::kRed;
    if (red_end && edge.color != EdgeColor::kRed) {
      return fail("edge " + std::to_string(e) + " at a red vertex is not red");
    }
    if (edge.color == EdgeColor::kRed) {
      ++red;
      if (red_pos_[e] >= red_.size() || red_[red_pos_[e]] != e) {
        return fail("red index out of sync");
      }
    }
  }
  if (red != red_.size()) return fail("red index size mismatch");
  for (VertexId v = 0; v < incident.size(); ++v) {
    if (!vertex_alive[v] && !incident[v].empty()) {
      return fail("dead vertex with incident edges");
    }
  }
  return true;
}

void to_json(nlohmann::json& j, const StepRecord& r) {
  nlohmann::json recoloured = nlohmann::json::array();
  for (const auto& [v, c] : r.recoloured) {
    recoloured.push_back({{"vertex", v}, {"color", to_string(c)}});
  }
  j = {{"step", r.step},
       {"chosen_edge", r.chosen},
       {"ends", {r.a, r.b}},
       {"cases", r.cases},
       {"new_red_edges", r.new_red_edges},
       {"recoloured", recoloured}};
}

void StripTrace::write_json_lines(std::ostream& out) const {
  for (const StepRecord& r : records) out << nlohmann::json(r).dump() << '\n';
}

nlohmann::json StripTrace::summary() const {
  return {{"kernel_vertices", kernel_vertices},
          {"kernel_edges", kernel_edges},
          {"initial_red_edges", initial_red_edges},
          {"initial_red_vertices", initial_red_vertices},
          {"steps", steps}};
}

PaintedKernel paint_kernel(const Multigraph& g, std::size_t N) {
  if (N < 2) throw InvalidArgument("paint_kernel: N must be >= 2");
  const Subgraph g0 = trimmed_core(g);
  if (g0.graph.empty()) {
    throw InvalidArgument("paint_kernel: trimmed core is empty");
  }
  const KernelResult k = kernel(g0.graph);

  PaintedKernel pk;
  pk.N = N;
  pk.g_vertex_count = g.vertex_count();
  const std::size_t nk = k.kernel.vertex_count();
  pk.g_vertex.resize(nk);
  for (VertexId v = 0; v < nk; ++v) {
    pk.g_vertex[v] = g0.parent_vertex[k.kernel_vertex[v]];
  }
  pk.vertex_color.assign(nk, VertexColor::kUncoloured);
  pk.vertex_alive.assign(nk, 1);
  pk.losses.assign(nk, 0);
  pk.incident.assign(nk, {});

  // G0-local vertex -> kernel edge whose path contains it.
  std::vector<EdgeId> path_of(g0.graph.vertex_count(), kNoEdge);
  for (EdgeId e = 0; e < k.kernel.edge_count(); ++e) {
    KernelEdge edge;
    edge.a = k.kernel.edge(e).u;
    edge.b = k.kernel.edge(e).v;
    for (VertexId x : k.path_map[e]) {
      path_of[x] = e;
      edge.interior.push_back(g0.parent_vertex[x]);
    }
    for (EdgeId x : k.path_edges[e]) edge.g_edges.push_back(g0.parent_edge[x]);
    edge.deg2_count = edge.interior.size();
    if (2 * edge.deg2_count > N) edge.color = EdgeColor::kRed;
    pk.add_edge(std::move(edge));
  }
  pk.original_edges_ = k.kernel.edge_count();

  const auto in_g0 = membership(g.vertex_count(), g0.parent_vertex);
  const auto outside = outside_neighbours(g, in_g0);
  std::vector<VertexId> kernel_of(g0.graph.vertex_count(), kNoEdge);
  for (VertexId v = 0; v < nk; ++v) kernel_of[k.kernel_vertex[v]] = v;
  for (VertexId x = 0; x < g0.graph.vertex_count(); ++x) {
    if (outside[g0.parent_vertex[x]] + 1 < N) continue;
    if (g0.graph.degree(x) == 2) {
      pk.set_edge_color(path_of[x], EdgeColor::kRed);
    } else {
      pk.paint_vertex_red(kernel_of[x]);
    }
  }
  return pk;
}

namespace {

// Applies the colouring and structural rules after kernel edges were removed.
class StepContext {
 public:
  StepContext(PaintedKernel& s, StepRecord* r) : s_(s), r_(r) {}

  void handle_loss(VertexId v, std::uint32_t count) {
    if (!s_.vertex_alive[v]) return;
    s_.losses[v] += count;
    if (s_.vertex_color[v] != VertexColor::kRed && s_.losses[v] >= 2) {
      paint_red(v);
    } else if (s_.vertex_color[v] == VertexColor::kUncoloured &&
               s_.degree(v) >= 3) {
      s_.vertex_color[v] = VertexColor::kPink;
      note("pink");
      if (r_) r_->recoloured.emplace_back(s_.g_vertex[v], VertexColor::kPink);
    }
    settle(v);
  }

 private:
  void note(const char* what) {
    if (r_) r_->cases.emplace_back(what);
  }

  void paint_red(VertexId v) {
    std::vector<EdgeId> before;
    if (r_) {
      for (EdgeId e : s_.incident[v]) {
        if (s_.edges[e].color != EdgeColor::kRed) before.push_back(e);
      }
    }
    s_.paint_vertex_red(v);
    note("vertex_red");
    if (r_) {
      r_->recoloured.emplace_back(s_.g_vertex[v], VertexColor::kRed);
      r_->new_red_edges.insert(r_->new_red_edges.end(), before.begin(),
                               before.end());
    }
  }

  void settle(VertexId v) {
    const std::size_t d = s_.degree(v);
    if (d >= 3) return;
    if (d == 0) {
      s_.remove_vertex(v);
      note("vertex_removed");
      return;
    }
    if (d == 1) {
      const EdgeId e = s_.incident[v][0];
      const KernelEdge& edge = s_.edges[e];
      const VertexId w = edge.a == v ? edge.b : edge.a;
      s_.remove_vertex(v);
      note("pendant_removed");
      handle_loss(w, 1);
      return;
    }
    const EdgeId e1 = s_.incident[v][0];
    const EdgeId e2 = s_.incident[v][1];
    if (e1 == e2) {
      s_.remove_vertex(v);
      note("cycle_removed");
      return;
    }
    merge(v, e1, e2);
  }

  // Suppresses v, joining its two kernel edges into a new one.
  void merge(VertexId v, EdgeId e1, EdgeId e2) {
    const KernelEdge first = s_.edges[e1];
    const KernelEdge second = s_.edges[e2];
    KernelEdge joined;
    joined.a = first.a == v ? first.b : first.a;
    joined.b = second.a == v ? second.b : second.a;
    // Path from joined.a to v, then v to joined.b.
    joined.interior = first.interior;
    joined.g_edges = first.g_edges;
    if (first.a == v) {
      std::reverse(joined.interior.begin(), joined.interior.end());
      std::reverse(joined.g_edges.begin(), joined.g_edges.end());
    }
    joined.interior.push_back(s_.g_vertex[v]);
    std::vector<VertexId> tail = second.interior;
    std::vector<EdgeId> tail_edges = second.g_edges;
    if (second.b == v) {
      std::reverse(tail.begin(), tail.end());
      std::reverse(tail_edges.begin(), tail_edges.end());
    }
    joined.interior.insert(joined.interior.end(), tail.begin(), tail.end());
    joined.g_edges.insert(joined.g_edges.end(), tail_edges.begin(),
                          tail_edges.end());
    joined.deg2_count = first.deg2_count + second.deg2_count + 1;
    joined.merge_count = first.merge_count + second.merge_count;
    const bool red = first.color != EdgeColor::kUncoloured ||
                     second.color != EdgeColor::kUncoloured ||
                     s_.vertex_color[v] == VertexColor::kRed ||
                     joined.merge_count >= 3 || joined.deg2_count > s_.N ||
                     s_.vertex_color[joined.a] == VertexColor::kRed ||
                     s_.vertex_color[joined.b] == VertexColor::kRed;
    joined.color = red ? EdgeColor::kRed : EdgeColor::kPurple;
    s_.remove_vertex(v);
    const VertexId x = joined.a;
    const EdgeId id = s_.add_edge(std::move(joined));
    note(red ? "merge_red" : "merge_purple");
    if (red && r_) r_->new_red_edges.push_back(id);
    // A loop closing on a vertex left with nothing else is an isolated cycle.
    if (s_.edges[id].a == s_.edges[id].b && s_.degree(x) == 2) {
      s_.remove_vertex(x);
      note("cycle_removed");
    }
  }

  PaintedKernel& s_;
  StepRecord* r_;
};

}  // namespace

bool strip_step(PaintedKernel& state, Rng& rng, StepRecord* record) {
  if (state.red_edge_count() == 0) return false;
  const EdgeId e = state.red_edge(rng.below(state.red_edge_count()));
  const VertexId a = state.edges[e].a;
  const VertexId b = state.edges[e].b;
  if (record) {
    record->chosen = e;
    record->a = state.g_vertex[a];
    record->b = state.g_vertex[b];
  }
  state.remove_edge(e);
  StepContext ctx(state, record);
  if (a == b) {
    ctx.handle_loss(a, 2);
  } else {
    ctx.handle_loss(a, 1);
    ctx.handle_loss(b, 1);
  }
  return true;
}

StripResult severe_strip(const Multigraph& g, const StripParams& params) {
  if (params.N < 2) throw InvalidArgument("severe_strip: N must be >= 2");
  StripResult out;
  if (trimmed_core(g).graph.empty()) {
    out.reduced.graph = Multigraph(0);
    return out;
  }
  PaintedKernel pk = paint_kernel(g, params.N);
  out.trace.kernel_vertices = pk.g_vertex.size();
  out.trace.kernel_edges = pk.edges.size();
  out.trace.initial_red_edges = pk.red_edge_count();
  out.trace.initial_red_vertices =
      std::count(pk.vertex_color.begin(), pk.vertex_color.end(),
                 VertexColor::kRed);
  Rng rng(params.seed);
  for (;;) {
    StepRecord rec;
    rec.step = out.trace.steps;
    if (!strip_step(pk, rng, params.record_trace ? &rec : nullptr)) break;
    ++out.trace.steps;
    if (params.record_trace) out.trace.records.push_back(std::move(rec));
  }
  out.reduced = pk.expand(g);
  return out;
}

Subgraph reduced_core_fixpoint(const Multigraph& g, std::size_t N,
                               std::optional<std::uint64_t> order_seed) {
  if (N < 2) throw InvalidArgument("reduced_core_fixpoint: N must be >= 2");
  const Subgraph g0 = trimmed_core(g);
  if (g0.graph.empty()) return {Multigraph(0), {}, {}};
  const KernelResult k = kernel(g0.graph);
  const Multigraph& kg = k.kernel;
  const std::size_t nk = kg.vertex_count();
  const std::size_t mk = kg.edge_count();

  std::vector<char> dead_v(nk, 0);
  std::vector<char> dead_e(mk, 0);
  auto kill_vertex = [&](VertexId v) {
    dead_v[v] = 1;
    for (const Incidence& inc : kg.incident(v)) dead_e[inc.edge] = 1;
  };

  // Initial paint.
  const auto in_g0 = membership(g.vertex_count(), g0.parent_vertex);
  const auto outside = outside_neighbours(g, in_g0);
  std::vector<VertexId> kernel_of(g0.graph.vertex_count(), kNoEdge);
  for (VertexId v = 0; v < nk; ++v) kernel_of[k.kernel_vertex[v]] = v;
  std::vector<EdgeId> path_of(g0.graph.vertex_count(), kNoEdge);
  for (EdgeId e = 0; e < mk; ++e) {
    for (VertexId x : k.path_map[e]) path_of[x] = e;
    if (2 * k.path_map[e].size() > N) dead_e[e] = 1;
  }
  for (VertexId x = 0; x < g0.graph.vertex_count(); ++x) {
    if (outside[g0.parent_vertex[x]] + 1 < N) continue;
    if (kernel_of[x] == kNoEdge) {
      dead_e[path_of[x]] = 1;
    } else {
      kill_vertex(kernel_of[x]);
    }
  }

  std::vector<VertexId> order(nk);
  std::iota(order.begin(), order.end(), 0);
  std::optional<Rng> rng;
  if (order_seed) rng.emplace(*order_seed);

  auto alive_degree = [&](VertexId v) {
    std::size_t d = 0;
    for (const Incidence& inc : kg.incident(v)) d += !dead_e[inc.edge];
    return d;
  };
  // The two alive incidences of a vertex of alive degree 2.
  auto alive_pair = [&](VertexId v) {
    std::vector<Incidence> out;
    for (const Incidence& inc : kg.incident(v)) {
      if (!dead_e[inc.edge]) out.push_back(inc);
    }
    return out;
  };

  bool changed = true;
  std::vector<std::size_t> deg(nk);
  std::vector<char> visited(nk);
  while (changed) {
    changed = false;
    if (rng) rng->shuffle(std::span<VertexId>(order));

    for (VertexId v : order) {
      if (dead_v[v]) continue;
      const std::size_t d = alive_degree(v);
      const std::size_t lost = kg.degree(v) - d;
      if (lost >= 2 || d <= 1) {
        kill_vertex(v);
        changed = true;
      }
    }

    for (VertexId v = 0; v < nk; ++v) deg[v] = dead_v[v] ? 0 : alive_degree(v);
    std::fill(visited.begin(), visited.end(), 0);
    for (VertexId v : order) {
      if (dead_v[v] || deg[v] != 2 || visited[v]) continue;
      std::vector<EdgeId> chain;
      std::vector<VertexId> inner{v};
      visited[v] = 1;
      const auto start = alive_pair(v);
      bool closed = false;
      if (start[0].edge == start[1].edge) {
        chain.push_back(start[0].edge);
        closed = true;
      } else {
        for (int side = 0; side < 2 && !closed; ++side) {
          EdgeId edge = start[side].edge;
          VertexId at = start[side].other;
          chain.push_back(edge);
          while (at != v && deg[at] == 2 && !dead_v[at]) {
            visited[at] = 1;
            inner.push_back(at);
            const auto pair = alive_pair(at);
            const Incidence& next =
                pair[0].edge == edge ? pair[1] : pair[0];
            edge = next.edge;
            chain.push_back(edge);
            at = next.other;
          }
          if (at == v) closed = true;
        }
      }
      std::size_t length = inner.size();
      for (EdgeId e : chain) length += k.path_map[e].size();
      if (closed || chain.size() >= 3 || length > N) {
        for (EdgeId e : chain) dead_e[e] = 1;
        for (VertexId x : inner) dead_v[x] = 1;
        changed = true;
      }
    }
  }

  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  for (VertexId v = 0; v < nk; ++v) {
    if (!dead_v[v]) vertices.push_back(g0.parent_vertex[k.kernel_vertex[v]]);
  }
  for (EdgeId e = 0; e < mk; ++e) {
    if (dead_e[e]) continue;
    for (VertexId x : k.path_map[e]) vertices.push_back(g0.parent_vertex[x]);
    for (EdgeId x : k.path_edges[e]) edges.push_back(g0.parent_edge[x]);
  }
  return make_subgraph(g, vertices, edges);
}

}  // namespace coremix
