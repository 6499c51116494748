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
#include <cmath>
#include <limits>
#include <string>

#include "coremix/error.h"

namespace coremix {
namespace {

// Dinic's max-flow on integer capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : head_(n, -1), level_(n), it_(n) {}

  void add_arc(std::size_t from, std::size_t to, std::int64_t cap,
               std::int64_t reverse_cap = 0) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size() - 1);
    arcs_.push_back({from, reverse_cap, head_[to]});
    head_[to] = static_cast<int>(arcs_.size() - 1);
  }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (std::int64_t pushed =
                 dfs(s, t, std::numeric_limits<std::int64_t>::max())) {
        flow += pushed;
      }
    }
    return flow;
  }

  // Vertices reachable from s in the residual network after max_flow.
  std::vector<char> source_side(std::size_t s) {
    bfs(s, s);
    std::vector<char> out(level_.size());
    for (std::size_t v = 0; v < level_.size(); ++v) out[v] = level_[v] >= 0;
    return out;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
    int next;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<std::size_t> queue{s};
    level_[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::size_t v = queue[h];
      for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0 && s != t;
  }

  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t limit) {
    if (v == t) return limit;
    for (int& a = it_[v]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
      const std::int64_t got = dfs(arc.to, t, std::min(limit, arc.cap));
      if (got > 0) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

// Vertex set S with |E(S)|/|S| > p/q, if any (Goldberg's construction).
std::optional<std::vector<VertexId>> denser_than(const Multigraph& g,
                                                 std::int64_t p,
                                                 std::int64_t q) {
  const std::size_t n = g.vertex_count();
  const auto big = static_cast<std::int64_t>(2 * g.edge_count());
  const std::size_t s = n;
  const std::size_t t = n + 1;
  FlowNetwork net(n + 2);
  for (VertexId v = 0; v < n; ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    net.add_arc(s, v, big * q);
    net.add_arc(v, t, big * q + 2 * p - d * q);
  }
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) net.add_arc(e.u, e.v, q, q);
  }
  // min cut = big*q*n + 2 min_S (p|S| - q|E(S)|).
  const std::int64_t cut = net.max_flow(s, t);
  if (cut >= big * q * static_cast<std::int64_t>(n)) return std::nullopt;
  const auto side = net.source_side(s);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (side[v]) out.push_back(v);
  }
  return out;
}

std::size_t induced_edge_count(const Multigraph& g,
                               const std::vector<VertexId>& set) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : set) in[v] = 1;
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += in[e.u] && in[e.v];
  return count;
}

}  // namespace

DensestSubgraph densest_subgraph(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InvalidArgument("densest_subgraph: empty graph");
  DensestSubgraph best;
  best.witness.resize(n);
  for (VertexId v = 0; v < n; ++v) best.witness[v] = v;
  best.vertices = n;
  best.edges = g.edge_count();
  if (g.edge_count() == 0) {
    best.witness = {0};
    best.vertices = 1;
    best.edges = 0;
    best.density = 0.0;
    return best;
  }
  // Distinct densities differ by at least 1/(n(n-1)) > 1/q.
  const auto q = static_cast<std::int64_t>(2 * n * n);
  const auto scale = static_cast<__int128>(2 * g.edge_count()) * q * (n + 2);
  if (scale > (static_cast<__int128>(1) << 62)) {
    throw LimitExceeded("densest_subgraph: graph too large for 64-bit flows");
  }
  // Invariant: a set denser than lo/q exists, none denser than hi/q.
  std::int64_t lo = static_cast<std::int64_t>(g.edge_count()) * q /
                        static_cast<std::int64_t>(n) -
                    1;
  std::int64_t hi = static_cast<std::int64_t>(g.edge_count()) * q;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (auto set = denser_than(g, mid, q)) {
      const std::size_t e = induced_edge_count(g, *set);
      // Jump to the density actually found.
      lo = std::max(mid, static_cast<std::int64_t>(e) * q /
                                 static_cast<std::int64_t>(set->size()) -
                             1);
      if (e * best.vertices > best.edges * set->size()) {
        best.edges = e;
        best.vertices = set->size();
        best.witness = std::move(*set);
      }
    } else {
      hi = mid;
    }
  }
  best.density =
      static_cast<double>(best.edges) / static_cast<double>(best.vertices);
  return best;
}

Rational kernel_expansion_ratio(const Multigraph& g,
                                const std::vector<VertexId>& set) {
  if (set.empty()) throw InvalidArgument("kernel_expansion_ratio: empty set");
  std::vector<char> in(g.vertex_count(), 0);
  std::size_t degree_sum = 0;
  for (VertexId v : set) {
    if (!g.valid(v)) throw InvalidArgument("kernel_expansion_ratio: bad vertex");
    if (in[v]) continue;
    in[v] = 1;
    degree_sum += g.degree(v);
  }
  if (degree_sum > g.edge_count()) {
    throw InvalidArgument("kernel_expansion_ratio: d(S) exceeds |E(G)|");
  }
  std::size_t leaving = 0;
  for (const Edge& e : g.edges()) leaving += in[e.u] != in[e.v];
  if (degree_sum == 0) return Rational(0);
  return Rational(static_cast<long long>(leaving),
                  static_cast<long long>(degree_sum));
}

DecorationReport decorations(const Multigraph& g,
                             const std::vector<VertexId>& b_vertices) {
  const std::size_t n = g.vertex_count();
  DecorationReport out;
  out.b_vertices = b_vertices;
  std::sort(out.b_vertices.begin(), out.b_vertices.end());
  out.b_vertices.erase(
      std::unique(out.b_vertices.begin(), out.b_vertices.end()),
      out.b_vertices.end());
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  constexpr auto kInB = kUnset - 1;
  std::vector<std::size_t> comp(n, kUnset);
  for (VertexId v : out.b_vertices) {
    if (!g.valid(v)) throw InvalidArgument("decorations: bad vertex");
    comp[v] = kInB;
  }
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (comp[root] != kUnset) continue;
    const std::size_t id = out.components.size();
    out.components.emplace_back();
    comp[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      out.components[id].push_back(v);
      for (const Incidence& inc : g.incident(v)) {
        if (comp[inc.other] == kUnset) {
          comp[inc.other] = id;
          stack.push_back(inc.other);
        }
      }
    }
    std::sort(out.components[id].begin(), out.components[id].end());
  }
  out.eprime.assign(out.components.size(), 0);
  for (const Edge& e : g.edges()) {
    const std::size_t a = comp[e.u];
    const std::size_t b = comp[e.v];
    if (a == kInB && b == kInB) {
      ++out.b_induced_edges;
    } else {
      ++out.eprime[a != kInB ? a : b];
    }
  }
  out.attach_count.assign(out.b_vertices.size(), 0);
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < out.b_vertices.size(); ++i) {
    seen.clear();
    for (const Incidence& inc : g.incident(out.b_vertices[i])) {
      if (comp[inc.other] != kInB) seen.push_back(comp[inc.other]);
    }
    std::sort(seen.begin(), seen.end());
    out.attach_count[i] = std::unique(seen.begin(), seen.end()) - seen.begin();
  }
  return out;
}

void to_json(nlohmann::json& j, const ANCertificate& c) {
  j = {{"alpha", c.alpha},
       {"pass", c.pass},
       {"b_vertices", c.b_vertices},
       {"b_edges", c.b_edges},
       {"graph_edges", c.graph_edges},
       {"condition1",
        {{"pass", c.condition1},
         {"phi", c.phi},
         {"phi_upper", c.phi_upper},
         {"method", c.phi_method},
         {"reason", c.condition1_reason}}},
       {"condition2",
        {{"pass", c.condition2},
         {"decorations", c.decorations},
         {"max_eprime", c.max_eprime},
         {"reason", c.condition2_reason}}},
       {"condition3",
        {{"pass", c.condition3}, {"max_attach", c.max_attach}}}};
  if (c.violating_lambda) {
    j["condition2"]["violating_lambda"] = *c.violating_lambda;
  }
  if (c.violating_vertex) {
    j["condition3"]["violating_vertex"] = *c.violating_vertex;
  }
  if (!c.strip_summary.is_null()) j["strip"] = c.strip_summary;
}

ANCertificate check_AN(const Multigraph& g, const Subgraph& b, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("check_AN: alpha must lie in (0, 1]");
  }
  ANCertificate cert;
  cert.alpha = alpha;
  cert.b_vertices = b.graph.vertex_count();
  cert.b_edges = b.graph.edge_count();
  cert.graph_edges = g.edge_count();

  // Condition 1: B is an alpha-expander.
  cert.phi_method = "none";
  if (b.graph.vertex_count() == 0) {
    cert.condition1_reason = "B is empty";
  } else if (b.graph.vertex_count() == 1) {
    cert.phi_method = "trivial";
    cert.phi = cert.phi_upper = std::numeric_limits<double>::infinity();
    cert.condition1 = true;
    cert.condition1_reason = "single vertex, no admissible cut";
  } else if (!is_connected(b.graph)) {
    cert.condition1_reason = "B is disconnected";
  } else {
    const CheegerResult phi = b.graph.vertex_count() <= kMaxExactCheegerStates
                                  ? cheeger_exact(b.graph)
                                  : cheeger_bounds(b.graph);
    cert.phi = phi.lower;
    cert.phi_upper = phi.upper;
    cert.phi_method = phi.method;
    cert.condition1 = phi.lower >= alpha;
    if (!cert.condition1) {
      cert.condition1_reason =
          (phi.exact ? "Phi(B) = " : "spectral lower bound ") +
          std::to_string(phi.lower) + " < alpha";
    }
  }

  const DecorationReport deco = decorations(g, b.parent_vertex);
  cert.decorations = deco.components.size();

  // Condition 2: exponential tail of E'(D_i), checked at every realized value.
  cert.condition2 = true;
  const double edges = static_cast<double>(g.edge_count());
  std::vector<std::size_t> sorted = deco.eprime;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty()) cert.max_eprime = sorted.back();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    const auto lambda = static_cast<double>(sorted[i]);
    const auto at_least = static_cast<double>(sorted.size() - i);
    if (at_least > edges * std::exp(-lambda * alpha)) {
      cert.condition2 = false;
      cert.violating_lambda = sorted[i];
      cert.condition2_reason = std::to_string(sorted.size() - i) +
                               " decorations with E' >= " +
                               std::to_string(sorted[i]);
      break;
    }
  }
  if (cert.condition2 && edges > 0 &&
      static_cast<double>(cert.max_eprime) > std::log(edges) / alpha) {
    cert.condition2 = false;
    cert.violating_lambda = cert.max_eprime;
    cert.condition2_reason = "E' exceeds log E(G) / alpha";
  }

  // Condition 3: attachments per B vertex.
  cert.condition3 = true;
  for (std::size_t i = 0; i < deco.attach_count.size(); ++i) {
    cert.max_attach = std::max(cert.max_attach, deco.attach_count[i]);
    if (static_cast<double>(deco.attach_count[i]) > 1.0 / alpha &&
        !cert.violating_vertex) {
      cert.condition3 = false;
      cert.violating_vertex = deco.b_vertices[i];
    }
  }

  cert.pass = cert.condition1 && cert.condition2 && cert.condition3;
  return cert;
}

ANCertificate check_AN(const Multigraph& g,
                       const std::vector<VertexId>& b_vertices, double alpha) {
  return check_AN(g, induced_subgraph(g, b_vertices), alpha);
}

ANCertificate check_strong_core(const Multigraph& g, std::size_t N,
                                double alpha, std::uint64_t seed) {
  if (!is_connected(g)) {
    throw InvalidArgument("check_strong_core: graph is disconnected");
  }
  StripParams params;
  params.N = N;
  params.seed = seed;
  const StripResult strip = severe_strip(g, params);
  if (strip.reduced.graph.vertex_count() == 0) {
    throw InvalidArgument("check_strong_core: empty reduced core");
  }
  ANCertificate cert = check_AN(g, strip.reduced, alpha);
  cert.strip_summary = strip.trace.summary();
  return cert;
}

}  // namespace coremix
