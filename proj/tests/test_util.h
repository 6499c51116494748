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

// Shared fixtures and brute-force oracles for the unit tests. The oracles
// deliberately avoid the library code paths they are compared against.

#ifndef COREMIX_TESTS_TEST_UTIL_H_
#define COREMIX_TESTS_TEST_UTIL_H_

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "coremix/counting.h"
#include "coremix/genmodels.h"
#include "coremix/multigraph.h"
#include "coremix/rng.h"

namespace coremix::testing {

inline Multigraph make_graph(std::size_t n,
                             std::initializer_list<std::pair<int, int>> edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) {
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return g;
}

inline Multigraph complete_graph(std::size_t n) {
  Multigraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Multigraph cycle_graph(std::size_t n) {
  Multigraph g(n);
  for (VertexId v = 0; v < n; ++v) {
    g.add_edge(v, static_cast<VertexId>((v + 1) % n));
  }
  return g;
}

inline Multigraph path_graph(std::size_t n) {
  Multigraph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// Theta graph: vertices 0 and 1 joined by paths with the given interior sizes.
inline Multigraph theta_graph(std::initializer_list<int> interiors) {
  std::size_t n = 2;
  for (int k : interiors) n += static_cast<std::size_t>(k);
  Multigraph g(n);
  VertexId next = 2;
  for (int k : interiors) {
    VertexId prev = 0;
    for (int i = 0; i < k; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

// Appends a disjoint copy of h to g and returns the offset of the copy.
inline VertexId append_graph(Multigraph& g, const Multigraph& h) {
  const auto offset = static_cast<VertexId>(g.vertex_count());
  Multigraph out(g.vertex_count() + h.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(e.u + offset, e.v + offset);
  g = std::move(out);
  return offset;
}

// Random connected multigraph: a random spanning tree plus `extra` edges,
// loops and parallel edges allowed when `simple` is false.
inline Multigraph random_connected(std::size_t n, std::size_t extra,
                                   std::uint64_t seed, bool simple = false) {
  Rng rng(seed);
  Multigraph g(n);
  for (VertexId v = 1; v < n; ++v) {
    g.add_edge(static_cast<VertexId>(rng.below(v)), v);
  }
  std::size_t added = 0;
  std::size_t attempts = 0;
  while (added < extra && attempts++ < 100 * (extra + 1)) {
    const auto u = static_cast<VertexId>(rng.below(n));
    const auto v = static_cast<VertexId>(rng.below(n));
    if (simple) {
      if (u == v) continue;
      bool dup = false;
      for (const Incidence& inc : g.incident(u)) dup = dup || inc.other == v;
      if (dup) continue;
    }
    g.add_edge(u, v);
    ++added;
  }
  return g;
}

inline std::size_t edges_inside(const Multigraph& g, std::uint32_t mask) {
  std::size_t k = 0;
  for (const Edge& e : g.edges()) {
    k += ((mask >> e.u) & 1) && ((mask >> e.v) & 1);
  }
  return k;
}

// Maximum |E(S)| / |S| by subset enumeration, as an exact fraction.
inline Rational brute_densest(const Multigraph& g) {
  Rational best = 0;
  const std::uint32_t n = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const Rational d(static_cast<long long>(edges_inside(g, mask)),
                     static_cast<long long>(__builtin_popcount(mask)));
    best = std::max(best, d);
  }
  return best;
}

// Minimum over S with 0 < vol(S) <= vol(V)/2 of cut(S)/vol(S), where loops
// count 2 towards the volume. Equals the edgewise Cheeger constant.
inline Rational brute_cheeger(const Multigraph& g) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.vertex_count());
  std::vector<long long> deg(n, 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  long long total = 0;
  for (long long d : deg) total += d;
  Rational best = -1;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    long long vol = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1) vol += deg[v];
    }
    if (vol == 0 || 2 * vol > total) continue;
    long long cut = 0;
    for (const Edge& e : g.edges()) cut += ((mask >> e.u) & 1) != ((mask >> e.v) & 1);
    const Rational q(cut, vol);
    if (best < 0 || q < best) best = q;
  }
  return best;
}

// Vertex set of the largest S such that every vertex of S has degree >= 2
// in the subgraph induced by S. Such sets are closed under union.
inline std::vector<VertexId> brute_two_core(const Multigraph& g) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.vertex_count());
  std::uint32_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> deg(n, 0);
    for (const Edge& e : g.edges()) {
      if (((mask >> e.u) & 1) && ((mask >> e.v) & 1)) {
        ++deg[e.u];
        ++deg[e.v];
      }
    }
    bool ok = true;
    for (std::uint32_t v = 0; v < n && ok; ++v) {
      ok = !((mask >> v) & 1) || deg[v] >= 2;
    }
    if (ok) best |= mask;
  }
  std::vector<VertexId> out;
  for (std::uint32_t v = 0; v < n; ++v) {
    if ((best >> v) & 1) out.push_back(v);
  }
  return out;
}

// Calls visit(partner) for every perfect matching of k points.
inline void for_each_matching(
    std::size_t k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> partner(k, -1);
  std::function<void()> rec = [&] {
    std::size_t first = 0;
    while (first < k && partner[first] >= 0) ++first;
    if (first == k) {
      visit(partner);
      return;
    }
    for (std::size_t j = first + 1; j < k; ++j) {
      if (partner[j] >= 0) continue;
      partner[first] = static_cast<int>(j);
      partner[j] = static_cast<int>(first);
      rec();
      partner[first] = partner[j] = -1;
    }
  };
  if (k % 2 == 0) rec();
}

// Random graph with a dense-ish core, pendant trees and long paths, so that
// every painting and stripping rule fires regularly for small N.
inline Multigraph stress_instance(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = 10 + rng.below(490);
  Multigraph g = sample_cnm(n, n + rng.below(n / 2 + 1), seed);
  const std::size_t extra = rng.below(20);
  Multigraph out(n + extra);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (std::size_t i = 0; i < extra; ++i) {
    out.add_edge(static_cast<VertexId>(rng.below(n)),
                 static_cast<VertexId>(n + i));
  }
  return out;
}

// Expected length of the filling rule from sigma to tau: at every step each
// state keeps as much of the walking mass as tau still lacks there. The rule
// is optimal, so this is the access time; mass is tracked until below `tol`.
inline double filling_rule_length(const Eigen::MatrixXd& p,
                                  Eigen::VectorXd walking,
                                  const Eigen::VectorXd& tau,
                                  double tol = 1e-14) {
  Eigen::VectorXd missing = tau;
  double length = 0.0;
  for (std::size_t step = 0; step < 100'000'000; ++step) {
    for (Eigen::Index i = 0; i < walking.size(); ++i) {
      const double stop = std::min(walking(i), missing(i));
      walking(i) -= stop;
      missing(i) -= stop;
    }
    const double left = walking.sum();
    if (left < tol) break;
    length += left;
    walking = (walking.transpose() * p).transpose();
  }
  return length;
}

// A connected expander-like core on vertices 0..k-1 (k in [6, 20]) with
// pendant trees and short paths between core vertices hung off it.
struct DecoratedGraph {
  Multigraph graph;
  std::vector<VertexId> core;
};

inline DecoratedGraph decorated_expander(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t k = 6 + rng.below(15);
  DecoratedGraph out;
  out.graph = random_connected(k, k + rng.below(k), seed ^ 0x9e37u, true);
  for (VertexId v = 0; v < k; ++v) out.core.push_back(v);
  const std::size_t pendants = rng.below(k);
  for (std::size_t i = 0; i < pendants; ++i) {
    VertexId at = static_cast<VertexId>(rng.below(k));
    const std::size_t depth = 1 + rng.below(3);
    for (std::size_t j = 0; j < depth; ++j) {
      const VertexId fresh = append_graph(out.graph, Multigraph(1));
      out.graph.add_edge(at, fresh);
      at = fresh;
    }
  }
  const std::size_t bridges = rng.below(k / 2 + 1);
  for (std::size_t i = 0; i < bridges; ++i) {
    VertexId at = static_cast<VertexId>(rng.below(k));
    const std::size_t interior = 1 + rng.below(3);
    for (std::size_t j = 0; j < interior; ++j) {
      const VertexId fresh = append_graph(out.graph, Multigraph(1));
      out.graph.add_edge(at, fresh);
      at = fresh;
    }
    out.graph.add_edge(at, static_cast<VertexId>(rng.below(k)));
  }
  return out;
}

}  // namespace coremix::testing

#endif  // COREMIX_TESTS_TEST_UTIL_H_
