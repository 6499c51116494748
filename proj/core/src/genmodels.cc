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

#include "coremix/genmodels.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "coremix/error.h"
#include "coremix/rng.h"

namespace coremix {
namespace {

std::uint64_t pair_count(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
}

// Index of pair (u, v), u < v, in the row-major order of the strict lower
// triangle: (0,1), (0,2), (1,2), (0,3), ...
std::pair<VertexId, VertexId> pair_from_index(std::uint64_t index) {
  auto v = static_cast<std::uint64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (v * (v - 1) / 2 > index) --v;
  while ((v + 1) * v / 2 <= index) ++v;
  const std::uint64_t u = index - v * (v - 1) / 2;
  return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

// Sum_{j >= k} lambda^j / j!, by direct series.
double poisson_tail_series(double lambda, int k) {
  double term = 1.0;
  for (int j = 1; j <= k; ++j) term *= lambda / j;
  double sum = 0.0;
  for (int j = k; j < 100000; ++j) {
    sum += term;
    term *= lambda / (j + 1);
    if (term < sum * 1e-17 && j > lambda) break;
  }
  return sum;
}

std::size_t sample_truncated_poisson(Rng& rng, double lambda,
                                     double tail_mass) {
  double u = rng.uniform() * tail_mass;
  double term = lambda * lambda * lambda / 6.0;
  std::size_t k = 3;
  while (u >= term && term > 0.0) {
    u -= term;
    ++k;
    term *= lambda / static_cast<double>(k);
  }
  return k;
}

}  // namespace

std::size_t edges_for_average_degree(std::size_t n, double c) {
  return static_cast<std::size_t>(std::llround(c * static_cast<double>(n) / 2));
}

Multigraph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("sample_gnp: p must lie in [0, 1]");
  }
  Multigraph g(n);
  if (p == 0.0 || n < 2) return g;
  Rng rng(seed);
  // Batagelj-Brandes geometric skipping over the pairs (w, v), w < v.
  std::uint64_t v = 1;
  std::uint64_t w = 0;
  bool first = true;
  while (v < n) {
    const std::uint64_t skip = rng.geometric(p);
    w += skip + (first ? 0 : 1);
    first = false;
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) g.add_edge(static_cast<VertexId>(w), static_cast<VertexId>(v));
  }
  return g;
}

Multigraph sample_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = pair_count(n);
  if (m > pairs) {
    throw InvalidArgument("sample_gnm: m = " + std::to_string(m) +
                          " exceeds C(n,2) = " + std::to_string(pairs));
  }
  Rng rng(seed);
  Multigraph g(n);
  const bool dense = 2 * static_cast<std::uint64_t>(m) > pairs;
  const std::uint64_t draws = dense ? pairs - m : m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(draws * 2);
  std::vector<std::uint64_t> order;
  order.reserve(draws);
  while (order.size() < draws) {
    const std::uint64_t index = rng.below(pairs);
    if (chosen.insert(index).second) order.push_back(index);
  }
  if (dense) {
    for (std::uint64_t index = 0; index < pairs; ++index) {
      if (chosen.count(index)) continue;
      auto [u, v] = pair_from_index(index);
      g.add_edge(u, v);
    }
  } else {
    for (std::uint64_t index : order) {
      auto [u, v] = pair_from_index(index);
      g.add_edge(u, v);
    }
  }
  return g;
}

Multigraph sample_cnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sample_cnm: need n >= 1");
  Rng rng(seed);
  Multigraph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto u = static_cast<VertexId>(rng.below(n));
    const auto v = static_cast<VertexId>(rng.below(n));
    g.add_edge(u, v);
  }
  return g;
}

Multigraph sample_cnm_mindeg(std::size_t n, std::size_t m, std::size_t k,
                             std::uint64_t seed, std::uint64_t max_tries) {
  if (n == 0) throw InvalidArgument("sample_cnm_mindeg: need n >= 1");
  if (2 * m < k * n) {
    throw InvalidArgument("sample_cnm_mindeg: infeasible, 2m < kn");
  }
  Rng rng(seed);
  std::vector<Edge> edges(m);
  std::vector<std::size_t> deg(n);
  for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
    std::fill(deg.begin(), deg.end(), 0);
    for (Edge& e : edges) {
      e.u = static_cast<VertexId>(rng.below(n));
      e.v = static_cast<VertexId>(rng.below(n));
      ++deg[e.u];
      ++deg[e.v];
    }
    if (*std::min_element(deg.begin(), deg.end()) >= k) {
      return Multigraph(n, edges);
    }
  }
  throw LimitExceeded("sample_cnm_mindeg: no sample with min degree " +
                      std::to_string(k) + " after " +
                      std::to_string(max_tries) + " tries");
}

Multigraph sample_pairing(const DegreeSequence& d, std::uint64_t seed) {
  const std::size_t total = std::accumulate(d.begin(), d.end(), std::size_t{0});
  if (total % 2 != 0) {
    throw InvalidArgument("sample_pairing: degree sum is odd");
  }
  std::vector<VertexId> points;
  points.reserve(total);
  for (std::size_t i = 0; i < d.size(); ++i) {
    points.insert(points.end(), d[i], static_cast<VertexId>(i));
  }
  Rng rng(seed);
  rng.shuffle(std::span<VertexId>(points));
  Multigraph g(d.size());
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
    g.add_edge(points[i], points[i + 1]);
  }
  return g;
}

double truncated_poisson_rate(double mean) {
  if (!(mean > 3.0)) {
    throw InvalidArgument("truncated_poisson_rate: mean must exceed 3");
  }
  // truncated_mean is increasing with truncated_mean(l) in (3, l + 3); Newton
  // on it, safeguarded by the bracket [max(0, mean-3), mean].
  double lo = std::max(0.0, mean - 3.0);
  double hi = mean;
  double lambda = std::max(mean - 3.0, 1e-3);
  for (int iter = 0; iter < 200; ++iter) {
    const double s1 = poisson_tail_series(lambda, 1);
    const double s2 = poisson_tail_series(lambda, 2);
    const double s3 = poisson_tail_series(lambda, 3);
    const double g = lambda * s2 / s3;
    const double second_moment = lambda * lambda * s1 / s3 + g;
    const double slope = (second_moment - g * g) / lambda;
    const double f = g - mean;
    if (std::abs(f) < 1e-13 * mean) return lambda;
    if (f > 0) hi = lambda; else lo = lambda;
    double next = lambda - f / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    lambda = next;
  }
  return lambda;
}

DegreeSequence sample_kernel_degrees(std::size_t n_k, std::size_t m_k,
                                     std::uint64_t seed,
                                     std::uint64_t max_tries) {
  if (n_k == 0) throw InvalidArgument("sample_kernel_degrees: need n_k >= 1");
  if (2 * m_k < 3 * n_k) {
    throw InvalidArgument("sample_kernel_degrees: need 2 m_k >= 3 n_k");
  }
  const std::size_t target = 2 * m_k;
  if (n_k == 1) return {target};
  if (target == 3 * n_k) return DegreeSequence(n_k, 3);

  const double lambda =
      truncated_poisson_rate(static_cast<double>(target) / n_k);
  const double tail = poisson_tail_series(lambda, 3);
  Rng rng(seed);
  DegreeSequence d(n_k);
  for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
    std::size_t sum = 0;
    for (auto& x : d) {
      x = sample_truncated_poisson(rng, lambda, tail);
      sum += x;
    }
    if (sum == target) return d;
  }
  throw LimitExceeded("sample_kernel_degrees: degree sum never matched 2 m_k");
}

std::vector<std::vector<std::uint32_t>> random_ordered_assignment(
    std::size_t num_edges, std::size_t num_deg2, std::uint64_t seed) {
  if (num_edges == 0) {
    throw InvalidArgument("random_ordered_assignment: need at least one edge");
  }
  std::vector<std::vector<std::uint32_t>> lists(num_edges);
  // Fenwick tree over per-edge gap counts (list length + 1).
  std::vector<std::uint64_t> tree(num_edges + 1, 0);
  auto add = [&](std::size_t i, std::uint64_t delta) {
    for (++i; i <= num_edges; i += i & (~i + 1)) tree[i] += delta;
  };
  for (std::size_t i = 0; i < num_edges; ++i) add(i, 1);
  std::size_t top = 1;
  while (top * 2 <= num_edges) top *= 2;

  Rng rng(seed);
  for (std::uint32_t item = 0; item < num_deg2; ++item) {
    std::uint64_t slot = rng.below(num_edges + item);
    // Descend to the edge whose gap range contains `slot`.
    std::size_t pos = 0;
    for (std::size_t step = top; step > 0; step /= 2) {
      if (pos + step <= num_edges && tree[pos + step] <= slot) {
        pos += step;
        slot -= tree[pos];
      }
    }
    auto& list = lists[pos];
    list.insert(list.begin() + static_cast<std::ptrdiff_t>(slot), item);
    add(pos, 1);
  }
  return lists;
}

GiantConstants giant_constants(double c) {
  if (!(c > 1.0)) throw InvalidArgument("giant_constants: need c > 1");
  const double target = c * std::exp(-c);
  double lo = 0.0;
  double hi = 1.0;
  // t e^{-t} is increasing on (0, 1).
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (mid * std::exp(-mid) < target) lo = mid; else hi = mid;
  }
  GiantConstants out;
  out.c = c;
  out.t = 0.5 * (lo + hi);
  out.b = 1.0 - out.t / c;
  out.b_core = out.b * (1.0 - out.t);
  return out;
}

}  // namespace coremix
