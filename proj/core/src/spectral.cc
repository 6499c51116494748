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

#include "coremix/spectral.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "coremix/error.h"
#include "coremix/rng.h"

namespace coremix {
namespace {

constexpr std::size_t kDenseEigenLimit = 400;
constexpr std::size_t kMaxLanczosSteps = 2000;
constexpr double kLanczosTol = 1e-9;

template <typename T>
using Square = std::vector<std::vector<T>>;

template <typename T>
bool connected(const Square<T>& w) {
  const std::size_t n = w.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && w[i][j] > T(0)) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n;
}

// Minimizes cut / min(vol S, vol S^c) over all proper subsets S; the last
// state is kept outside S so that each cut is visited once.
template <typename T>
CheegerResult enumerate_cuts(const Square<T>& w) {
  const std::size_t n = w.size();
  if (n < 2) throw InvalidArgument("cheeger_exact: need at least 2 states");
  if (n > kMaxExactCheegerStates) {
    throw LimitExceeded("cheeger_exact: " + std::to_string(n) +
                        " states exceeds the exact limit of " +
                        std::to_string(kMaxExactCheegerStates));
  }
  if (!connected(w)) throw InvalidArgument("cheeger_exact: disconnected");

  std::vector<T> vol(n, T(0));
  std::vector<T> off(n, T(0));
  T total = T(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) vol[i] += w[i][j];
    off[i] = vol[i] - w[i][i];
    total += vol[i];
  }
  std::vector<T> conn(n, T(0));
  std::uint32_t mask = 0;
  T cut = T(0);
  T vol_s = T(0);
  T best_cut = T(1);
  T best_den = T(0);  // 0 marks "unset"
  std::uint32_t best_mask = 0;
  bool best_inside = true;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < limit; ++k) {
    const int x = std::countr_zero(k);
    const std::uint32_t bit = std::uint32_t{1} << x;
    if (mask & bit) {
      cut -= off[x] - 2 * conn[x];
      vol_s -= vol[x];
      for (std::size_t u = 0; u < n; ++u) {
        if (u != static_cast<std::size_t>(x)) conn[u] -= w[u][x];
      }
    } else {
      cut += off[x] - 2 * conn[x];
      vol_s += vol[x];
      for (std::size_t u = 0; u < n; ++u) {
        if (u != static_cast<std::size_t>(x)) conn[u] += w[u][x];
      }
    }
    mask ^= bit;
    const bool inside = 2 * vol_s <= total;
    const T den = inside ? vol_s : total - vol_s;
    if (!(den > T(0))) continue;
    if (best_den == T(0) || cut * best_den < best_cut * den) {
      best_cut = cut;
      best_den = den;
      best_mask = mask;
      best_inside = inside;
    }
  }
  CheegerResult out;
  out.exact = true;
  out.method = "exact";
  out.lower = out.upper =
      static_cast<double>(best_cut) / static_cast<double>(best_den);
  for (std::size_t i = 0; i < n; ++i) {
    const bool in = (best_mask >> i) & 1;
    if (in == best_inside) out.witness.push_back(static_cast<VertexId>(i));
  }
  return out;
}

struct Walk {
  std::vector<double> degree;
  std::vector<double> inv_sqrt_degree;
};

Walk walk_of(const Multigraph& g) {
  Walk walk;
  walk.degree.resize(g.vertex_count());
  walk.inv_sqrt_degree.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    walk.degree[v] = static_cast<double>(g.degree(v));
    walk.inv_sqrt_degree[v] = 1.0 / std::sqrt(walk.degree[v]);
  }
  return walk;
}

// y = D^{-1/2} W D^{-1/2} x.
void normalized_apply(const Multigraph& g, const Walk& walk,
                      const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  y.setZero(x.size());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    double acc = 0.0;
    for (const Incidence& inc : g.incident(v)) {
      acc += x[inc.other] * walk.inv_sqrt_degree[inc.other];
    }
    y[v] = acc * walk.inv_sqrt_degree[v];
  }
}

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;  // of the normalized matrix
};

Eigenpair second_dense(const Multigraph& g, const Walk& walk) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const double x = walk.inv_sqrt_degree[e.u] * walk.inv_sqrt_degree[e.v];
    if (e.is_loop()) {
      m(e.u, e.u) += 2 * x;
    } else {
      m(e.u, e.v) += x;
      m(e.v, e.u) += x;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NotConverged("cheeger_bounds: dense eigensolver failed");
  }
  return {solver.eigenvalues()[n - 2], solver.eigenvectors().col(n - 2)};
}

// Largest eigenvalue on the complement of sqrt(pi). Reports theta plus the
// residual norm, which bounds the distance to the nearest true eigenvalue.
Eigenpair second_lanczos(const Multigraph& g, const Walk& walk) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::VectorXd s(n);
  for (Eigen::Index i = 0; i < n; ++i) s[i] = std::sqrt(walk.degree[i]);
  s.normalize();

  Rng rng(0x6c616e637a6f73ULL);
  Eigen::VectorXd q(n);
  for (Eigen::Index i = 0; i < n; ++i) q[i] = rng.uniform() - 0.5;
  q -= s.dot(q) * s;
  q.normalize();

  const std::size_t max_steps =
      std::min<std::size_t>(kMaxLanczosSteps, static_cast<std::size_t>(n) - 1);
  std::vector<Eigen::VectorXd> basis{q};
  std::vector<double> alpha;
  std::vector<double> beta;
  Eigen::VectorXd w(n);
  for (std::size_t j = 0; j < max_steps; ++j) {
    normalized_apply(g, walk, basis[j], w);
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    alpha.push_back(basis[j].dot(w));
    w -= alpha.back() * basis[j];
    for (int pass = 0; pass < 2; ++pass) {
      for (const Eigen::VectorXd& b : basis) w -= b.dot(w) * b;
      w -= s.dot(w) * s;
    }
    const double b = w.norm();
    const std::size_t k = j + 1;
    const bool last = k == max_steps || b < 1e-12;
    if (last || k % 10 == 0) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
      const double theta = solver.eigenvalues()[k - 1];
      const Eigen::VectorXd y = solver.eigenvectors().col(k - 1);
      const double residual = b * std::abs(y[k - 1]);
      if (residual < kLanczosTol || last) {
        if (residual > 1e-6) {
          throw NotConverged("cheeger_bounds: Lanczos residual " +
                             std::to_string(residual) + " after " +
                             std::to_string(k) + " steps");
        }
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
        for (std::size_t i = 0; i < k; ++i) x += y[i] * basis[i];
        return {theta + residual, x};
      }
    }
    beta.push_back(b);
    basis.push_back(w / b);
  }
  throw NotConverged("cheeger_bounds: Lanczos did not run");
}

Eigenpair second_pair(const Multigraph& g, const Walk& walk) {
  return g.vertex_count() <= kDenseEigenLimit ? second_dense(g, walk)
                                              : second_lanczos(g, walk);
}

}  // namespace

WeightedChain chain_of(const Multigraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  WeightedChain chain{Eigen::MatrixXd::Zero(n, n)};
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      chain.weight(e.u, e.u) += 2.0;
    } else {
      chain.weight(e.u, e.v) += 1.0;
      chain.weight(e.v, e.u) += 1.0;
    }
  }
  return chain;
}

CheegerResult cheeger_exact(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxExactCheegerStates) {
    throw LimitExceeded("cheeger_exact: " + std::to_string(n) +
                        " states exceeds the exact limit of " +
                        std::to_string(kMaxExactCheegerStates));
  }
  Square<std::int64_t> w(n, std::vector<std::int64_t>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      w[e.u][e.u] += 2;
    } else {
      ++w[e.u][e.v];
      ++w[e.v][e.u];
    }
  }
  return enumerate_cuts(w);
}

CheegerResult cheeger_exact(const WeightedChain& chain) {
  const std::size_t n = chain.size();
  Square<double> w(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = chain.weight(i, j);
      if (x < 0.0) throw InvalidArgument("cheeger_exact: negative weight");
      w[i][j] = x;
    }
  }
  return enumerate_cuts(w);
}

double conductance(const Multigraph& g, const std::vector<VertexId>& set) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : set) {
    if (!g.valid(v)) throw InvalidArgument("conductance: bad vertex");
    in[v] = 1;
  }
  double cut = 0.0;
  double vol = 0.0;
  for (VertexId v : set) vol += static_cast<double>(g.degree(v));
  for (const Edge& e : g.edges()) cut += in[e.u] != in[e.v];
  if (vol == 0.0) throw InvalidArgument("conductance: zero volume");
  return cut / vol;
}

double second_eigenvalue(const Multigraph& g) {
  if (g.vertex_count() < 2) {
    throw InvalidArgument("second_eigenvalue: need at least 2 vertices");
  }
  if (!is_connected(g)) {
    throw InvalidArgument("second_eigenvalue: graph is disconnected");
  }
  return second_pair(g, walk_of(g)).value;
}

CheegerResult cheeger_bounds(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InvalidArgument("cheeger_bounds: need at least 2 vertices");
  if (!is_connected(g)) {
    throw InvalidArgument("cheeger_bounds: graph is disconnected");
  }
  const Walk walk = walk_of(g);
  const Eigenpair pair = second_pair(g, walk);

  CheegerResult out;
  out.method = "spectral";
  out.lambda2 = pair.value;
  // Rounding guard so that the bound never crosses an exact tie.
  out.lower = std::max(0.0, (1.0 - pair.value) / 2.0 - 1e-12);

  // Sweep over the walk eigenvector D^{-1/2} u.
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> key(n);
  for (VertexId v = 0; v < n; ++v) {
    key[v] = pair.vector[v] * walk.inv_sqrt_degree[v];
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return key[a] < key[b]; });
  double total = 0.0;
  for (double d : walk.degree) total += d;
  std::vector<char> in(n, 0);
  double cut = 0.0;
  double vol = 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_prefix = 0;
  bool best_inside = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const VertexId v = order[i];
    double to_prefix = 0.0;
    double non_loop = 0.0;
    for (const Incidence& inc : g.incident(v)) {
      if (inc.other == v) continue;
      non_loop += 1.0;
      if (in[inc.other]) to_prefix += 1.0;
    }
    in[v] = 1;
    cut += non_loop - 2.0 * to_prefix;
    vol += walk.degree[v];
    const bool inside = 2.0 * vol <= total;
    const double value = cut / (inside ? vol : total - vol);
    if (value < best) {
      best = value;
      best_prefix = i + 1;
      best_inside = inside;
    }
  }
  out.upper = best;
  for (std::size_t i = 0; i < n; ++i) {
    if ((i < best_prefix) == best_inside) out.witness.push_back(order[i]);
  }
  std::sort(out.witness.begin(), out.witness.end());
  out.lower = std::min(out.lower, out.upper);
  return out;
}

}  // namespace coremix
