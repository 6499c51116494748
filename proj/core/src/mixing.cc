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

#include "coremix/mixing.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Sparse>

#include "coremix/error.h"
#include "coremix/rng.h"

namespace coremix {
namespace {

void check_distribution(const Eigen::VectorXd& x, Eigen::Index n,
                        const char* name) {
  if (x.size() != n) {
    throw InvalidArgument(std::string("access_time: ") + name +
                          " has the wrong size");
  }
  if ((x.array() < -1e-12).any() || std::abs(x.sum() - 1.0) > 1e-9) {
    throw InvalidArgument(std::string("access_time: ") + name +
                          " is not a probability vector");
  }
}

bool irreducible(const Eigen::MatrixXd& w) {
  const Eigen::Index n = w.rows();
  std::vector<char> seen(n, 0);
  std::vector<Eigen::Index> stack{0};
  seen[0] = 1;
  Eigen::Index count = 1;
  while (!stack.empty()) {
    const Eigen::Index i = stack.back();
    stack.pop_back();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!seen[j] && w(i, j) > 0.0) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n;
}

}  // namespace

Eigen::VectorXd stationary(const Multigraph& g) {
  if (g.edge_count() == 0) throw InvalidArgument("stationary: no edges");
  Eigen::VectorXd pi(g.vertex_count());
  const double total = 2.0 * static_cast<double>(g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    pi[v] = static_cast<double>(g.degree(v)) / total;
  }
  return pi;
}

Eigen::VectorXd stationary(const WeightedChain& chain) {
  Eigen::VectorXd pi = chain.weight.rowwise().sum();
  const double total = pi.sum();
  if (!(total > 0.0)) throw InvalidArgument("stationary: zero total weight");
  return pi / total;
}

Eigen::MatrixXd transition_matrix(const WeightedChain& chain) {
  const Eigen::VectorXd rows = chain.weight.rowwise().sum();
  if ((rows.array() <= 0.0).any()) {
    throw InvalidArgument("transition_matrix: state with zero weight");
  }
  return rows.cwiseInverse().asDiagonal() * chain.weight;
}

double ChainSolve::hitting(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return z(j, j) / pi[j] - z(i, j) / std::sqrt(pi[i] * pi[j]);
}

Eigen::MatrixXd ChainSolve::hitting_matrix() const {
  const Eigen::Index n = pi.size();
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) h(i, j) = hitting(i, j);
  }
  return h;
}

ChainSolve solve_chain(const WeightedChain& chain) {
  const std::size_t n = chain.size();
  if (n == 0) throw InvalidArgument("solve_chain: empty chain");
  if (n > kMaxDenseStates) {
    throw LimitExceeded("solve_chain: " + std::to_string(n) +
                        " states exceeds the dense limit of " +
                        std::to_string(kMaxDenseStates));
  }
  if (!irreducible(chain.weight)) {
    throw InvalidArgument("solve_chain: chain is reducible");
  }
  ChainSolve out;
  out.pi = stationary(chain);
  const Eigen::VectorXd deg = chain.weight.rowwise().sum();
  const Eigen::VectorXd inv_sqrt = deg.cwiseSqrt().cwiseInverse();
  const Eigen::VectorXd u = out.pi.cwiseSqrt();
  Eigen::MatrixXd a = -(inv_sqrt.asDiagonal() * chain.weight *
                        inv_sqrt.asDiagonal());
  a.diagonal().array() += 1.0;
  a.noalias() += u * u.transpose();
  Eigen::LLT<Eigen::Ref<Eigen::MatrixXd>> llt(a);
  if (llt.info() != Eigen::Success) {
    throw InvalidArgument("solve_chain: fundamental matrix is singular");
  }
  out.z = Eigen::MatrixXd::Identity(n, n);
  llt.solveInPlace(out.z);
  return out;
}

ChainSolve solve_chain(const Multigraph& g) {
  if (g.vertex_count() > kMaxDenseStates) {
    throw LimitExceeded("solve_chain: " + std::to_string(g.vertex_count()) +
                        " states exceeds the dense limit of " +
                        std::to_string(kMaxDenseStates));
  }
  if (g.edge_count() == 0) throw InvalidArgument("solve_chain: no edges");
  return solve_chain(chain_of(g));
}

Eigen::MatrixXd hitting_times(const Multigraph& g) {
  return solve_chain(g).hitting_matrix();
}

double access_time(const Eigen::VectorXd& sigma, const Eigen::VectorXd& tau,
                   const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols()) {
    throw InvalidArgument("access_time: hitting matrix is not square");
  }
  check_distribution(sigma, h.rows(), "sigma");
  check_distribution(tau, h.rows(), "tau");
  const Eigen::RowVectorXd diff =
      sigma.transpose() * h - tau.transpose() * h;
  return std::max(0.0, diff.maxCoeff());
}

MixingTime mixing_time_exact(const ChainSolve& solve) {
  // (delta_i h)_j - (pi h)_j = 1 - Z(i,j) / sqrt(pi_i pi_j), using Z u = u.
  const Eigen::Index n = solve.pi.size();
  const Eigen::VectorXd inv_sqrt = solve.pi.cwiseSqrt().cwiseInverse();
  MixingTime out;
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double value = 1.0 - solve.z(i, j) * inv_sqrt[i] * inv_sqrt[j];
      if (value > best) {
        best = value;
        out.witness = static_cast<VertexId>(i);
      }
    }
  }
  out.value = std::max(0.0, best);
  return out;
}

MixingTime mixing_time_exact(const Multigraph& g) {
  return mixing_time_exact(solve_chain(g));
}

UniformMixing uniform_mixing_time(const Multigraph& g, double eps,
                                  std::size_t cap) {
  if (!(eps > 0.0 && eps < 2.0)) {
    throw InvalidArgument("uniform_mixing_time: eps must lie in (0, 2)");
  }
  if (!is_connected(g)) {
    throw InvalidArgument("uniform_mixing_time: graph is disconnected");
  }
  const Eigen::VectorXd pi = stationary(g);
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  std::vector<Eigen::Triplet<double>> entries;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const double p = 1.0 / static_cast<double>(g.degree(v));
    for (const Incidence& inc : g.incident(v)) entries.emplace_back(v, inc.other, p);
  }
  Eigen::SparseMatrix<double> p(n, n);
  p.setFromTriplets(entries.begin(), entries.end());

  Eigen::MatrixXd x = Eigen::MatrixXd::Identity(n, n);  // row v: delta_v P^k
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  const Eigen::RowVectorXd pi_row = pi.transpose();
  UniformMixing out;
  for (std::size_t t = 1; t <= cap; ++t) {
    sum += x;
    double worst = 0.0;
    Eigen::Index witness = 0;
    const double inv_t = 1.0 / static_cast<double>(t);
    for (Eigen::Index v = 0; v < n; ++v) {
      const double d = (sum.row(v) * inv_t - pi_row).cwiseAbs().sum();
      if (d > worst) {
        worst = d;
        witness = v;
      }
    }
    if (worst <= eps) {
      out.t = t;
      out.distance = worst;
      return out;
    }
    out.witness = static_cast<VertexId>(witness);
    x = x * p;
  }
  throw LimitExceeded("uniform_mixing_time: horizon exceeds cap " +
                      std::to_string(cap));
}

InducedChain induced_chain(const Multigraph& g,
                           const std::vector<VertexId>& b) {
  const std::size_t n = g.vertex_count();
  InducedChain out;
  out.states = b;
  std::sort(out.states.begin(), out.states.end());
  out.states.erase(std::unique(out.states.begin(), out.states.end()),
                   out.states.end());
  if (out.states.empty()) throw InvalidArgument("induced_chain: empty B");
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> b_index(n, kNone);
  for (std::size_t i = 0; i < out.states.size(); ++i) {
    if (!g.valid(out.states[i])) {
      throw InvalidArgument("induced_chain: invalid vertex");
    }
    if (g.degree(out.states[i]) == 0) {
      throw InvalidArgument("induced_chain: isolated B vertex");
    }
    b_index[out.states[i]] = i;
  }
  const auto k = static_cast<Eigen::Index>(out.states.size());
  out.q = Eigen::MatrixXd::Zero(k, k);

  auto inv_degree = [&](VertexId v) {
    return 1.0 / static_cast<double>(g.degree(v));
  };

  // Direct steps from B to B.
  for (Eigen::Index i = 0; i < k; ++i) {
    const VertexId v = out.states[i];
    for (const Incidence& inc : g.incident(v)) {
      if (b_index[inc.other] != kNone) {
        out.q(i, b_index[inc.other]) += inv_degree(v);
      }
    }
  }

  // Excursions through each component of g - B.
  std::vector<std::size_t> local(n, kNone);
  constexpr auto kFree = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> comp_root(n, kFree);
  for (VertexId root = 0; root < n; ++root) {
    if (b_index[root] != kNone || comp_root[root] != kFree) continue;
    std::vector<VertexId> comp{root};
    comp_root[root] = root;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      for (const Incidence& inc : g.incident(comp[h])) {
        if (b_index[inc.other] == kNone && comp_root[inc.other] == kFree) {
          comp_root[inc.other] = root;
          comp.push_back(inc.other);
        }
      }
    }
    if (comp.size() > kMaxDenseStates) {
      throw LimitExceeded("induced_chain: component of " +
                          std::to_string(comp.size()) +
                          " vertices exceeds the dense limit");
    }
    std::vector<std::size_t> boundary;  // B indices adjacent to comp
    std::vector<std::size_t> column(out.states.size(), kNone);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
    for (VertexId x : comp) {
      for (const Incidence& inc : g.incident(x)) {
        const std::size_t bi = b_index[inc.other];
        if (bi != kNone && column[bi] == kNone) {
          column[bi] = boundary.size();
          boundary.push_back(bi);
        }
      }
    }
    if (boundary.empty()) {
      throw InvalidArgument("induced_chain: vertex " + std::to_string(root) +
                            " cannot reach B");
    }
    const auto s = static_cast<Eigen::Index>(comp.size());
    const auto r = static_cast<Eigen::Index>(boundary.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(s, s);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(s, r);
    for (Eigen::Index i = 0; i < s; ++i) {
      const VertexId x = comp[i];
      for (const Incidence& inc : g.incident(x)) {
        const std::size_t bi = b_index[inc.other];
        if (bi == kNone) {
          m(i, local[inc.other]) -= inv_degree(x);
        } else {
          rhs(i, column[bi]) += inv_degree(x);
        }
      }
    }
    const Eigen::MatrixXd absorb = m.partialPivLu().solve(rhs);
    for (std::size_t c = 0; c < boundary.size(); ++c) {
      const std::size_t i = boundary[c];
      const VertexId v = out.states[i];
      for (const Incidence& inc : g.incident(v)) {
        if (b_index[inc.other] != kNone || comp_root[inc.other] != root) {
          continue;
        }
        for (Eigen::Index w = 0; w < r; ++w) {
          out.q(i, boundary[w]) += inv_degree(v) * absorb(local[inc.other], w);
        }
      }
    }
  }

  out.chain.weight = Eigen::MatrixXd(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    out.chain.weight.row(i) =
        out.q.row(i) * static_cast<double>(g.degree(out.states[i]));
  }
  return out;
}

WalkSample simulate_walk(const Multigraph& g, VertexId start,
                         std::size_t steps, const std::vector<VertexId>& b,
                         std::uint64_t seed) {
  if (!g.valid(start)) throw InvalidArgument("simulate_walk: invalid start");
  std::vector<char> in_b(g.vertex_count(), 0);
  for (VertexId v : b) {
    if (!g.valid(v)) throw InvalidArgument("simulate_walk: invalid B vertex");
    in_b[v] = 1;
  }
  Rng rng(seed);
  WalkSample out;
  out.trajectory.reserve(steps + 1);
  VertexId at = start;
  out.trajectory.push_back(at);
  if (in_b[at]) out.returns.push_back(0);
  for (std::size_t t = 1; t <= steps; ++t) {
    const auto inc = g.incident(at);
    if (inc.empty()) {
      throw InvalidArgument("simulate_walk: walk reached an isolated vertex");
    }
    at = inc[rng.below(inc.size())].other;
    out.trajectory.push_back(at);
    if (in_b[at]) out.returns.push_back(t);
  }
  return out;
}

}  // namespace coremix
