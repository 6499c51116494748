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

// Random-walk quantities on graphs and weighted reversible chains: the
// stationary law, hitting and access times, the mixing time H, the uniform
// stopping mixing time U_eps, the chain induced on a vertex subset, and walk
// simulation.
//
// A loop at v contributes 2 to d_v and keeps the walk at v with probability
// 2/d_v. Distances between distributions are L1 (range [0, 2]).

#ifndef COREMIX_MIXING_H_
#define COREMIX_MIXING_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "coremix/multigraph.h"
#include "coremix/spectral.h"

namespace coremix {

inline constexpr std::size_t kMaxDenseStates = 4096;
inline constexpr std::size_t kMaxUniformHorizon = 1'000'000;

// pi_v = d_v / (2 E(G)). Throws InvalidArgument if g has no edges.
Eigen::VectorXd stationary(const Multigraph& g);
Eigen::VectorXd stationary(const WeightedChain& chain);

// Row-stochastic transition matrix.
Eigen::MatrixXd transition_matrix(const WeightedChain& chain);

// Full solve of a reversible chain.
//
// With N = Pi^{1/2} P Pi^{-1/2} and u = sqrt(pi), the matrix
// A = I - N + u u^T is positive definite for an irreducible chain and
// Z = A^{-1} gives every hitting time at once:
//   h(i,j) = Z(j,j)/pi_j - Z(i,j)/sqrt(pi_i pi_j).
struct ChainSolve {
  Eigen::VectorXd pi;
  Eigen::MatrixXd z;  // A^{-1}

  std::size_t size() const { return static_cast<std::size_t>(pi.size()); }
  double hitting(std::size_t i, std::size_t j) const;
  Eigen::MatrixXd hitting_matrix() const;
};

// Throws LimitExceeded above kMaxDenseStates states and InvalidArgument when
// the chain is reducible or empty.
ChainSolve solve_chain(const WeightedChain& chain);
ChainSolve solve_chain(const Multigraph& g);

// h(i,j): expected steps from i to the first visit of j (0 on the diagonal).
Eigen::MatrixXd hitting_times(const Multigraph& g);

// max_j (sigma h)_j - (tau h)_j. Throws InvalidArgument unless sigma and tau
// are probability vectors of the right size.
double access_time(const Eigen::VectorXd& sigma, const Eigen::VectorXd& tau,
                   const Eigen::MatrixXd& h);

struct MixingTime {
  double value = 0.0;
  VertexId witness = 0;  // start vertex attaining the maximum
};

// H = max over point masses sigma of access_time(sigma, pi).
MixingTime mixing_time_exact(const ChainSolve& solve);
MixingTime mixing_time_exact(const Multigraph& g);

struct UniformMixing {
  std::size_t t = 0;
  VertexId witness = 0;  // start with the largest distance at t - 1
  double distance = 0.0;  // max distance at t
};

// Least t >= 1 such that for every start v the average of
// delta_v P^0, ..., delta_v P^{t-1} is within L1 distance eps of pi.
// Throws LimitExceeded if t would exceed `cap`.
UniformMixing uniform_mixing_time(const Multigraph& g, double eps,
                                  std::size_t cap = kMaxUniformHorizon);

// Chain on B: q(v,w) is the probability that the walk started at v first
// returns to B (after at least one step) at w; weights are d_v(G) q(v,w).
struct InducedChain {
  std::vector<VertexId> states;  // sorted B
  Eigen::MatrixXd q;
  WeightedChain chain;
};

// Absorbing solves run per component of g - B; throws LimitExceeded if one
// exceeds kMaxDenseStates vertices, InvalidArgument if some component of
// g - B never reaches B or B is empty.
InducedChain induced_chain(const Multigraph& g, const std::vector<VertexId>& b);

struct WalkSample {
  std::vector<VertexId> trajectory;  // R(0), ..., R(steps)
  std::vector<std::size_t> returns;  // all t with R(t) in B, increasing
};

WalkSample simulate_walk(const Multigraph& g, VertexId start,
                         std::size_t steps, const std::vector<VertexId>& b,
                         std::uint64_t seed);

}  // namespace coremix

#endif  // COREMIX_MIXING_H_
