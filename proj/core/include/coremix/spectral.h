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

// Cheeger constants of reversible chains: exact minimization by subset
// enumeration, and a spectral sandwich for larger graphs.
//
// A graph is read as the chain with weight w(i,j) = number of parallel i-j
// edges and w(i,i) = 2 * loops at i, so that the stationary law is
// proportional to degree. For a set S the normalized flow out of S is
// w(S, S^c) / vol(S), and the Cheeger constant minimizes it over sets with
// 0 < vol(S) <= vol(V) / 2.

#ifndef COREMIX_SPECTRAL_H_
#define COREMIX_SPECTRAL_H_

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coremix/multigraph.h"

namespace coremix {

inline constexpr std::size_t kMaxExactCheegerStates = 24;

// Symmetric nonnegative weights of a reversible chain; the stationary law is
// proportional to the row sums.
struct WeightedChain {
  Eigen::MatrixXd weight;

  std::size_t size() const { return static_cast<std::size_t>(weight.rows()); }
};

// Dense weight matrix of the simple random walk on g.
WeightedChain chain_of(const Multigraph& g);

struct CheegerResult {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  std::vector<VertexId> witness;  // set attaining `upper`
  std::string method;             // "exact" or "spectral"
  double lambda2 = 0.0;           // second eigenvalue of the walk (spectral)
};

// Exact Cheeger constant by Gray-code enumeration. Throws InvalidArgument on
// fewer than 2 or more than kMaxExactCheegerStates states, or a disconnected
// chain.
CheegerResult cheeger_exact(const Multigraph& g);
CheegerResult cheeger_exact(const WeightedChain& chain);

// Normalized flow out of `set` (no side condition on its volume).
double conductance(const Multigraph& g, const std::vector<VertexId>& set);

// lower = (1 - lambda2) / 2, where lambda2 is the second largest eigenvalue of
// the walk (equivalently 1 - lambda2 of the lazy walk); upper = best sweep cut
// of the corresponding eigenvector. Small graphs use a dense eigensolver,
// larger ones Lanczos with full reorthogonalization. Throws InvalidArgument on
// disconnected input and NotConverged if Lanczos stalls.
CheegerResult cheeger_bounds(const Multigraph& g);

// Second largest eigenvalue of the walk on g.
double second_eigenvalue(const Multigraph& g);

}  // namespace coremix

#endif  // COREMIX_SPECTRAL_H_
