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

// Random graph models: G(n,p), G(n,m), the pseudograph model C(n,m) with
// i.i.d. uniform edge ends and its minimum-degree restriction, the pairing
// (configuration) model, kernel degree sequences, and random ordered
// assignments of degree-2 vertices to kernel edges. Every sampler is a pure
// function of its arguments and seed.

#ifndef COREMIX_GENMODELS_H_
#define COREMIX_GENMODELS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coremix/multigraph.h"

namespace coremix {

struct ModelParams {
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.0;
  double c = 0.0;
  std::uint64_t seed = 0;
};

using DegreeSequence = std::vector<std::size_t>;

// Constants of the supercritical giant: t solves t e^{-t} = c e^{-c} on
// (0,1), b = 1 - t/c is the giant fraction and b_core = b(1-t) the 2-core
// fraction.
struct GiantConstants {
  double c = 0.0;
  double t = 0.0;
  double b = 0.0;
  double b_core = 0.0;
};

inline constexpr std::uint64_t kDefaultMaxTries = 10'000'000;

// Edge count m = round(c n / 2) used for "m ~ cn/2".
std::size_t edges_for_average_degree(std::size_t n, double c);

Multigraph sample_gnp(std::size_t n, double p, std::uint64_t seed);

// Uniform simple graph with exactly m edges. Throws if m > n(n-1)/2.
Multigraph sample_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

// m edges whose 2m ends are i.i.d. uniform on [n]; loops and parallel edges
// are kept.
Multigraph sample_cnm(std::size_t n, std::size_t m, std::uint64_t seed);

// C(n,m) conditioned on minimum degree >= k, by rejection. Throws
// LimitExceeded after max_tries draws.
Multigraph sample_cnm_mindeg(std::size_t n, std::size_t m, std::size_t k,
                             std::uint64_t seed,
                             std::uint64_t max_tries = kDefaultMaxTries);

// Uniform perfect matching of sum(d) points grouped into cells; each matched
// pair becomes an edge between the owning cells.
Multigraph sample_pairing(const DegreeSequence& d, std::uint64_t seed);

// Occupancies of 2*m_k uniform throws into n_k cells conditioned on every
// cell receiving at least 3. Drawn as i.i.d. Poisson truncated to >= 3, with
// the rate chosen so the truncated mean is 2 m_k / n_k, and rejected until the
// total is exactly 2 m_k.
DegreeSequence sample_kernel_degrees(std::size_t n_k, std::size_t m_k,
                                     std::uint64_t seed,
                                     std::uint64_t max_tries = kDefaultMaxTries);

// Rate lambda with E[X | X >= 3] = mean for X ~ Poisson(lambda); mean > 3.
double truncated_poisson_rate(double mean);

// Assigns items 0..num_deg2-1 to num_edges ordered lists so that every
// assignment together with every ordering within each list is equally likely.
// Items are inserted one by one into a uniformly chosen slot among the
// num_edges + (items placed so far) available gaps.
std::vector<std::vector<std::uint32_t>> random_ordered_assignment(
    std::size_t num_edges, std::size_t num_deg2, std::uint64_t seed);

// Throws InvalidArgument unless c > 1.
GiantConstants giant_constants(double c);

}  // namespace coremix

#endif  // COREMIX_GENMODELS_H_
