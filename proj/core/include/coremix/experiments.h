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

// Seeded experiment harness. Every experiment is a pure function of its
// configuration: trial i of a run uses substream_seed(seed, i) (nested once
// more per size for size sweeps), trials fan out over a worker pool capped
// by the COREMIX_THREADS environment variable, and results are gathered in
// trial order so that records are byte-identical across runs apart from the
// wall-clock field.

#ifndef COREMIX_EXPERIMENTS_H_
#define COREMIX_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coremix/error.h"
#include "coremix/multigraph.h"

namespace coremix {

// Malformed or inconsistent experiment configuration.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

inline constexpr int kConfigSchema = 1;

struct ExperimentConfig {
  int schema = kConfigSchema;
  std::string name;
  double c = 2.0;
  std::vector<std::size_t> sizes;
  std::size_t N = 32;
  double alpha = 0.01;
  double eps = 0.25;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::string output;  // path prefix for <output>.json and <output>.csv

  // Kernel expansion.
  std::size_t n_k = 1000;
  std::size_t m_k = 1700;
  std::size_t regular_degree = 0;  // nonzero: fixed d-regular sequence

  // Coalescing process.
  double delta = 0.01;
  double z_mean = 0.1;
  std::string z_law = "poisson";  // "poisson" or "geometric"
  double initial_mean = 1.0;      // mean initial component size of marked set

  double rate_min = 0.05;  // tail_statistics slope threshold
  bool uniform = false;    // also compute U_eps in the mixing sweep
  bool exact = true;       // compute exact H in the mixing sweep

  // Pre-registered acceptance thresholds, echoed in the record.
  std::map<std::string, double> thresholds;

  // Throws ConfigError.
  void validate() const;
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
void to_json(nlohmann::json& j, const ExperimentConfig& c);

struct RunRecord {
  ExperimentConfig config;
  nlohmann::json trials = nlohmann::json::array();
  nlohmann::json summary = nlohmann::json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  double wall_seconds = 0.0;

  nlohmann::json to_json() const;
  void write_csv(std::ostream& out) const;
  // Writes <prefix>.json and <prefix>.csv.
  void save(const std::string& prefix) const;
};

// Worker count: COREMIX_THREADS if set and positive, else hardware
// concurrency.
std::size_t worker_count();

// Runs fn(0..count-1) on the worker pool; exceptions propagate (first one).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// Giant component of G(n, round(cn/2)).
Multigraph sample_giant(double c, std::size_t n, std::uint64_t seed);

double median(std::vector<double> values);
double mean(const std::vector<double>& values);
double stddev(const std::vector<double>& values);

RunRecord exp_giant_sizes(const ExperimentConfig& config);
RunRecord exp_scaling_mixing(const ExperimentConfig& config);
RunRecord exp_diameter(const ExperimentConfig& config);
RunRecord exp_tails(const ExperimentConfig& config);
RunRecord exp_kernel_expansion(const ExperimentConfig& config);
RunRecord exp_simple_fraction(const ExperimentConfig& config);
RunRecord exp_coalesce(const ExperimentConfig& config);

// One run of the two-stage coalescing process on n vertices.
struct CoalesceOutcome {
  std::vector<std::size_t> initial_sizes;  // component sizes of F_n
  std::vector<std::size_t> final_sizes;    // component sizes of the result
  std::size_t added_edges = 0;
  std::size_t nontrivial_vertices = 0;     // in components of size >= 2
};

CoalesceOutcome simulate_coalesce(std::size_t n, double delta, double z_mean,
                                  const std::string& z_law,
                                  double initial_mean, std::uint64_t seed);

// Dispatches on config.name ("giant_sizes", "scaling_mixing", "diameter",
// "tails", "kernel_expansion", "simple_fraction", "coalesce"); throws
// ConfigError on an unknown name.
RunRecord run_experiment(const ExperimentConfig& config);

std::vector<std::string> experiment_names();

// One acceptance gate evaluated against a pre-registered threshold.
struct GateResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

void to_json(nlohmann::json& j, const GateResult& g);

// Evaluates the gates whose thresholds appear in record.config.thresholds.
// Gates are judged at the largest configured size. Recognized keys:
//   giant_sizes: giant_tolerance, core_tolerance
//   scaling_mixing: max_log2_ratio, min_log_ratio
//   diameter: max_band_ratio
//   tails, coalesce, kernel_expansion: min_pass_fraction
//   coalesce: max_nontrivial_fraction
//   simple_fraction: naive_tolerance, corrected_tolerance
std::vector<GateResult> evaluate_gates(const RunRecord& record);

}  // namespace coremix

#endif  // COREMIX_EXPERIMENTS_H_
