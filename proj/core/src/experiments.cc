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

#include "coremix/experiments.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "coremix/certify.h"
#include "coremix/decompose.h"
#include "coremix/genmodels.h"
#include "coremix/mixing.h"
#include "coremix/rng.h"
#include "coremix/spectral.h"
#include "coremix/strip.h"

namespace coremix {
namespace {

using json = nlohmann::json;

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "giant_sizes", "scaling_mixing",  "diameter", "tails",
      "kernel_expansion", "simple_fraction", "coalesce"};
  return kNames;
}

bool uses_sizes(const std::string& name) { return name != "kernel_expansion"; }

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

std::string fmt(std::size_t x) { return std::to_string(x); }

double threshold(const ExperimentConfig& c, const std::string& key,
                 double fallback) {
  auto it = c.thresholds.find(key);
  return it == c.thresholds.end() ? fallback : it->second;
}

std::uint64_t trial_seed(const ExperimentConfig& c, std::size_t size_index,
                         std::size_t trial) {
  return substream_seed(substream_seed(c.seed, size_index), trial);
}

// Runs fn(size_index, trial, seed) for every (size, trial) pair in parallel
// and returns the results in (size, trial) order.
std::vector<json> sweep(
    const ExperimentConfig& c,
    const std::function<json(std::size_t, std::size_t, std::uint64_t)>& fn) {
  const std::size_t sizes = std::max<std::size_t>(c.sizes.size(), 1);
  std::vector<json> out(sizes * c.trials);
  parallel_for(out.size(), [&](std::size_t task) {
    const std::size_t s = task / c.trials;
    const std::size_t t = task % c.trials;
    const std::uint64_t seed = trial_seed(c, s, t);
    json j = fn(s, t, seed);
    if (!c.sizes.empty()) j["n"] = c.sizes[s];
    j["trial"] = t;
    j["seed"] = seed;
    out[task] = std::move(j);
  });
  return out;
}

std::vector<double> column(const std::vector<json>& rows, std::size_t from,
                           std::size_t count, const char* key) {
  std::vector<double> out;
  for (std::size_t i = from; i < from + count; ++i) {
    if (rows[i].contains(key) && rows[i][key].is_number()) {
      out.push_back(rows[i][key].get<double>());
    }
  }
  return out;
}

RunRecord start_record(const ExperimentConfig& c) {
  c.validate();
  RunRecord r;
  r.config = c;
  return r;
}

void finish(RunRecord& r, std::vector<json>&& trials,
            std::chrono::steady_clock::time_point begin) {
  r.trials = json::array();
  for (json& t : trials) r.trials.push_back(std::move(t));
  r.wall_seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - begin)
                       .count();
}

json tail_json(const TailFit& fit) {
  json j = {{"pass", fit.pass},
            {"eligible_points", fit.eligible_points},
            {"sample_size", fit.sample_size}};
  if (std::isfinite(fit.slope)) {
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept;
  } else {
    j["slope"] = nullptr;
    j["note"] = fit.note;
  }
  return j;
}

// Edge counts of the components of g after deleting the edges in `removed`.
std::vector<std::size_t> component_edge_counts(
    const Multigraph& g, const std::vector<EdgeId>& removed) {
  std::vector<char> gone(g.edge_count(), 0);
  for (EdgeId e : removed) gone[e] = 1;
  Multigraph rest(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!gone[e]) rest.add_edge(g.edge(e).u, g.edge(e).v);
  }
  return connected_components(rest).edge_counts;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (schema != kConfigSchema) {
    throw ConfigError("config: unsupported schema " + std::to_string(schema));
  }
  if (std::find(names().begin(), names().end(), name) == names().end()) {
    throw ConfigError("config: unknown experiment '" + name + "'");
  }
  if (trials < 1) throw ConfigError("config: trials must be >= 1");
  if (uses_sizes(name)) {
    if (sizes.empty()) throw ConfigError("config: sizes must be nonempty");
    for (std::size_t i = 1; i < sizes.size(); ++i) {
      if (sizes[i] <= sizes[i - 1]) {
        throw ConfigError("config: sizes must be increasing");
      }
    }
    if (sizes.front() < 2) throw ConfigError("config: sizes must be >= 2");
  }
  if (!(c > 0.0)) throw ConfigError("config: c must be positive");
  if (name == "giant_sizes" && !(c > 1.0)) {
    throw ConfigError("config: giant_sizes needs c > 1");
  }
  if (N < 2) throw ConfigError("config: N must be >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ConfigError("config: alpha must lie in (0, 1]");
  }
  if (!(eps > 0.0 && eps < 2.0)) {
    throw ConfigError("config: eps must lie in (0, 2)");
  }
  if (name == "scaling_mixing" && exact && sizes.back() > kMaxDenseStates) {
    throw ConfigError("config: exact mixing is limited to n <= " +
                      std::to_string(kMaxDenseStates));
  }
  if (name == "kernel_expansion") {
    if (n_k < 1) throw ConfigError("config: n_k must be >= 1");
    if (regular_degree == 0 && 2 * m_k < 3 * n_k) {
      throw ConfigError("config: need 2 m_k >= 3 n_k");
    }
    if (regular_degree != 0 && (regular_degree * n_k) % 2 != 0) {
      throw ConfigError("config: regular degree sequence has odd sum");
    }
  }
  if (name == "coalesce") {
    if (!(delta > 0.0 && delta < 1.0)) {
      throw ConfigError("config: delta must lie in (0, 1)");
    }
    if (!(z_mean >= 0.0 && z_mean < 0.5)) {
      throw ConfigError("config: z_mean must lie in [0, 1/2)");
    }
    if (z_law != "poisson" && z_law != "geometric") {
      throw ConfigError("config: z_law must be poisson or geometric");
    }
    if (!(initial_mean >= 1.0)) {
      throw ConfigError("config: initial_mean must be >= 1");
    }
  }
  if (!(rate_min > 0.0)) throw ConfigError("config: rate_min must be > 0");
}

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  static const std::set<std::string> kKeys = {
      "schema", "name",  "c",      "sizes",        "N",          "alpha",
      "eps",    "trials", "seed",  "output",       "n_k",        "m_k",
      "regular_degree",   "delta", "z_mean",       "z_law",      "initial_mean",
      "rate_min", "uniform", "exact", "thresholds"};
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.count(key)) throw ConfigError("config: unknown key '" + key + "'");
  }
  if (!j.contains("schema")) throw ConfigError("config: missing \"schema\"");
  if (!j.contains("name")) throw ConfigError("config: missing \"name\"");
  ExperimentConfig c;
  try {
    auto get = [&](const char* key, auto& field) {
      if (j.contains(key)) j.at(key).get_to(field);
    };
    get("schema", c.schema);
    get("name", c.name);
    get("c", c.c);
    get("sizes", c.sizes);
    get("N", c.N);
    get("alpha", c.alpha);
    get("eps", c.eps);
    get("trials", c.trials);
    get("seed", c.seed);
    get("output", c.output);
    get("n_k", c.n_k);
    get("m_k", c.m_k);
    get("regular_degree", c.regular_degree);
    get("delta", c.delta);
    get("z_mean", c.z_mean);
    get("z_law", c.z_law);
    get("initial_mean", c.initial_mean);
    get("rate_min", c.rate_min);
    get("uniform", c.uniform);
    get("exact", c.exact);
    get("thresholds", c.thresholds);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config: " + path + ": " + e.what());
  }
  return parse_config(j);
}

void to_json(json& j, const ExperimentConfig& c) {
  j = {{"schema", c.schema},
       {"name", c.name},
       {"c", c.c},
       {"sizes", c.sizes},
       {"N", c.N},
       {"alpha", c.alpha},
       {"eps", c.eps},
       {"trials", c.trials},
       {"seed", c.seed},
       {"output", c.output},
       {"n_k", c.n_k},
       {"m_k", c.m_k},
       {"regular_degree", c.regular_degree},
       {"delta", c.delta},
       {"z_mean", c.z_mean},
       {"z_law", c.z_law},
       {"initial_mean", c.initial_mean},
       {"rate_min", c.rate_min},
       {"uniform", c.uniform},
       {"exact", c.exact},
       {"thresholds", c.thresholds}};
}

json RunRecord::to_json() const {
  return {{"schema", kConfigSchema},
          {"config", config},
          {"trials", trials},
          {"summary", summary},
          {"wall_seconds", wall_seconds}};
}

void RunRecord::write_csv(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "," : "") << cells[i];
    }
    out << '\n';
  };
  line(csv_header);
  for (const auto& row : csv_rows) line(row);
}

void RunRecord::save(const std::string& prefix) const {
  std::ofstream js(prefix + ".json");
  std::ofstream csv(prefix + ".csv");
  if (!js || !csv) throw InvalidArgument("cannot write " + prefix + ".*");
  js << to_json().dump(2) << '\n';
  write_csv(csv);
}

std::size_t worker_count() {
  if (const char* env = std::getenv("COREMIX_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && value > 0) return static_cast<std::size_t>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Multigraph sample_giant(double c, std::size_t n, std::uint64_t seed) {
  return giant_component(
      sample_gnm(n, edges_for_average_degree(n, c), seed));
}

double median(std::vector<double> values) {
  if (values.empty()) return std::nan("");
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  return k % 2 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
}

double mean(const std::vector<double>& values) {
  if (values.empty()) return std::nan("");
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double stddev(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  const double m = mean(values);
  double acc = 0.0;
  for (double x : values) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(values.size() - 1));
}

RunRecord exp_giant_sizes(const ExperimentConfig& config) {
  const auto begin = std::chrono::steady_clock::now();
  RunRecord r = start_record(config);
  const GiantConstants k = giant_constants(config.c);
  auto rows = sweep(config, [&](std::size_t s, std::size_t, std::uint64_t seed) {
    const std::size_t n = config.sizes[s];
    const Multigraph g =
        sample_gnm(n, edges_for_average_degree(n, config.c), seed);
    const Subgraph giant = extract_giant(g);
    const Subgraph core = two_core(giant.graph);
    std::size_t deg2 = 0;
    for (VertexId v = 0; v < core.graph.vertex_count(); ++v) {
      deg2 += core.graph.degree(v) == 2;
    }
    const auto nd = static_cast<double>(n);
    return json{
        {"giant_fraction", giant.graph.vertex_count() / nd},
        {"core_fraction", core.graph.vertex_count() / nd},
        {"core_deg2_fraction",
         core.graph.empty() ? 0.0
                            : static_cast<double>(deg2) /
                                  static_cast<double>(core.graph.vertex_count())}};
  });
  r.csv_header = {"n",         "trials",    "giant_mean", "giant_sd",
                  "giant_pred", "core_mean", "core_sd",    "core_pred",
                  "deg2_mean"};
  json per_size = json::array();
  for (std::size_t s = 0; s < config.sizes.size(); ++s) {
    const std::size_t from = s * config.trials;
    const auto giant = column(rows, from, config.trials, "giant_fraction");
    const auto core = column(rows, from, config.trials, "core_fraction");
    const auto deg2 = column(rows, from, config.trials, "core_deg2_fraction");
    per_size.push_back({{"n", config.sizes[s]},
                        {"giant_mean", mean(giant)},
                        {"giant_sd", stddev(giant)},
                        {"core_mean", mean(core)},
                        {"core_sd", stddev(core)},
                        {"deg2_mean", mean(deg2)}});
    r.csv_rows.push_back({fmt(config.sizes[s]), fmt(config.trials),
                          fmt(mean(giant)), fmt(stddev(giant)), fmt(k.b),
                          fmt(mean(core)), fmt(stddev(core)), fmt(k.b_core),
                          fmt(mean(deg2))});
  }
  r.summary = {{"predicted_giant", k.b},
               {"predicted_core", k.b_core},
               {"t", k.t},
               {"per_size", per_size}};
  finish(r, std::move(rows), begin);
  return r;
}

RunRecord exp_scaling_mixing(const ExperimentConfig& config) {
  const auto begin = std::chrono::steady_clock::now();
  RunRecord r = start_record(config);
  auto rows = sweep(config, [&](std::size_t s, std::size_t, std::uint64_t seed) {
    const Multigraph giant = sample_giant(config.c, config.sizes[s], seed);
    json j = {{"giant_vertices", giant.vertex_count()}};
    if (giant.edge_count() == 0) return j;
    if (config.exact) {
      const MixingTime h = mixing_time_exact(giant);
      j["H"] = h.value;
      j["H_witness"] = h.witness;
    }
    if (config.uniform) {
      const UniformMixing u = uniform_mixing_time(giant, config.eps);
      j["U"] = u.t;
    }
    return j;
  });
  r.csv_header = {"n", "trials", "median_H", "median_H_over_log",
                  "median_H_over_log2", "median_U"};
  json per_size = json::array();
  std::vector<double> per_log;
  std::vector<double> per_log2;
  for (std::size_t s = 0; s < config.sizes.size(); ++s) {
    const std::size_t from = s * config.trials;
    const double ln = std::log(static_cast<double>(config.sizes[s]));
    const auto h = column(rows, from, config.trials, "H");
    const auto u = column(rows, from, config.trials, "U");
    std::vector<double> h_log;
    std::vector<double> h_log2;
    for (double x : h) {
      h_log.push_back(x / ln);
      h_log2.push_back(x / (ln * ln));
    }
    per_log.push_back(median(h_log));
    per_log2.push_back(median(h_log2));
    json row = {{"n", config.sizes[s]},
                {"median_H", median(h)},
                {"median_H_over_log", per_log.back()},
                {"median_H_over_log2", per_log2.back()}};
    if (!u.empty()) row["median_U"] = median(u);
    per_size.push_back(row);
    r.csv_rows.push_back({fmt(config.sizes[s]), fmt(config.trials),
                          fmt(median(h)), fmt(per_log.back()),
                          fmt(per_log2.back()),
                          u.empty() ? std::string() : fmt(median(u))});
  }
  r.summary = {{"per_size", per_size}};
  if (config.exact && !per_log.empty()) {
    const auto [lo, hi] = std::minmax_element(per_log2.begin(), per_log2.end());
    r.summary["log2_ratio"] = *hi / *lo;
    r.summary["log_ratio_last_first"] = per_log.back() / per_log.front();
  }
  finish(r, std::move(rows), begin);
  return r;
}

RunRecord exp_diameter(const ExperimentConfig& config) {
  const auto begin = std::chrono::steady_clock::now();
  RunRecord r = start_record(config);
  auto rows = sweep(config, [&](std::size_t s, std::size_t, std::uint64_t seed) {
    const Multigraph giant = sample_giant(config.c, config.sizes[s], seed);
    return json{{"giant_vertices", giant.vertex_count()},
                {"diameter", diameter(giant)},
                {"longest_2path", longest_2path(giant)}};
  });
  r.csv_header = {"n", "trials", "median_diameter", "median_diameter_over_log",
                  "median_longest_2path"};
  json per_size = json::array();
  std::vector<double> ratios;
  for (std::size_t s = 0; s < config.sizes.size(); ++s) {
    const std::size_t from = s * config.trials;
    const double ln = std::log(static_cast<double>(config.sizes[s]));
    const auto d = column(rows, from, config.trials, "diameter");
    const auto p = column(rows, from, config.trials, "longest_2path");
    ratios.push_back(median(d) / ln);
    per_size.push_back({{"n", config.sizes[s]},
                        {"median_diameter", median(d)},
                        {"median_diameter_over_log", ratios.back()},
                        {"median_longest_2path", median(p)}});
    r.csv_rows.push_back({fmt(config.sizes[s]), fmt(config.trials),
                          fmt(median(d)), fmt(ratios.back()), fmt(median(p))});
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  r.summary = {{"per_size", per_size}, {"band_ratio", *hi / *lo}};
  finish(r, std::move(rows), begin);
  return r;
}

RunRecord exp_tails(const ExperimentConfig& config) {
  const auto begin = std::chrono::steady_clock::now();
  RunRecord r = start_record(config);
  auto rows = sweep(config, [&](std::size_t s, std::size_t, std::uint64_t seed) {
    const Multigraph giant =
        sample_giant(config.c, config.sizes[s], substream_seed(seed, 0));
    json j = {{"giant_vertices", giant.vertex_count()}};
    const Subgraph core = two_core(giant);
    if (core.graph.empty()) {
      j["tree_tail"] = {{"skipped", "empty 2-core"}};
    } else {
      const ForestStats forest = attached_forest(giant, core);
      j["rho"] = forest.rho;
      j["tree_tail"] = tail_json(
          tail_statistics(forest.tree_size, config.rate_min));
    }
    StripParams params;
    params.N = config.N;
    params.seed = substream_seed(seed, 1);
    const StripResult strip = severe_strip(giant, params);
    j["reduced_vertices"] = strip.reduced.graph.vertex_count();
    if (strip.reduced.graph.vertex_count() == 0) {
      j["component_tail"] = {{"skipped", "empty reduced core"}};
    } else {
      const auto counts =
          component_edge_counts(giant, strip.reduced.parent_edge);
      j["component_tail"] =
          tail_json(tail_statistics(counts, config.rate_min));
    }
    return j;
  });
  r.csv_header = {"n", "trials", "tree_evaluated", "tree_pass",
                  "component_evaluated", "component_pass"};
  json per_size = json::array();
  for (std::size_t s = 0; s < config.sizes.size(); ++s) {
    std::size_t tree_n = 0, tree_pass = 0, comp_n = 0, comp_pass = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      const json& row = rows[s * config.trials + t];
      if (row["tree_tail"].contains("pass")) {
        ++tree_n;
        tree_pass += row["tree_tail"]["pass"].get<bool>();
      }
      if (row["component_tail"].contains("pass")) {
        ++comp_n;
        comp_pass += row["component_tail"]["pass"].get<bool>();
      }
    }
    per_size.push_back({{"n", config.sizes[s]},
                        {"tree_evaluated", tree_n},
                        {"tree_pass", tree_pass},
                        {"component_evaluated", comp_n},
                        {"component_pass", comp_pass}});
    r.csv_rows.push_back({fmt(config.sizes[s]), fmt(config.trials),
                          fmt(tree_n), fmt(tree_pass), fmt(comp_n),
                          fmt(comp_pass)});
  }
  r.summary = {{"per_size", per_size}};
  finish(r, std::move(rows), begin);
  return r;
}

RunRecord exp_kernel_expansion(const ExperimentConfig& config) {
  const auto begin = std::chrono::steady_clock::now();
  RunRecord r = start_record(config);
  const double lower_min = threshold(config, "spectral_lower", 0.01);
  const double density_max = threshold(config, "max_density", 1.2);
  auto rows = sweep(config, [&](std::size_t, std::size_t, std::uint64_t seed) {
    const DegreeSequence d =
        config.regular_degree != 0
            ? DegreeSequence(config.n_k, config.regular_degree)
            : sample_kernel_degrees(config.n_k, config.m_k,
                                    substream_seed(seed, 0));
    const Multigraph g = sample_pairing(d, substream_seed(seed, 1));
    json j = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    const bool connected = is_connected(g);
    j["connected"] = connected;
    if (connected && g.vertex_count() >= 2) {
      const CheegerResult cb = cheeger_bounds(g);
      j["spectral_lower"] = cb.lower;
      j["sweep_upper"] = cb.upper;
      j["lambda2"] = cb.lambda2;
    } else {
      j["spectral_lower"] = 0.0;
    }
    const DensestSubgraph ds = densest_subgraph(g);
    j["density"] = ds.density;
    j["densest_vertices"] = ds.vertices;
    return j;
  });
  std::size_t lower_pass = 0;
  std::size_t density_pass = 0;
  for (const json& row : rows) {
    lower_pass += row["spectral_lower"].get<double>() > lower_min;
    density_pass += row["density"].get<double>() <= density_max;
  }
  const auto lower = column(rows, 0, rows.size(), "spectral_lower");
  const auto density = column(rows, 0, rows.size(), "density");
  r.summary = {{"spectral_lower_threshold", lower_min},
               {"max_density_threshold", density_max},
               {"spectral_lower_pass", lower_pass},
               {"density_pass", density_pass},
               {"median_spectral_lower", median(lower)},
               {"median_density", median(density)}};
  r.csv_header = {"n_k",          "m_k",           "trials",
                  "lower_pass",   "density_pass",  "median_lower",
                  "median_density"};
  r.csv_rows.push_back({fmt(config.n_k), fmt(config.m_k), fmt(config.trials),
                        fmt(lower_pass), fmt(density_pass),
                        fmt(median(lower)), fmt(median(density))});
  finish(r, std::move(rows), begin);
  return r;
}

RunRecord exp_simple_fraction(const ExperimentConfig& config) {
  const auto begin = std::chrono::steady_clock::now();
  RunRecord r = start_record(config);
  auto rows = sweep(config, [&](std::size_t s, std::size_t, std::uint64_t seed) {
    const std::size_t n = config.sizes[s];
    const Multigraph g =
        sample_cnm(n, edges_for_average_degree(n, config.c), seed);
    return json{{"simple", is_simple(g)}};
  });
  r.csv_header = {"n",        "m", "trials", "fraction", "sigma",
                  "predicted_naive", "predicted_corrected"};
  json per_size = json::array();
  for (std::size_t s = 0; s < config.sizes.size(); ++s) {
    const std::size_t n = config.sizes[s];
    const std::size_t m = edges_for_average_degree(n, config.c);
    std::size_t simple = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      simple += rows[s * config.trials + t]["simple"].get<bool>();
    }
    const double fraction =
        static_cast<double>(simple) / static_cast<double>(config.trials);
    const auto nd = static_cast<double>(n);
    const auto md = static_cast<double>(m);
    const double mu1 = md / nd;
    // Two edges are parallel with probability 2/n^2; the naive prediction
    // uses half that.
    const double naive = std::exp(-mu1 - md * (md - 1) / 2 / (nd * nd));
    const double corrected = std::exp(-mu1 - md * (md - 1) / (nd * nd));
    const double sigma = std::sqrt(fraction * (1 - fraction) /
                                   static_cast<double>(config.trials));
    per_size.push_back({{"n", n},
                        {"m", m},
                        {"fraction", fraction},
                        {"sigma", sigma},
                        {"predicted_naive", naive},
                        {"predicted_corrected", corrected}});
    r.csv_rows.push_back({fmt(n), fmt(m), fmt(config.trials), fmt(fraction),
                          fmt(sigma), fmt(naive), fmt(corrected)});
  }
  r.summary = {{"per_size", per_size}};
  finish(r, std::move(rows), begin);
  return r;
}

CoalesceOutcome simulate_coalesce(std::size_t n, double delta, double z_mean,
                                  const std::string& z_law,
                                  double initial_mean, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("simulate_coalesce: n must be positive");
  Rng rng(seed);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(std::span<VertexId>(perm));
  const auto marked = static_cast<std::size_t>(std::floor(delta * n));

  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](VertexId a, VertexId b) { parent[find(a)] = find(b); };
  auto sizes = [&] {
    std::vector<std::size_t> count(n, 0);
    for (VertexId v = 0; v < n; ++v) ++count[find(v)];
    std::vector<std::size_t> out;
    for (std::size_t c : count) {
      if (c) out.push_back(c);
    }
    return out;
  };

  // F_n: marked vertices grouped into paths of size 1 + Geometric.
  std::vector<Edge> initial;
  const double p_stop = 1.0 / initial_mean;
  for (std::size_t i = 0; i < marked;) {
    const std::size_t len =
        std::min<std::size_t>(1 + rng.geometric(p_stop), marked - i);
    for (std::size_t k = 1; k < len; ++k) {
      initial.push_back({perm[i + k - 1], perm[i + k]});
      unite(perm[i + k - 1], perm[i + k]);
    }
    i += len;
  }
  CoalesceOutcome out;
  out.initial_sizes = sizes();

  auto draw_z = [&]() -> std::uint64_t {
    if (z_mean <= 0.0) return 0;
    if (z_law == "geometric") return rng.geometric(1.0 / (1.0 + z_mean));
    return rng.poisson(z_mean);
  };

  // Growth and identification in one pass: each child of a processed vertex
  // is identified with a uniformly chosen processed vertex with probability
  // k/n (its subtree is pruned), and is otherwise a fresh vertex.
  std::vector<VertexId> processed;
  std::size_t fresh = marked;  // perm[fresh..] are untouched vertices
  std::vector<VertexId> queue;
  for (std::size_t i = 0; i < marked; ++i) {
    queue.assign(1, perm[i]);
    processed.push_back(perm[i]);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const VertexId x = queue[h];
      const std::uint64_t children = draw_z();
      for (std::uint64_t c = 0; c < children; ++c) {
        const double k = static_cast<double>(processed.size());
        if (fresh >= n || rng.uniform() < k / static_cast<double>(n)) {
          unite(x, processed[rng.below(processed.size())]);
        } else {
          const VertexId w = perm[fresh++];
          unite(x, w);
          processed.push_back(w);
          queue.push_back(w);
        }
        ++out.added_edges;
      }
    }
  }
  out.final_sizes = sizes();
  for (std::size_t s : out.final_sizes) {
    if (s >= 2) out.nontrivial_vertices += s;
  }
  return out;
}

RunRecord exp_coalesce(const ExperimentConfig& config) {
  const auto begin = std::chrono::steady_clock::now();
  RunRecord r = start_record(config);
  auto rows = sweep(config, [&](std::size_t s, std::size_t, std::uint64_t seed) {
    const std::size_t n = config.sizes[s];
    const CoalesceOutcome o =
        simulate_coalesce(n, config.delta, config.z_mean, config.z_law,
                          config.initial_mean, seed);
    const std::size_t largest =
        *std::max_element(o.final_sizes.begin(), o.final_sizes.end());
    return json{
        {"added_edges", o.added_edges},
        {"components", o.final_sizes.size()},
        {"largest_component", largest},
        {"nontrivial_fraction",
         static_cast<double>(o.nontrivial_vertices) / static_cast<double>(n)},
        {"tail", tail_json(tail_statistics(o.final_sizes, config.rate_min))}};
  });
  r.csv_header = {"n", "trials", "tail_pass", "mean_nontrivial_fraction",
                  "max_nontrivial_fraction"};
  json per_size = json::array();
  for (std::size_t s = 0; s < config.sizes.size(); ++s) {
    const std::size_t from = s * config.trials;
    std::size_t pass = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      pass += rows[from + t]["tail"]["pass"].get<bool>();
    }
    const auto frac = column(rows, from, config.trials, "nontrivial_fraction");
    const double worst = *std::max_element(frac.begin(), frac.end());
    per_size.push_back({{"n", config.sizes[s]},
                        {"tail_pass", pass},
                        {"mean_nontrivial_fraction", mean(frac)},
                        {"max_nontrivial_fraction", worst}});
    r.csv_rows.push_back({fmt(config.sizes[s]), fmt(config.trials), fmt(pass),
                          fmt(mean(frac)), fmt(worst)});
  }
  r.summary = {{"per_size", per_size}};
  finish(r, std::move(rows), begin);
  return r;
}

RunRecord run_experiment(const ExperimentConfig& config) {
  const std::string& name = config.name;
  if (name == "giant_sizes") return exp_giant_sizes(config);
  if (name == "scaling_mixing") return exp_scaling_mixing(config);
  if (name == "diameter") return exp_diameter(config);
  if (name == "tails") return exp_tails(config);
  if (name == "kernel_expansion") return exp_kernel_expansion(config);
  if (name == "simple_fraction") return exp_simple_fraction(config);
  if (name == "coalesce") return exp_coalesce(config);
  throw ConfigError("unknown experiment '" + name + "'");
}

std::vector<std::string> experiment_names() { return names(); }

void to_json(json& j, const GateResult& g) {
  j = {{"name", g.name},
       {"value", g.value},
       {"threshold", g.threshold},
       {"pass", g.pass}};
}

std::vector<GateResult> evaluate_gates(const RunRecord& record) {
  const ExperimentConfig& c = record.config;
  const json& summary = record.summary;
  std::vector<GateResult> gates;
  auto gate = [&](const std::string& key, const std::string& name,
                  double value, bool at_most) {
    auto it = c.thresholds.find(key);
    if (it == c.thresholds.end()) return;
    const double limit = it->second;
    gates.push_back({name, value, limit,
                     at_most ? value <= limit : value >= limit});
  };
  const double trials = static_cast<double>(c.trials);
  const json last = summary.contains("per_size") && !summary["per_size"].empty()
                        ? summary["per_size"].back()
                        : json::object();
  if (c.name == "giant_sizes") {
    gate("giant_tolerance", "giant_fraction_error",
         std::abs(last["giant_mean"].get<double>() -
                  summary["predicted_giant"].get<double>()),
         true);
    gate("core_tolerance", "core_fraction_error",
         std::abs(last["core_mean"].get<double>() -
                  summary["predicted_core"].get<double>()),
         true);
  } else if (c.name == "scaling_mixing") {
    if (summary.contains("log2_ratio")) {
      gate("max_log2_ratio", "log2_ratio", summary["log2_ratio"], true);
      gate("min_log_ratio", "log_ratio_last_first",
           summary["log_ratio_last_first"], false);
    }
  } else if (c.name == "diameter") {
    gate("max_band_ratio", "band_ratio", summary["band_ratio"], true);
  } else if (c.name == "tails") {
    gate("min_pass_fraction", "tree_pass_fraction",
         last["tree_pass"].get<double>() / trials, false);
    gate("min_pass_fraction", "component_pass_fraction",
         last["component_pass"].get<double>() / trials, false);
  } else if (c.name == "kernel_expansion") {
    gate("min_pass_fraction", "spectral_lower_pass_fraction",
         summary["spectral_lower_pass"].get<double>() / trials, false);
    gate("min_pass_fraction", "density_pass_fraction",
         summary["density_pass"].get<double>() / trials, false);
  } else if (c.name == "simple_fraction") {
    const double f = last["fraction"];
    gate("naive_tolerance", "naive_prediction_error",
         std::abs(f - last["predicted_naive"].get<double>()), true);
    gate("corrected_tolerance", "corrected_prediction_error",
         std::abs(f - last["predicted_corrected"].get<double>()), true);
  } else if (c.name == "coalesce") {
    gate("min_pass_fraction", "tail_pass_fraction",
         last["tail_pass"].get<double>() / trials, false);
    gate("max_nontrivial_fraction", "max_nontrivial_fraction",
         last["max_nontrivial_fraction"], true);
  }
  return gates;
}

}  // namespace coremix
