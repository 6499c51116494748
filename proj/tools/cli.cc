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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "coremix/certify.h"
#include "coremix/decompose.h"
#include "coremix/edge_list.h"
#include "coremix/error.h"
#include "coremix/experiments.h"
#include "coremix/genmodels.h"
#include "coremix/mixing.h"
#include "coremix/multigraph.h"
#include "coremix/strip.h"

namespace coremix {
namespace {

using json = nlohmann::json;

// Writes `text` to `path`, or to `out` when path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidArgument("cannot write " + path);
  file << text;
}

Multigraph read_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  return load_edge_list(path);
}

std::vector<VertexId> read_vertex_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::vector<VertexId> out;
  long long v = 0;
  while (in >> v) {
    if (v < 0) throw InvalidArgument("negative vertex id in " + path);
    out.push_back(static_cast<VertexId>(v));
  }
  if (!in.eof()) throw InvalidArgument("malformed vertex list " + path);
  return out;
}

json histogram(const std::vector<std::size_t>& values) {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t v : values) ++h[v];
  json j = json::object();
  for (const auto& [value, count] : h) j[std::to_string(value)] = count;
  return j;
}

std::string graph_text(const Multigraph& g) {
  std::ostringstream s;
  write_edge_list(s, g);
  return s.str();
}

struct SampleArgs {
  std::string model = "gnm";
  std::size_t n = 0;
  std::optional<std::size_t> m;
  std::optional<double> c;
  double p = 0.0;
  std::size_t k = 3;
  std::uint64_t seed = 0;
  std::string degrees;
  std::string out;
};

int run_sample(const SampleArgs& a, std::ostream& out) {
  std::size_t m = a.m.value_or(0);
  if (!a.m && a.c) m = edges_for_average_degree(a.n, *a.c);
  Multigraph g;
  if (a.model == "gnp") {
    g = sample_gnp(a.n, a.p, a.seed);
  } else if (a.model == "gnm") {
    g = sample_gnm(a.n, m, a.seed);
  } else if (a.model == "cnm") {
    g = sample_cnm(a.n, m, a.seed);
  } else if (a.model == "cnm-mindeg") {
    g = sample_cnm_mindeg(a.n, m, a.k, a.seed);
  } else {
    DegreeSequence d;
    if (!a.degrees.empty()) {
      for (VertexId v : read_vertex_list(a.degrees)) d.push_back(v);
    } else {
      d = sample_kernel_degrees(a.n, m, a.seed);
    }
    g = sample_pairing(d, substream_seed(a.seed, 1));
  }
  emit(a.out, graph_text(g), out);
  return kExitOk;
}

int run_decompose(const std::string& in, const std::string& path,
                  std::ostream& out) {
  const Multigraph g = read_graph(in);
  const Subgraph giant = extract_giant(g);
  const Subgraph core = two_core(giant.graph);
  json j = {{"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"giant_vertices", giant.graph.vertex_count()},
            {"giant_edges", giant.graph.edge_count()},
            {"core_vertices", core.graph.vertex_count()},
            {"core_edges", core.graph.edge_count()}};
  if (!core.graph.empty()) {
    const KernelResult k = kernel(core.graph);
    j["kernel_vertices"] = k.kernel.vertex_count();
    j["kernel_edges"] = k.kernel.edge_count();
    j["dropped_cycles"] = k.dropped_cycles.size();
    std::vector<std::size_t> lengths;
    for (const TwoPath& p : maximal_2paths(core.graph)) {
      lengths.push_back(p.length);
    }
    j["two_path_lengths"] = histogram(lengths);
    const ForestStats forest = attached_forest(giant.graph, core);
    j["tree_sizes"] = histogram(forest.tree_size);
    j["rho"] = forest.rho;
  }
  emit(path, j.dump(2) + "\n", out);
  return kExitOk;
}

int run_strip(const std::string& in, std::size_t N, std::uint64_t seed,
              const std::string& trace, const std::string& path,
              std::ostream& out) {
  const Multigraph g = read_graph(in);
  StripParams params;
  params.N = N;
  params.seed = seed;
  params.record_trace = !trace.empty();
  const StripResult r = severe_strip(g, params);
  if (!trace.empty()) {
    std::ofstream t(trace);
    if (!t) throw InvalidArgument("cannot write " + trace);
    r.trace.write_json_lines(t);
  }
  emit(path, graph_text(r.reduced.graph), out);
  return kExitOk;
}

int report_certificate(const ANCertificate& cert, bool check,
                       const std::string& path, std::ostream& out) {
  emit(path, json(cert).dump(2) + "\n", out);
  return check && !cert.pass ? kExitCheckFailed : kExitOk;
}

struct MixArgs {
  std::string in;
  std::string mode = "exact";
  double eps = 0.25;
  std::size_t steps = 1000;
  std::uint64_t seed = 0;
  VertexId start = 0;
  std::string b;
  std::string out;
};

int run_mix(const MixArgs& a, std::ostream& out) {
  const Multigraph g = read_graph(a.in);
  json j = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  if (a.mode == "exact") {
    const MixingTime h = mixing_time_exact(g);
    j["H"] = h.value;
    j["witness"] = h.witness;
  } else if (a.mode == "uniform") {
    const UniformMixing u = uniform_mixing_time(g, a.eps);
    j["eps"] = a.eps;
    j["U"] = u.t;
    j["distance"] = u.distance;
    j["witness"] = u.witness;
  } else {
    std::vector<VertexId> b;
    if (!a.b.empty()) b = read_vertex_list(a.b);
    const WalkSample w = simulate_walk(g, a.start, a.steps, b, a.seed);
    j["start"] = a.start;
    j["steps"] = a.steps;
    j["trajectory"] = w.trajectory;
    j["returns"] = w.returns;
  }
  emit(a.out, j.dump(2) + "\n", out);
  return kExitOk;
}

int run_experiment_command(const std::string& name, const std::string& path,
                           const std::string& output, bool check,
                           std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config: " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  if (!name.empty()) {
    if (j.contains("name") && j["name"] != name) {
      throw ConfigError("config: name does not match --name " + name);
    }
    j["name"] = name;
  }
  ExperimentConfig config = parse_config(j);
  if (!output.empty()) config.output = output;
  const RunRecord record = run_experiment(config);
  if (!config.output.empty()) record.save(config.output);
  const std::vector<GateResult> gates = evaluate_gates(record);
  bool ok = true;
  for (const GateResult& g : gates) ok = ok && g.pass;
  json report = {{"name", config.name},
                 {"summary", record.summary},
                 {"gates", gates},
                 {"wall_seconds", record.wall_seconds}};
  out << report.dump(2) << '\n';
  return check && !ok ? kExitCheckFailed : kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Random multigraph cores, stripping and mixing times"};
  app.name("coremix");
  app.require_subcommand(1);

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Sample a random multigraph");
  sample_cmd->add_option("--model", sample.model, "Random graph model")
      ->check(CLI::IsMember({"gnp", "gnm", "cnm", "cnm-mindeg", "pairing"}));
  sample_cmd->add_option("--n", sample.n, "Vertex count")->required();
  sample_cmd->add_option("--m", sample.m, "Edge count");
  sample_cmd->add_option("--c", sample.c, "Average degree, sets m = round(cn/2)");
  sample_cmd->add_option("--p", sample.p, "Edge probability for gnp");
  sample_cmd->add_option("--k", sample.k, "Minimum degree for cnm-mindeg");
  sample_cmd->add_option("--degrees", sample.degrees,
                         "Degree sequence file for pairing");
  sample_cmd->add_option("--seed", sample.seed, "Random seed");
  sample_cmd->add_option("--out", sample.out, "Output edge list");

  std::string in;
  std::string output;
  auto* decompose_cmd = app.add_subcommand(
      "decompose", "Report giant, 2-core and kernel structure");
  decompose_cmd->add_option("--in", in, "Input edge list")->required();
  decompose_cmd->add_option("--out", output, "Output JSON report");

  std::size_t N = 32;
  std::uint64_t seed = 0;
  std::string trace;
  auto* strip_cmd = app.add_subcommand("strip", "Run severe stripping");
  strip_cmd->add_option("--in", in, "Input edge list")->required();
  strip_cmd->add_option("--N", N, "Path length threshold");
  strip_cmd->add_option("--seed", seed, "Random seed for red-edge choices");
  strip_cmd->add_option("--trace", trace, "JSON-lines step trace");
  strip_cmd->add_option("--out", output, "Reduced core edge list");

  std::string b_path;
  double alpha = 0.05;
  bool check = false;
  auto* certify_cmd =
      app.add_subcommand("certify", "Check a decorated expander certificate");
  certify_cmd->add_option("--in", in, "Input edge list")->required();
  certify_cmd->add_option("--B", b_path, "File with the vertex ids of B")
      ->required();
  certify_cmd->add_option("--alpha", alpha, "Expansion parameter");
  certify_cmd->add_option("--out", output, "Output JSON certificate");
  certify_cmd->add_flag("--check", check, "Exit 3 if the certificate fails");

  auto* strong_cmd = app.add_subcommand(
      "strong-core", "Strip and certify the reduced core");
  strong_cmd->add_option("--in", in, "Input edge list")->required();
  strong_cmd->add_option("--N", N, "Path length threshold");
  strong_cmd->add_option("--alpha", alpha, "Expansion parameter");
  strong_cmd->add_option("--seed", seed, "Random seed");
  strong_cmd->add_option("--out", output, "Output JSON certificate");
  strong_cmd->add_flag("--check", check, "Exit 3 if the certificate fails");
  bool giant_only = false;
  strong_cmd->add_flag("--giant", giant_only,
                       "Certify the giant component of the input");

  MixArgs mix;
  auto* mix_cmd = app.add_subcommand("mix", "Mixing times and walks");
  mix_cmd->add_option("--in", mix.in, "Input edge list")->required();
  mix_cmd->add_option("--mode", mix.mode, "What to compute")
      ->check(CLI::IsMember({"exact", "uniform", "simulate"}));
  mix_cmd->add_option("--eps", mix.eps, "L1 threshold for uniform mode");
  mix_cmd->add_option("--steps", mix.steps, "Walk length for simulate mode");
  mix_cmd->add_option("--start", mix.start, "Start vertex for simulate mode");
  mix_cmd->add_option("--B", mix.b, "Vertex file; returns to B are recorded");
  mix_cmd->add_option("--seed", mix.seed, "Random seed");
  mix_cmd->add_option("--out", mix.out, "Output JSON");

  std::string name;
  std::string config;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a seeded experiment");
  exp_cmd->add_option("--name", name, "Experiment name")
      ->check(CLI::IsMember(experiment_names()));
  exp_cmd->add_option("--config", config, "JSON config")->required();
  exp_cmd->add_option("--output", output, "Output prefix (overrides config)");
  exp_cmd->add_flag("--check", check, "Exit 3 if a configured gate fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "coremix: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    if (*sample_cmd) return run_sample(sample, out);
    if (*decompose_cmd) return run_decompose(in, output, out);
    if (*strip_cmd) return run_strip(in, N, seed, trace, output, out);
    if (*certify_cmd) {
      const Multigraph g = read_graph(in);
      return report_certificate(check_AN(g, read_vertex_list(b_path), alpha),
                                check, output, out);
    }
    if (*strong_cmd) {
      Multigraph g = read_graph(in);
      if (giant_only) g = giant_component(g);
      return report_certificate(check_strong_core(g, N, alpha, seed), check,
                                output, out);
    }
    if (*mix_cmd) return run_mix(mix, out);
    if (*exp_cmd) {
      return run_experiment_command(name, config, output, check, out);
    }
  } catch (const InvalidArgument& e) {
    err << "coremix: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "coremix: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}

}  // namespace coremix
