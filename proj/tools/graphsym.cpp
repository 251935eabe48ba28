// Copyright 2026 The graphsym Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// graphsym: graph symmetry, spectral friendliness and leader-follower
// controllability analysis.
//
// Exit codes: 0 analysis complete, 1 input error, 2 internal inconsistency
// (controllability methods disagree).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphsym/controllability.hpp"
#include "graphsym/datasets.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/montecarlo.hpp"
#include "graphsym/report.hpp"
#include "graphsym/rng.hpp"
#include "graphsym/spectral.hpp"

namespace {

using namespace graphsym;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

struct GraphSource {
  std::string input_path;  // positional edge-list file
  std::string dataset;     // or a bundled dataset name
  bool usa_me_ri = false;
  int min_vertices = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", input_path, "edge-list file");
    cmd->add_option("--dataset", dataset,
                    "bundled dataset name (fig4, fig5, usa)");
    cmd->add_flag("--me-ri", usa_me_ri, "insert the ME-RI edge (usa dataset)");
    cmd->add_option("--vertices", min_vertices,
                    "declare at least this many vertices");
  }

  std::pair<Graph, std::string> load() const {
    if (!dataset.empty() && !input_path.empty())
      throw std::runtime_error("give either an input file or --dataset");
    if (!dataset.empty()) {
      auto named = dataset_by_name(dataset, usa_me_ri);
      return {std::move(named.graph), std::move(named.name)};
    }
    if (input_path.empty())
      throw std::runtime_error("no input (file path or --dataset)");
    return {parse_edge_list(read_file(input_path), min_vertices), input_path};
  }
};

int run_analyze(const GraphSource& source, double tol, bool json) {
  const auto [graph, name] = source.load();
  const auto report = analyze_graph(graph, tol, name);
  std::cout << (json ? render_json(report, graph) : render_text(report, graph));
  return 0;
}

int run_automorphisms(const GraphSource& source, int limit, bool json) {
  const auto [graph, name] = source.load();
  auto report = analyze_automorphisms(
      graph, limit > 0 ? std::optional<int>(limit) : std::nullopt);
  report.source = name;
  std::cout << (json ? render_json(report, graph) : render_text(report, graph));
  return 0;
}

LeaderFollowerSystem load_system(const std::string& input_path,
                                 const std::string& dataset, bool usa_me_ri,
                                 const std::string& leader_labels) {
  if (!dataset.empty()) {
    auto named = dataset_by_name(dataset, usa_me_ri);
    if (leader_labels.empty())
      throw std::runtime_error("--dataset systems need --leader \"<labels>\"");
    std::vector<int> delta(named.graph.vertex_count(), 0);
    std::istringstream in(leader_labels);
    std::string label;
    while (in >> label) {
      const int index = named.graph.index_of_label(label);
      if (index < 0)
        throw std::runtime_error("unknown leader neighbor '" + label + "'");
      delta[index] = 1;
    }
    return LeaderFollowerSystem(std::move(named.graph), std::move(delta));
  }
  if (input_path.empty())
    throw std::runtime_error("no input (system file or --dataset)");
  return parse_system_spec(read_file(input_path));
}

int run_controllability(const LeaderFollowerSystem& sys, double tol,
                        const std::string& method, bool json,
                        const std::string& simulate_out, double u_const,
                        double x0_const, double dt, int steps) {
  const bool spectral = method == "spectral" || method == "both";
  const bool kalman = method == "kalman" || method == "both";
  const auto report = analyze_controllability(sys, tol, spectral, kalman,
                                              "leader-follower system");
  std::cout << (json ? render_json(report, sys) : render_text(report, sys));

  if (!simulate_out.empty()) {
    double step = dt;
    if (step <= 0.0) {
      const int max_diag = build_lf(sys).diagonal().maxCoeff();
      step = 0.25 / std::max(1, max_diag);
    }
    const std::vector<double> u{u_const};
    const Eigen::VectorXd x0 =
        Eigen::VectorXd::Constant(sys.follower_count(), x0_const);
    write_file(simulate_out, trajectory_csv(simulate(sys, u, x0, step, steps)));
  }
  if (!report.methods_agree) {
    std::cerr << "error: spectral and Kalman verdicts disagree\n";
    return 2;
  }
  return 0;
}

std::vector<double> default_p_grid() {
  std::vector<double> p;
  for (int k = 0; k <= 20; ++k) p.push_back(k / 20.0);
  return p;
}

std::vector<int> range_values(int lo, int hi, int step) {
  std::vector<int> values;
  for (int n = lo; n <= hi; n += step) values.push_back(n);
  return values;
}

int run_montecarlo(ExperimentConfig cfg, const std::string& out_prefix) {
  const auto repeated = run_repeated_eigenvalue_experiment(cfg);
  const auto orthogonal = run_orthogonal_eigenvector_experiment(cfg);
  write_file(out_prefix + "_repeated.csv", emit_grid(repeated, GridFormat::Csv));
  write_file(out_prefix + "_repeated.svg",
             emit_grid(repeated, GridFormat::SvgHeatmap));
  write_file(out_prefix + "_orthogonal.csv",
             emit_grid(orthogonal, GridFormat::Csv));
  write_file(out_prefix + "_orthogonal.svg",
             emit_grid(orthogonal, GridFormat::SvgHeatmap));
  nlohmann::json meta;
  meta["repeated"] = nlohmann::json::parse(run_metadata_json(cfg, repeated));
  meta["orthogonal"] = nlohmann::json::parse(run_metadata_json(cfg, orthogonal));
  write_file(out_prefix + "_metadata.json", meta.dump(2) + "\n");
  std::cout << "wrote " << out_prefix << "_{repeated,orthogonal}.{csv,svg} and "
            << out_prefix << "_metadata.json\n";
  return 0;
}

int run_dataset_list() {
  for (const auto& name : dataset_names()) {
    const auto d = dataset_by_name(name);
    std::cout << name << ": " << d.graph.vertex_count() << " vertices, "
              << d.graph.edge_count() << " edges | " << d.provenance << "\n";
  }
  return 0;
}

int run_dataset_show(const std::string& name, bool usa_me_ri) {
  std::cout << serialize_edge_list(dataset_by_name(name, usa_me_ri).graph);
  return 0;
}

int run_permutation(const std::string& input_path, const std::string& images,
                    bool json) {
  std::string text = images;
  if (text.empty()) {
    if (input_path.empty())
      throw std::runtime_error("no input (file path or --images)");
    text = read_file(input_path);
  }
  const auto report = analyze_permutation(Permutation::parse(text));
  std::cout << (json ? render_json(report) : render_text(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph symmetry, spectral friendliness and consensus "
               "controllability analysis"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "friendliness classification and symmetry check");
  GraphSource analyze_source;
  analyze_source.attach(analyze);
  double analyze_tol = kDefaultSpectralTolerance;
  bool analyze_json = false;
  analyze->add_option("--tol", analyze_tol,
                      "gap/orthogonality tolerance (default 1e-4)");
  analyze->add_flag("--json", analyze_json, "machine-readable output");

  // automorphisms
  auto* autos = app.add_subcommand(
      "automorphisms", "list automorphisms, blocks and anchors");
  GraphSource autos_source;
  autos_source.attach(autos);
  int autos_limit = 0;
  bool autos_json = false;
  autos->add_option("--limit", autos_limit,
                    "stop after this many nontrivial automorphisms "
                    "(0 = exhaustive)");
  autos->add_flag("--json", autos_json, "machine-readable output");

  // controllability
  auto* control = app.add_subcommand(
      "controllability", "leader-follower controllability verdicts");
  std::string control_input, control_dataset, control_leader;
  bool control_me_ri = false;
  double control_tol = kDefaultControllabilityTolerance;
  std::string control_method = "both";
  bool control_json = false;
  std::string simulate_out;
  double sim_u = 1.0, sim_x0 = 0.0, sim_dt = 0.0;
  int sim_steps = 2000;
  control->add_option("input", control_input,
                      "system spec file (edge list + 'leader:' line)");
  control->add_option("--dataset", control_dataset, "bundled follower graph");
  control->add_flag("--me-ri", control_me_ri, "insert the ME-RI edge (usa)");
  control->add_option("--leader", control_leader,
                      "leader neighbors for --dataset, e.g. \"1 6\"");
  control->add_option("--tol", control_tol,
                      "spectral tolerance (default 1e-6)");
  control->add_option("--method", control_method, "spectral|kalman|both")
      ->check(CLI::IsMember({"spectral", "kalman", "both"}));
  control->add_flag("--json", control_json, "machine-readable output");
  control->add_option("--simulate-out", simulate_out,
                      "write an RK4 trajectory CSV to this path");
  control->add_option("--u", sim_u, "constant control input (default 1)");
  control->add_option("--x0", sim_x0, "constant initial state (default 0)");
  control->add_option("--dt", sim_dt, "step size (default: auto stable)");
  control->add_option("--steps", sim_steps, "step count (default 2000)");

  // montecarlo
  auto* monte = app.add_subcommand(
      "montecarlo", "random-graph unfriendliness probability grids");
  std::vector<int> mc_n;
  std::vector<double> mc_p;
  int mc_nmin = 2, mc_nmax = 60, mc_nstep = 2;
  int mc_trials = 500, mc_threads = 0;
  double mc_tol = kDefaultSpectralTolerance;
  std::uint64_t mc_seed = 0;
  bool mc_full = false;
  std::string mc_out = "montecarlo";
  monte->add_option("--n", mc_n, "explicit n values, comma separated")
      ->delimiter(',');
  monte->add_option("--n-min", mc_nmin, "smallest n (default 2)");
  monte->add_option("--n-max", mc_nmax, "largest n (default 60)");
  monte->add_option("--n-step", mc_nstep, "n stride (default 2)");
  monte->add_option("--p", mc_p,
                    "explicit p values, comma separated "
                    "(default 0..1 step 0.05)")
      ->delimiter(',');
  monte->add_option("--trials", mc_trials, "samples per cell (default 500)");
  monte->add_option("--tol", mc_tol, "absolute tolerance (default 1e-4)");
  monte->add_option("--seed", mc_seed, "master seed (default 0)");
  monte->add_option("--threads", mc_threads, "worker threads (0 = hardware)");
  monte->add_flag("--full", mc_full,
                  "full-scale sweep: n 2..100 step 1, 5000 trials");
  monte->add_option("--out", mc_out, "output file prefix");

  // dataset
  auto* dataset = app.add_subcommand("dataset", "bundled datasets");
  auto* dataset_list = dataset->add_subcommand("list", "enumerate datasets");
  auto* dataset_show =
      dataset->add_subcommand("show", "print a dataset as an edge list");
  std::string show_name;
  bool show_me_ri = false;
  dataset_show->add_option("name", show_name, "dataset name")->required();
  dataset_show->add_flag("--me-ri", show_me_ri, "insert the ME-RI edge (usa)");
  dataset->require_subcommand(1);

  // permutation
  auto* perm = app.add_subcommand(
      "permutation", "cycle structure of a permutation");
  std::string perm_input, perm_images;
  bool perm_json = false;
  perm->add_option("input", perm_input,
                   "file with one line of space-separated images of 1..n");
  perm->add_option("--images", perm_images, "inline images, e.g. \"2 1 4 5 3\"");
  perm->add_flag("--json", perm_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);  // prints the message or help text
    return code == 0 ? 0 : 1;          // flag mistakes are input errors
  }

  try {
    if (*analyze) return run_analyze(analyze_source, analyze_tol, analyze_json);
    if (*autos) return run_automorphisms(autos_source, autos_limit, autos_json);
    if (*control) {
      const auto sys = load_system(control_input, control_dataset,
                                   control_me_ri, control_leader);
      return run_controllability(sys, control_tol, control_method,
                                 control_json, simulate_out, sim_u, sim_x0,
                                 sim_dt, sim_steps);
    }
    if (*monte) {
      ExperimentConfig cfg;
      if (mc_full) {
        cfg.n_values = range_values(2, 100, 1);
        cfg.trials = 5000;
      } else {
        cfg.n_values = mc_n.empty() ? range_values(mc_nmin, mc_nmax, mc_nstep)
                                    : mc_n;
        cfg.trials = mc_trials;
      }
      cfg.p_values = mc_p.empty() ? default_p_grid() : mc_p;
      cfg.tolerance = mc_tol;
      cfg.master_seed = mc_seed;
      cfg.threads = mc_threads;
      return run_montecarlo(std::move(cfg), mc_out);
    }
    if (*dataset_list) return run_dataset_list();
    if (*dataset_show) return run_dataset_show(show_name, show_me_ri);
    if (*perm) return run_permutation(perm_input, perm_images, perm_json);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
