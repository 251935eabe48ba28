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

#include "graphsym/montecarlo.hpp"

#include <doctest.h>

#include "graphsym/graph.hpp"
#include "graphsym/rng.hpp"

using namespace graphsym;

TEST_CASE("extreme probabilities are certain") {
  ExperimentConfig cfg;
  cfg.n_values = {5};
  cfg.p_values = {1.0};
  cfg.trials = 10;
  cfg.master_seed = 1;
  // K5 always repeats eigenvalue -1
  CHECK(run_repeated_eigenvalue_experiment(cfg).cells[0].probability() == 1.0);

  cfg.n_values = {2};
  cfg.p_values = {0.0};
  CHECK(run_repeated_eigenvalue_experiment(cfg).cells[0].probability() == 1.0);

  // K2's eigenvector (1,-1)/sqrt(2) is orthogonal to 1
  cfg.n_values = {2};
  cfg.p_values = {1.0};
  CHECK(run_orthogonal_eigenvector_experiment(cfg).cells[0].probability() == 1.0);

  // monotone sanity at the extremes for a few n
  cfg.trials = 5;
  for (int n : {2, 3, 7}) {
    cfg.n_values = {n};
    cfg.p_values = {0.0};
    CHECK(run_repeated_eigenvalue_experiment(cfg).cells[0].probability() == 1.0);
  }
  for (int n : {3, 4, 9}) {
    cfg.n_values = {n};
    cfg.p_values = {1.0};
    CHECK(run_repeated_eigenvalue_experiment(cfg).cells[0].probability() == 1.0);
  }
}

TEST_CASE("grids are deterministic and thread-count independent") {
  ExperimentConfig cfg;
  cfg.n_values = {6, 10};
  cfg.p_values = {0.2, 0.5};
  cfg.trials = 40;
  cfg.master_seed = 42;
  cfg.threads = 1;
  const auto first = run_orthogonal_eigenvector_experiment(cfg);
  cfg.threads = 4;
  const auto second = run_orthogonal_eigenvector_experiment(cfg);
  CHECK(emit_grid(first, GridFormat::Csv) == emit_grid(second, GridFormat::Csv));

  cfg.master_seed = 43;
  const auto reseeded = run_orthogonal_eigenvector_experiment(cfg);
  CHECK(emit_grid(first, GridFormat::Csv) != emit_grid(reseeded, GridFormat::Csv));
}

TEST_CASE("csv layout") {
  ProbabilityGrid grid;
  grid.experiment = "repeated-eigenvalues";
  grid.n_values = {5};
  grid.p_values = {1.0};
  grid.cells = {GridCell{5, 1.0, 100, 100}};
  CHECK(emit_grid(grid, GridFormat::Csv) == "n,p,probability,trials\n5,1,1,100\n");

  // n-major, p-minor ordering on a 2x2 grid
  ExperimentConfig cfg;
  cfg.n_values = {3, 4};
  cfg.p_values = {0.0, 1.0};
  cfg.trials = 2;
  const auto swept = run_repeated_eigenvalue_experiment(cfg);
  const std::string csv = emit_grid(swept, GridFormat::Csv);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < csv.size()) {
    const auto end = csv.find('\n', start);
    lines.push_back(csv.substr(start, end - start));
    start = end + 1;
  }
  REQUIRE(lines.size() == 5);
  CHECK(lines[1].substr(0, 4) == "3,0,");
  CHECK(lines[2].substr(0, 4) == "3,1,");
  CHECK(lines[3].substr(0, 4) == "4,0,");
  CHECK(lines[4].substr(0, 4) == "4,1,");

  ProbabilityGrid empty;
  CHECK_THROWS_AS(emit_grid(empty, GridFormat::Csv), std::invalid_argument);
}

TEST_CASE("svg heatmap structure") {
  ExperimentConfig cfg;
  cfg.n_values = {4, 6, 8};
  cfg.p_values = {0.0, 0.5, 1.0};
  cfg.trials = 5;
  const auto grid = run_repeated_eigenvalue_experiment(cfg);
  const std::string svg = emit_grid(grid, GridFormat::SvgHeatmap);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  std::size_t rects = 0, titles = 0, pos = 0;
  while ((pos = svg.find("<rect", pos)) != std::string::npos) {
    ++rects;
    pos += 5;
  }
  pos = 0;
  while ((pos = svg.find("<title>", pos)) != std::string::npos) {
    ++titles;
    pos += 7;
  }
  CHECK(rects == 9);   // one per cell
  CHECK(titles == 9);  // tooltip with the cell value
  CHECK(svg.find(">n</text>") != std::string::npos);
  CHECK(svg.find(">p</text>") != std::string::npos);
}

TEST_CASE("metadata sidecar") {
  ExperimentConfig cfg;
  cfg.n_values = {5};
  cfg.p_values = {0.5};
  cfg.trials = 3;
  cfg.master_seed = 99;
  const auto grid = run_repeated_eigenvalue_experiment(cfg);
  const std::string meta = run_metadata_json(cfg, grid);
  CHECK(meta.find("\"SplitMix64\"") != std::string::npos);
  CHECK(meta.find("\"repeated-eigenvalues\"") != std::string::npos);
  CHECK(meta.find("\"99\"") != std::string::npos);
  CHECK(meta.find("absolute") != std::string::npos);
}

TEST_CASE("positive orthogonality trials can be re-verified") {
  // re-run the per-trial sampling rule and check the recorded witness on
  // simple-spectrum positives
  ExperimentConfig cfg;
  cfg.n_values = {3, 5};
  cfg.p_values = {0.5};
  cfg.trials = 60;
  cfg.master_seed = 7;
  const auto grid = run_orthogonal_eigenvector_experiment(cfg);
  int reverified = 0;
  for (const auto& cell : grid.cells) {
    for (int trial = 0; trial < cell.trials; ++trial) {
      const auto seed = trial_subseed(cfg.master_seed, cell.n, cell.p, trial);
      const Graph g = erdos_renyi_sample(cell.n, cell.p, seed);
      const auto s = eigendecompose(adjacency_matrix(g));
      const auto witnesses = ones_orthogonal_eigenvectors(s, cfg.tolerance);
      if (witnesses.empty() || !has_simple_spectrum(s, cfg.tolerance).simple)
        continue;
      for (const auto& w : witnesses) {
        const Eigen::MatrixXd a = adjacency_matrix(g).cast<double>();
        const double lambda = s.eigenvalues(w.eigenvalue_index);
        CHECK((a * w.vector - lambda * w.vector).norm() <= 1e-8);
        CHECK(w.abs_inner_product <= cfg.tolerance);
      }
      ++reverified;
    }
  }
  CHECK(reverified > 0);  // P3-like samples occur at n=3, p=0.5
}
