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

#include <Eigen/Eigenvalues>
#include <atomic>
#include <charconv>
#include <cmath>
#include <thread>

#include <nlohmann/json.hpp>

#include "graphsym/graph.hpp"
#include "graphsym/rng.hpp"

namespace graphsym {

namespace {

// positive-trial predicates --------------------------------------------------

bool repeated_eigenvalues_trial(const Graph& g, double tol) {
  const Eigen::MatrixXd a = adjacency_matrix(g).cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  for (Eigen::Index i = 0; i + 1 < values.size(); ++i)
    if (values(i + 1) - values(i) <= tol) return true;
  return false;
}

bool orthogonal_eigenvector_trial(const Graph& g, double tol) {
  const SpectralDecomposition s = eigendecompose(adjacency_matrix(g));
  return !ones_orthogonal_eigenvectors(s, tol).empty();
}

template <typename Predicate>
ProbabilityGrid run_experiment(const ExperimentConfig& cfg,
                               std::string experiment, Predicate positive) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (double p : cfg.p_values)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("p values must lie in [0, 1]");

  ProbabilityGrid grid;
  grid.experiment = std::move(experiment);
  grid.n_values = cfg.n_values;
  grid.p_values = cfg.p_values;
  grid.cells.reserve(cfg.n_values.size() * cfg.p_values.size());

  int thread_count = cfg.threads > 0
                         ? cfg.threads
                         : static_cast<int>(std::thread::hardware_concurrency());
  if (thread_count < 1) thread_count = 1;

  for (int n : cfg.n_values) {
    for (double p : cfg.p_values) {
      std::atomic<int> positives{0};
      const auto worker = [&](int first, int last) {
        int local = 0;
        for (int trial = first; trial < last; ++trial) {
          const auto seed = trial_subseed(cfg.master_seed, n, p, trial);
          const Graph g = erdos_renyi_sample(n, p, seed);
          if (positive(g, cfg.tolerance)) ++local;
        }
        positives += local;  // integer aggregation: order-insensitive
      };
      if (thread_count == 1 || cfg.trials < 2 * thread_count) {
        worker(0, cfg.trials);
      } else {
        std::vector<std::thread> pool;
        const int chunk = (cfg.trials + thread_count - 1) / thread_count;
        for (int t = 0; t < thread_count; ++t) {
          const int first = t * chunk;
          const int last = std::min(cfg.trials, first + chunk);
          if (first < last) pool.emplace_back(worker, first, last);
        }
        for (auto& th : pool) th.join();
      }
      grid.cells.push_back(GridCell{n, p, positives.load(), cfg.trials});
    }
  }
  return grid;
}

std::string shortest_decimal(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

std::string grid_csv(const ProbabilityGrid& grid) {
  std::string out = "n,p,probability,trials\n";
  for (const auto& cell : grid.cells) {
    out += std::to_string(cell.n);
    out += ',';
    out += shortest_decimal(cell.p);
    out += ',';
    out += shortest_decimal(cell.probability());
    out += ',';
    out += std::to_string(cell.trials);
    out += '\n';
  }
  return out;
}

// white -> dark red
std::string heat_color(double v) {
  const auto channel = [v](int from, int to) {
    return std::to_string(
        static_cast<int>(std::lround(from + v * (to - from))));
  };
  return "rgb(" + channel(255, 178) + "," + channel(255, 24) + "," +
         channel(255, 43) + ")";
}

std::string grid_svg(const ProbabilityGrid& grid) {
  constexpr int kCell = 14;
  constexpr int kMarginLeft = 56;
  constexpr int kMarginTop = 28;
  constexpr int kMarginBottom = 44;
  constexpr int kMarginRight = 16;
  const int cols = static_cast<int>(grid.n_values.size());
  const int rows = static_cast<int>(grid.p_values.size());
  const int width = kMarginLeft + cols * kCell + kMarginRight;
  const int height = kMarginTop + rows * kCell + kMarginBottom;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  svg += "<text x=\"" + std::to_string(width / 2) +
         "\" y=\"14\" text-anchor=\"middle\" font-size=\"12\">" +
         grid.experiment + " probability</text>\n";

  for (int col = 0; col < cols; ++col) {
    for (int row = 0; row < rows; ++row) {
      // p ascends upward: last p row sits at the top
      const auto& cell = grid.cell(col, row);
      const int x = kMarginLeft + col * kCell;
      const int y = kMarginTop + (rows - 1 - row) * kCell;
      svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + std::to_string(kCell) + "\" height=\"" +
             std::to_string(kCell) + "\" fill=\"" +
             heat_color(cell.probability()) + "\">";
      svg += "<title>n=" + std::to_string(cell.n) +
             ", p=" + shortest_decimal(cell.p) + ": " +
             shortest_decimal(cell.probability()) + " (" +
             std::to_string(cell.positive) + "/" + std::to_string(cell.trials) +
             ")</title>";
      svg += "</rect>\n";
    }
  }

  // axis tick labels
  for (int col = 0; col < cols; ++col) {
    const int x = kMarginLeft + col * kCell + kCell / 2;
    const int y = kMarginTop + rows * kCell + 12;
    svg += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" text-anchor=\"middle\">" + std::to_string(grid.n_values[col]) +
           "</text>\n";
  }
  for (int row = 0; row < rows; ++row) {
    const int x = kMarginLeft - 6;
    const int y = kMarginTop + (rows - 1 - row) * kCell + kCell / 2 + 4;
    svg += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" text-anchor=\"end\">" + shortest_decimal(grid.p_values[row]) +
           "</text>\n";
  }
  svg += "<text x=\"" + std::to_string(kMarginLeft + cols * kCell / 2) +
         "\" y=\"" + std::to_string(height - 8) +
         "\" text-anchor=\"middle\" font-size=\"12\">n</text>\n";
  svg += "<text x=\"14\" y=\"" + std::to_string(kMarginTop + rows * kCell / 2) +
         "\" text-anchor=\"middle\" font-size=\"12\">p</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace

ProbabilityGrid run_repeated_eigenvalue_experiment(const ExperimentConfig& cfg) {
  return run_experiment(cfg, "repeated-eigenvalues", repeated_eigenvalues_trial);
}

ProbabilityGrid run_orthogonal_eigenvector_experiment(const ExperimentConfig& cfg) {
  return run_experiment(cfg, "orthogonal-eigenvector",
                        orthogonal_eigenvector_trial);
}

std::string emit_grid(const ProbabilityGrid& grid, GridFormat format) {
  if (grid.cells.empty()) throw std::invalid_argument("empty grid");
  return format == GridFormat::Csv ? grid_csv(grid) : grid_svg(grid);
}

std::string run_metadata_json(const ExperimentConfig& cfg,
                              const ProbabilityGrid& grid) {
  nlohmann::json meta;
  meta["experiment"] = grid.experiment;
  meta["n_values"] = cfg.n_values;
  meta["p_values"] = cfg.p_values;
  meta["trials"] = cfg.trials;
  meta["tolerance"] = cfg.tolerance;
  meta["tolerance_semantics"] =
      "absolute, applied to eigenvalue gaps and to |v' 1| of unit-norm "
      "eigenvectors";
  meta["master_seed"] = std::to_string(cfg.master_seed);
  meta["generator"] = "SplitMix64";
  meta["subseed_rule"] =
      "mix64 chain over (master_seed, n, bits(p), trial_index)";
  meta["repeated_eigenvalue_handling"] =
      "a repeated eigenspace counts as orthogonal when the projection of "
      "1_n onto it leaves k-1 >= 1 independent orthogonal directions "
      "(it always does for k >= 2)";
  meta["p_grid_note"] = "default grid uses 0.05 steps";
  return meta.dump(2) + "\n";
}

}  // namespace graphsym
