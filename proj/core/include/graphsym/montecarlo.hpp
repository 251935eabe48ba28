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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphsym/spectral.hpp"

namespace graphsym {

/// Grid sweep over G(n, p) samples.
struct ExperimentConfig {
  std::vector<int> n_values;
  std::vector<double> p_values;
  int trials = 500;
  double tolerance = kDefaultSpectralTolerance;  // absolute
  std::uint64_t master_seed = 0;
  /// Worker threads for the trial loop; 0 = hardware concurrency. Results
  /// are identical for any thread count (per-trial sub-seeds, integer
  /// aggregation).
  int threads = 0;
};

struct GridCell {
  int n = 0;
  double p = 0.0;
  int positive = 0;
  int trials = 0;
  double probability() const {
    return trials == 0 ? 0.0 : static_cast<double>(positive) / trials;
  }
};

struct ProbabilityGrid {
  std::string experiment;  // "repeated-eigenvalues" | "orthogonal-eigenvector"
  std::vector<int> n_values;
  std::vector<double> p_values;
  std::vector<GridCell> cells;  // n-major, p-minor

  const GridCell& cell(std::size_t n_index, std::size_t p_index) const {
    return cells[n_index * p_values.size() + p_index];
  }
};

/// Fraction of samples whose adjacency spectrum is not simple at the
/// configured tolerance.
ProbabilityGrid run_repeated_eigenvalue_experiment(const ExperimentConfig& cfg);

/// Fraction of samples with at least one eigenvector orthogonal to 1_n
/// (repeated eigenspaces handled by the projection rule).
ProbabilityGrid run_orthogonal_eigenvector_experiment(const ExperimentConfig& cfg);

enum class GridFormat { Csv, SvgHeatmap };

/// CSV: header n,p,probability,trials; rows in (n-major, p-minor) order;
/// numbers printed as shortest exact decimals. SVG: one rect per cell,
/// axes labeled n and p, color scale 0 -> 1, values embedded as tooltips.
/// Throws std::invalid_argument on an empty grid.
std::string emit_grid(const ProbabilityGrid& grid, GridFormat format);

/// JSON sidecar: config echo, seed, generator name, tolerance semantics.
std::string run_metadata_json(const ExperimentConfig& cfg,
                              const ProbabilityGrid& grid);

}  // namespace graphsym
