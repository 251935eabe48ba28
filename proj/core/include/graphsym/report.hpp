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

#include <optional>
#include <string>

#include "graphsym/automorphism.hpp"
#include "graphsym/controllability.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/spectral.hpp"

namespace graphsym {

/// Friendliness + symmetry analysis of one graph (the `analyze` driver).
struct AnalysisReport {
  std::string source;
  int vertex_count = 0;
  int edge_count = 0;
  FriendlinessReport friendliness;
  SymmetryCheck symmetry;
};

AnalysisReport analyze_graph(const Graph& g, double tol, std::string source);
std::string render_text(const AnalysisReport& report, const Graph& g);
std::string render_json(const AnalysisReport& report, const Graph& g);

/// Automorphism listing with block structure (the `automorphisms` driver).
struct AutomorphismReport {
  std::string source;
  AutomorphismSearchResult search;
  std::optional<SymmetrySubgraphs> subgraphs;  // from the first 2-cycle witness
};

AutomorphismReport analyze_automorphisms(const Graph& g,
                                         std::optional<int> limit);
std::string render_text(const AutomorphismReport& report, const Graph& g);
std::string render_json(const AutomorphismReport& report, const Graph& g);

/// Leader-follower verdicts (the `controllability` driver).
struct ControllabilityReport {
  std::string source;
  IntMatrix lf;
  double tolerance = kDefaultControllabilityTolerance;
  std::optional<ControllabilityVerdict> spectral;
  std::optional<ControllabilityVerdict> kalman;
  bool methods_agree = true;  // vacuously true unless both ran
  LeaderSymmetryResult leader_symmetry;
  MirroredPairCondition pair_condition;
  bool followers_connected = false;
  bool leader_reaches_all = false;
};

ControllabilityReport analyze_controllability(const LeaderFollowerSystem& sys,
                                              double tol, bool run_spectral,
                                              bool run_kalman,
                                              std::string source);
std::string render_text(const ControllabilityReport& report,
                        const LeaderFollowerSystem& sys);
std::string render_json(const ControllabilityReport& report,
                        const LeaderFollowerSystem& sys);

/// Permutation structure summary (the `permutation` driver).
struct PermutationReport {
  Permutation permutation;
  CycleDecomposition cycles;
  int even_cycle_count = 0;
  int minus_one_multiplicity = 0;  // of the permutation matrix, |l+1| < 1e-6
};

PermutationReport analyze_permutation(const Permutation& p);
std::string render_text(const PermutationReport& report);
std::string render_json(const PermutationReport& report);

/// "-2.246980" style fixed 6-decimal rendering used across reports.
std::string format_fixed6(double value);

}  // namespace graphsym
