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

#include "graphsym/report.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace graphsym {

std::string format_fixed6(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

namespace {

std::string eigenvalue_list(const Eigen::VectorXd& values) {
  std::string out;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_fixed6(values(i));
  }
  return out;
}

nlohmann::json witnesses_json(const std::vector<OrthogonalityWitness>& witnesses) {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& w : witnesses) {
    array.push_back({{"eigenvalue_index", w.eigenvalue_index},
                     {"abs_inner_product", w.abs_inner_product}});
  }
  return array;
}

std::string matrix_text(const IntMatrix& m) {
  int width = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      width = std::max(width, static_cast<int>(std::to_string(m(i, j)).size()));
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += "  ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const std::string entry = std::to_string(m(i, j));
      out.append(width - entry.size() + (j ? 1 : 0), ' ');
      out += entry;
    }
    out += '\n';
  }
  return out;
}

std::string vertex_set_text(const std::vector<int>& vertices, const Graph& g) {
  std::string out = "{";
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k) out += ",";
    out += g.label(vertices[k]);
  }
  return out + "}";
}

}  // namespace

AnalysisReport analyze_graph(const Graph& g, double tol, std::string source) {
  AnalysisReport report;
  report.source = std::move(source);
  report.vertex_count = g.vertex_count();
  report.edge_count = g.edge_count();
  report.friendliness = classify_friendliness(g, tol);
  report.symmetry = is_symmetric_graph(g);
  return report;
}

std::string render_text(const AnalysisReport& report, const Graph& g) {
  std::string out;
  out += "graph: " + report.source + " | " + std::to_string(report.vertex_count) +
         " vertices, " + std::to_string(report.edge_count) + " edges\n";
  out += "verdict: " + std::string(to_string(report.friendliness.verdict)) + "\n";
  out += "tolerance: " + format_fixed6(report.friendliness.tolerance_used) + "\n";
  out += "eigenvalues: " + eigenvalue_list(report.friendliness.eigenvalues) + "\n";
  out += "min eigengap: " + format_fixed6(report.friendliness.min_eigengap) + "\n";
  out += "witnesses: " +
         std::to_string(report.friendliness.orthogonal_witnesses.size()) + "\n";
  for (const auto& w : report.friendliness.orthogonal_witnesses) {
    out += "  eigenvalue[" + std::to_string(w.eigenvalue_index) + "] = " +
           format_fixed6(report.friendliness.eigenvalues(w.eigenvalue_index)) +
           ", |v.1| = " + format_fixed6(w.abs_inner_product) + "\n";
  }
  out += std::string("symmetric: ") + (report.symmetry.symmetric ? "yes" : "no") +
         "\n";
  if (report.symmetry.witness) {
    out += "automorphism: " +
           cycle_notation(report.symmetry.witness->permutation, g.labels()) +
           "\n";
  }
  return out;
}

std::string render_json(const AnalysisReport& report, const Graph& g) {
  nlohmann::json j;
  j["source"] = report.source;
  j["vertices"] = report.vertex_count;
  j["edges"] = report.edge_count;
  j["verdict"] = to_string(report.friendliness.verdict);
  j["tolerance"] = report.friendliness.tolerance_used;
  j["min_eigengap"] = report.friendliness.min_eigengap;
  std::vector<double> values(report.friendliness.eigenvalues.data(),
                             report.friendliness.eigenvalues.data() +
                                 report.friendliness.eigenvalues.size());
  j["eigenvalues"] = values;
  j["witnesses"] = witnesses_json(report.friendliness.orthogonal_witnesses);
  j["symmetric"] = report.symmetry.symmetric;
  if (report.symmetry.witness) {
    j["automorphism"] =
        cycle_notation(report.symmetry.witness->permutation, g.labels());
  }
  return j.dump(2) + "\n";
}

AutomorphismReport analyze_automorphisms(const Graph& g,
                                         std::optional<int> limit) {
  AutomorphismReport report;
  AutomorphismSearchOptions options;
  options.nontrivial_limit = limit;
  report.search = find_automorphisms(g, options);
  for (const auto& cert : report.search.certificates) {
    if (!cert.permutation.is_identity() && cert.even_cycle_count > 0) {
      const auto decomposition = cycle_decomposition(cert.permutation);
      const bool has_two_cycle =
          std::any_of(decomposition.cycles.begin(), decomposition.cycles.end(),
                      [](const auto& c) { return c.size() == 2; });
      if (has_two_cycle) {
        report.subgraphs = subgraphs_of_symmetry(g, cert);
        break;
      }
    }
  }
  return report;
}

std::string render_text(const AutomorphismReport& report, const Graph& g) {
  std::string out;
  const auto& certs = report.search.certificates;
  int nontrivial = 0;
  for (const auto& cert : certs)
    if (!cert.permutation.is_identity()) ++nontrivial;
  out += "graph: " + report.source + " | " +
         std::to_string(g.vertex_count()) + " vertices, " +
         std::to_string(g.edge_count()) + " edges\n";
  out += "nontrivial automorphisms: " + std::to_string(nontrivial) +
         (report.search.complete ? " (complete group)" : " (search truncated)") +
         "\n";
  for (const auto& cert : certs) {
    if (cert.permutation.is_identity()) continue;
    out += "  " + cycle_notation(cert.permutation, g.labels()) +
           " | even cycles: " + std::to_string(cert.even_cycle_count) +
           (cert.verified ? "" : " | UNVERIFIED") + "\n";
  }
  if (report.subgraphs) {
    out += "subgraphs of symmetry:\n";
    for (const auto& block : report.subgraphs->blocks)
      out += "  block " + vertex_set_text(block, g) + "\n";
    out += "  anchors " + vertex_set_text(report.subgraphs->anchor_set, g) + "\n";
  }
  return out;
}

std::string render_json(const AutomorphismReport& report, const Graph& g) {
  nlohmann::json j;
  j["source"] = report.source;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["complete"] = report.search.complete;
  nlohmann::json automorphisms = nlohmann::json::array();
  for (const auto& cert : report.search.certificates) {
    if (cert.permutation.is_identity()) continue;
    automorphisms.push_back(
        {{"cycles", cycle_notation(cert.permutation, g.labels())},
         {"mapping", cert.permutation.mapping()},
         {"even_cycle_count", cert.even_cycle_count},
         {"verified", cert.verified}});
  }
  j["automorphisms"] = automorphisms;
  if (report.subgraphs) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& block : report.subgraphs->blocks) blocks.push_back(block);
    j["blocks"] = blocks;
    j["anchors"] = report.subgraphs->anchor_set;
  }
  return j.dump(2) + "\n";
}

ControllabilityReport analyze_controllability(const LeaderFollowerSystem& sys,
                                              double tol, bool run_spectral,
                                              bool run_kalman,
                                              std::string source) {
  ControllabilityReport report;
  report.source = std::move(source);
  report.lf = build_lf(sys);
  report.tolerance = tol;
  if (run_spectral) report.spectral = is_controllable_spectral(sys, tol);
  if (run_kalman) report.kalman = is_controllable_kalman(sys);
  if (report.spectral && report.kalman)
    report.methods_agree =
        report.spectral->controllable == report.kalman->controllable;
  report.leader_symmetry = is_leader_symmetric(sys);
  report.pair_condition = mirrored_pair_condition(sys);
  report.followers_connected = sys.followers_connected();
  report.leader_reaches_all = sys.leader_reaches_all();
  return report;
}

std::string render_text(const ControllabilityReport& report,
                        const LeaderFollowerSystem& sys) {
  const Graph& g = sys.follower_graph();
  std::string out;
  out += "system: " + report.source + " | " + std::to_string(g.vertex_count()) +
         " followers, " + std::to_string(g.edge_count()) + " edges\n";
  out += "leader adjacent to:";
  for (int i : sys.leader_neighbors()) out += " " + g.label(i);
  out += "\nL_f:\n" + matrix_text(report.lf);
  out += std::string("followers connected: ") +
         (report.followers_connected ? "yes" : "no") + "\n";
  out += std::string("leader reaches all followers: ") +
         (report.leader_reaches_all ? "yes" : "no") + "\n";
  if (report.spectral) {
    out += std::string("spectral: ") +
           (report.spectral->controllable ? "controllable" : "uncontrollable") +
           " | min eigengap " + format_fixed6(report.spectral->min_eigengap) +
           " | witnesses " + std::to_string(report.spectral->witnesses.size()) +
           (report.spectral->repeated_spectrum ? " | repeated spectrum" : "") +
           "\n";
  }
  if (report.kalman) {
    out += std::string("kalman: ") +
           (report.kalman->controllable ? "controllable" : "uncontrollable") +
           " | rank " + std::to_string(report.kalman->rank) + " of " +
           std::to_string(sys.follower_count()) + "\n";
  }
  if (report.spectral && report.kalman) {
    out += std::string("methods agree: ") +
           (report.methods_agree ? "yes" : "NO (numerical trouble)") + "\n";
  }
  out += std::string("leader symmetric: ") +
         (report.leader_symmetry.leader_symmetric ? "yes" : "no");
  if (report.leader_symmetry.witness) {
    out += " | witness " + cycle_notation(
                               report.leader_symmetry.witness->permutation,
                               g.labels());
  }
  out += "\n";
  if (report.pair_condition.applicable) {
    out += std::string("mirrored-pair condition: ") +
           (report.pair_condition.predicts_uncontrollable ? "predicts uncontrollable"
                                                  : "no prediction") +
           " | " + report.pair_condition.explanation + "\n";
  } else {
    out += "mirrored-pair condition: not applicable | " + report.pair_condition.explanation + "\n";
  }
  return out;
}

std::string render_json(const ControllabilityReport& report,
                        const LeaderFollowerSystem& sys) {
  const Graph& g = sys.follower_graph();
  nlohmann::json j;
  j["source"] = report.source;
  j["followers"] = g.vertex_count();
  j["edges"] = g.edge_count();
  std::vector<std::string> leader_labels;
  for (int i : sys.leader_neighbors()) leader_labels.push_back(g.label(i));
  j["leader_adjacent_to"] = leader_labels;
  std::vector<std::vector<int>> lf(report.lf.rows());
  for (Eigen::Index i = 0; i < report.lf.rows(); ++i)
    for (Eigen::Index k = 0; k < report.lf.cols(); ++k)
      lf[i].push_back(report.lf(i, k));
  j["lf"] = lf;
  j["tolerance"] = report.tolerance;
  j["followers_connected"] = report.followers_connected;
  j["leader_reaches_all"] = report.leader_reaches_all;
  if (report.spectral) {
    j["spectral"] = {{"controllable", report.spectral->controllable},
                     {"min_eigengap", report.spectral->min_eigengap},
                     {"repeated_spectrum", report.spectral->repeated_spectrum},
                     {"witnesses", witnesses_json(report.spectral->witnesses)}};
  }
  if (report.kalman) {
    j["kalman"] = {{"controllable", report.kalman->controllable},
                   {"rank", report.kalman->rank}};
  }
  if (report.spectral && report.kalman)
    j["methods_agree"] = report.methods_agree;
  j["leader_symmetric"] = report.leader_symmetry.leader_symmetric;
  if (report.leader_symmetry.witness) {
    j["leader_symmetry_witness"] = cycle_notation(
        report.leader_symmetry.witness->permutation, g.labels());
  }
  j["mirrored_pair_condition"] = {
      {"applicable", report.pair_condition.applicable},
      {"predicts_uncontrollable", report.pair_condition.predicts_uncontrollable},
      {"explanation", report.pair_condition.explanation}};
  return j.dump(2) + "\n";
}

PermutationReport analyze_permutation(const Permutation& p) {
  PermutationReport report{p, cycle_decomposition(p), 0, 0};
  report.even_cycle_count = count_even_cycles(report.cycles);
  report.minus_one_multiplicity = eigenvalue_multiplicity(
      complex_spectrum(permutation_matrix(p)), {-1.0, 0.0}, 1e-6);
  return report;
}

std::string render_text(const PermutationReport& report) {
  std::string out;
  out += "permutation: " + format_images(report.permutation) + "\n";
  out += "cycles: " + cycle_notation(report.permutation) + "\n";
  out += "even-length cycles: " + std::to_string(report.even_cycle_count) + "\n";
  out += "eigenvalue -1 multiplicity: " +
         std::to_string(report.minus_one_multiplicity) + "\n";
  return out;
}

std::string render_json(const PermutationReport& report) {
  nlohmann::json j;
  j["images"] = format_images(report.permutation);
  j["cycles"] = cycle_notation(report.permutation);
  j["even_cycle_count"] = report.even_cycle_count;
  j["minus_one_multiplicity"] = report.minus_one_multiplicity;
  return j.dump(2) + "\n";
}

}  // namespace graphsym
