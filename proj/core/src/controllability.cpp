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

#include "graphsym/controllability.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace graphsym {

LeaderFollowerSystem::LeaderFollowerSystem(Graph follower_graph,
                                           std::vector<int> leader_adjacency)
    : followers_(std::move(follower_graph)), delta_(std::move(leader_adjacency)) {
  if (static_cast<int>(delta_.size()) != followers_.vertex_count())
    throw std::invalid_argument("leader adjacency length must equal follower count");
  bool any = false;
  for (int d : delta_) {
    if (d != 0 && d != 1)
      throw std::invalid_argument("leader adjacency entries must be 0 or 1");
    any = any || d == 1;
  }
  if (!any)
    throw std::invalid_argument("leader connected to nothing (delta has no 1)");
}

std::vector<int> LeaderFollowerSystem::leader_neighbors() const {
  std::vector<int> result;
  for (int i = 0; i < follower_count(); ++i)
    if (delta_[i]) result.push_back(i);
  return result;
}

bool LeaderFollowerSystem::leader_reaches_all() const {
  const int n = follower_count();
  std::vector<bool> seen(n, false);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    if (delta_[i]) {
      seen[i] = true;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : followers_.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

LeaderFollowerSystem parse_system_spec(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  const auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.emplace(label, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::vector<std::pair<int, int>> edges;
  std::vector<int> leader_indices;
  bool saw_leader_line = false;
  int line_number = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "leader:" || first == "leader") {
      if (saw_leader_line)
        throw ParseError(line_number, "duplicate 'leader:' line");
      saw_leader_line = true;
      std::string label;
      while (tokens >> label) {
        if (label == ":") continue;
        leader_indices.push_back(intern(label));
      }
    } else {
      std::string second, extra;
      if (!(tokens >> second) || (tokens >> extra))
        throw ParseError(line_number, "expected two labels per edge line");
      if (first == second)
        throw ParseError(line_number, "self-loop on '" + first + "'");
      const int u = intern(first);  // sequenced: first-appearance order
      const int v = intern(second);
      edges.emplace_back(u, v);
    }
  }
  if (!saw_leader_line) throw ParseError(line_number, "missing 'leader:' line");
  if (leader_indices.empty())
    throw ParseError(line_number, "leader connected to nothing");

  const int n = static_cast<int>(labels.size());
  Graph followers(n, std::move(edges), std::move(labels));
  std::vector<int> delta(followers.vertex_count(), 0);
  for (int i : leader_indices) delta[i] = 1;
  return LeaderFollowerSystem(std::move(followers), std::move(delta));
}

std::string serialize_system_spec(const LeaderFollowerSystem& sys) {
  std::string out = serialize_edge_list(sys.follower_graph());
  out += "leader:";
  for (int i : sys.leader_neighbors()) out += " " + sys.follower_graph().label(i);
  out += '\n';
  return out;
}

IntMatrix build_lf(const LeaderFollowerSystem& sys) {
  IntMatrix lf = laplacian(sys.follower_graph());
  const auto& delta = sys.leader_adjacency();
  for (int i = 0; i < sys.follower_count(); ++i) lf(i, i) += delta[i];
  return lf;
}

ControllabilityVerdict is_controllable_spectral(const LeaderFollowerSystem& sys,
                                                double tol) {
  const SpectralDecomposition s = eigendecompose(build_lf(sys));
  ControllabilityVerdict verdict;
  verdict.method = ControllabilityMethod::Spectral;
  const auto simple = has_simple_spectrum(s, tol);
  verdict.min_eigengap = simple.min_gap;
  verdict.repeated_spectrum = !simple.simple;
  verdict.witnesses = ones_orthogonal_eigenvectors(s, tol);
  verdict.controllable = simple.simple && verdict.witnesses.empty();
  return verdict;
}

ControllabilityVerdict is_controllable_kalman(const LeaderFollowerSystem& sys) {
  const int n = sys.follower_count();
  if (n > 30)
    throw std::invalid_argument(
        "Kalman rank test limited to n_f <= 30 (conditioning guard)");
  const Eigen::MatrixXd lf = build_lf(sys).cast<double>();
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) b(i) = sys.leader_adjacency()[i];

  // Rank of [b, L_f b, ..., L_f^{n-1} b] via its QR factorization, built
  // incrementally: orthogonalize each new Krylov vector against the basis
  // so far and stop when the residual drops to the 1e-8 relative noise
  // floor. A one-shot factorization of the raw power matrix is useless
  // here: its column norms span many orders of magnitude, so genuine rank
  // directions fall below any fixed relative pivot threshold.
  const double scale = std::max(1.0, lf.cwiseAbs().colwise().sum().maxCoeff());
  Eigen::MatrixXd basis(n, n);
  int rank = 0;
  Eigen::VectorXd residual = b;
  while (rank < n) {
    const double norm = residual.norm();
    if (norm <= 1e-8 * scale) break;
    basis.col(rank) = residual / norm;
    residual = lf * basis.col(rank);
    for (int pass = 0; pass < 2; ++pass)  // Gram-Schmidt, reorthogonalized
      for (int k = 0; k <= rank; ++k)
        residual -= basis.col(k).dot(residual) * basis.col(k);
    ++rank;
  }

  ControllabilityVerdict verdict;
  verdict.method = ControllabilityMethod::Kalman;
  verdict.rank = rank;
  verdict.controllable = rank == n;
  return verdict;
}

LeaderSymmetryResult is_leader_symmetric(const LeaderFollowerSystem& sys) {
  AutomorphismSearchOptions options;
  options.nontrivial_limit = 1;
  options.vertex_colors = &sys.leader_adjacency();
  const auto result = find_automorphisms(sys.follower_graph(), options);
  for (const auto& cert : result.certificates) {
    if (cert.permutation.is_identity()) continue;
    // delta invariance is enforced by the search colors; double-check the
    // commutation with L_f exactly
    const IntMatrix lf = build_lf(sys);
    const IntMatrix pi = permutation_matrix(cert.permutation);
    if (exact_equal(pi * lf, lf * pi)) return {true, cert};
  }
  return {false, std::nullopt};
}

MirroredPairCondition mirrored_pair_condition(const LeaderFollowerSystem& sys) {
  MirroredPairCondition result;
  const auto symmetry = is_symmetric_graph(sys.follower_graph());
  if (!symmetry.symmetric) {
    result.applicable = false;
    result.explanation =
        "follower graph is asymmetric; the mirrored-pair condition does not apply";
    return result;
  }
  result.applicable = true;

  // Enumerate delta-preserving automorphisms and look for one with a
  // 2-cycle whose moved vertices include a leader neighbor.
  AutomorphismSearchOptions options;
  options.vertex_colors = &sys.leader_adjacency();
  const auto search = find_automorphisms(sys.follower_graph(), options);
  const auto& delta = sys.leader_adjacency();
  for (const auto& cert : search.certificates) {
    if (cert.permutation.is_identity() || cert.even_cycle_count == 0) continue;
    const auto decomposition = cycle_decomposition(cert.permutation);
    bool has_two_cycle = false;
    bool leader_touches_moved = false;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& cycle : decomposition.cycles) {
      if (cycle.size() == 1) continue;
      for (int v : cycle) leader_touches_moved = leader_touches_moved || delta[v] == 1;
      if (cycle.size() == 2) {
        has_two_cycle = true;
        const int a = std::min(cycle[0], cycle[1]);
        const int b = std::max(cycle[0], cycle[1]);
        if (delta[a] == 1 && delta[b] == 1) pairs.emplace_back(a, b);
      }
    }
    if (has_two_cycle && leader_touches_moved) {
      result.predicts_uncontrollable = true;
      std::sort(pairs.begin(), pairs.end());
      result.leader_pairs = std::move(pairs);
      std::string text = "leader adjacent to corresponding pair(s)";
      const auto& labels = sys.follower_graph().labels();
      for (auto [a, b] : result.leader_pairs) {
        text += " {" + sys.follower_graph().label(a) + "," +
                sys.follower_graph().label(b) + "}";
      }
      text += " swapped by automorphism " +
              cycle_notation(cert.permutation, labels);
      result.explanation = std::move(text);
      return result;
    }
  }
  result.predicts_uncontrollable = false;
  result.explanation =
      "no delta-invariant 2-cycle automorphism touches a leader neighbor";
  return result;
}

namespace {

Trajectory integrate_rk4(const Eigen::MatrixXd& system_matrix,
                         const Eigen::VectorXd& input_vector,
                         std::span<const double> u, const Eigen::VectorXd& x0,
                         double dt, int steps) {
  const auto n = x0.size();
  Trajectory trajectory;
  trajectory.times.resize(steps + 1);
  trajectory.states.resize(steps + 1, n);
  Eigen::VectorXd x = x0;
  trajectory.times[0] = 0.0;
  trajectory.states.row(0) = x.transpose();
  const auto rhs = [&](const Eigen::VectorXd& state, double control) {
    return Eigen::VectorXd(-system_matrix * state + input_vector * control);
  };
  for (int k = 0; k < steps; ++k) {
    const double control =
        u.empty() ? 0.0 : u[std::min<std::size_t>(k, u.size() - 1)];
    const Eigen::VectorXd k1 = rhs(x, control);
    const Eigen::VectorXd k2 = rhs(x + 0.5 * dt * k1, control);
    const Eigen::VectorXd k3 = rhs(x + 0.5 * dt * k2, control);
    const Eigen::VectorXd k4 = rhs(x + dt * k3, control);
    x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    trajectory.times[k + 1] = (k + 1) * dt;
    trajectory.states.row(k + 1) = x.transpose();
  }
  return trajectory;
}

void check_step(double dt, int steps, int max_diagonal, Eigen::Index n,
                Eigen::Index x0_size) {
  if (x0_size != n) throw std::invalid_argument("x0 length mismatch");
  if (steps < 0) throw std::invalid_argument("steps must be non-negative");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (max_diagonal > 0 && !(dt < 1.0 / (2.0 * max_diagonal)))
    throw std::invalid_argument("dt too large for stable explicit integration");
}

}  // namespace

Trajectory simulate(const LeaderFollowerSystem& sys, std::span<const double> u,
                    const Eigen::VectorXd& x0, double dt, int steps) {
  const IntMatrix lf = build_lf(sys);
  check_step(dt, steps, lf.diagonal().maxCoeff(), lf.rows(), x0.size());
  Eigen::VectorXd delta(sys.follower_count());
  for (int i = 0; i < sys.follower_count(); ++i)
    delta(i) = sys.leader_adjacency()[i];
  return integrate_rk4(lf.cast<double>(), delta, u, x0, dt, steps);
}

Trajectory simulate_agreement(const Graph& g, const Eigen::VectorXd& x0,
                              double dt, int steps) {
  const IntMatrix l = laplacian(g);
  check_step(dt, steps, l.diagonal().maxCoeff(), l.rows(), x0.size());
  return integrate_rk4(l.cast<double>(), Eigen::VectorXd::Zero(l.rows()), {},
                       x0, dt, steps);
}

std::string trajectory_csv(const Trajectory& trajectory) {
  std::string out = "t";
  for (Eigen::Index i = 0; i < trajectory.states.cols(); ++i)
    out += ",x" + std::to_string(i + 1);
  out += '\n';
  char buffer[64];
  const auto append_number = [&](double value) {
    const auto [end, ec] =
        std::to_chars(buffer, buffer + sizeof buffer, value);
    out.append(buffer, end);
  };
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    append_number(trajectory.times[k]);
    for (Eigen::Index i = 0; i < trajectory.states.cols(); ++i) {
      out += ',';
      append_number(trajectory.states(static_cast<Eigen::Index>(k), i));
    }
    out += '\n';
  }
  return out;
}

}  // namespace graphsym
