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

#include <Eigen/Core>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphsym/automorphism.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/spectral.hpp"

namespace graphsym {

/// Default tolerance for the spectral controllability test. Tighter than the
/// graph-analysis default because L_f entries are small integers.
inline constexpr double kDefaultControllabilityTolerance = 1e-6;

/// Follower graph plus the leader adjacency indicator delta (delta[i] = 1
/// iff follower i is adjacent to the leader).
class LeaderFollowerSystem {
 public:
  /// Throws std::invalid_argument if delta has no 1, wrong length, or
  /// entries outside {0,1}.
  LeaderFollowerSystem(Graph follower_graph, std::vector<int> leader_adjacency);

  const Graph& follower_graph() const { return followers_; }
  const std::vector<int>& leader_adjacency() const { return delta_; }
  int follower_count() const { return followers_.vertex_count(); }

  /// Followers adjacent to the leader, as indices.
  std::vector<int> leader_neighbors() const;

  bool followers_connected() const { return followers_.connected(); }
  /// true iff every follower component contains a leader-adjacent vertex,
  /// i.e. the overall (leader + followers) graph is connected.
  bool leader_reaches_all() const;

 private:
  Graph followers_;
  std::vector<int> delta_;
};

/// System spec file: edge-list lines for the follower graph plus a
/// `leader: <label> ...` line naming the followers adjacent to the leader.
/// Labels on the leader line may introduce isolated followers.
LeaderFollowerSystem parse_system_spec(std::string_view text);
std::string serialize_system_spec(const LeaderFollowerSystem& sys);

/// L_f = L(G_f) + diag(delta). Symmetric integer matrix; row i sums to
/// delta[i].
IntMatrix build_lf(const LeaderFollowerSystem& sys);

enum class ControllabilityMethod { Spectral, Kalman };

struct ControllabilityVerdict {
  bool controllable = false;
  ControllabilityMethod method = ControllabilityMethod::Spectral;
  /// Spectral method: eigenvectors of L_f orthogonal to 1 within tol.
  std::vector<OrthogonalityWitness> witnesses;
  bool repeated_spectrum = false;
  double min_eigengap = 0.0;
  /// Kalman method: rank of [b, L_f b, ..., L_f^{n_f - 1} b].
  int rank = -1;
};

/// Controllable iff L_f has simple spectrum (gap > tol) and no unit
/// eigenvector v with |v' 1| <= tol.
ControllabilityVerdict is_controllable_spectral(
    const LeaderFollowerSystem& sys,
    double tol = kDefaultControllabilityTolerance);

/// Independent oracle: rank of the controllability matrix of (L_f, delta)
/// via column-pivoted QR, threshold 1e-8 relative to the largest column.
/// Throws std::invalid_argument when n_f > 30 (conditioning guard).
ControllabilityVerdict is_controllable_kalman(const LeaderFollowerSystem& sys);

struct LeaderSymmetryResult {
  bool leader_symmetric = false;
  /// Nontrivial follower automorphism with delta(pi(i)) = delta(i); commutes
  /// with L_f exactly.
  std::optional<AutomorphismCertificate> witness;
};

LeaderSymmetryResult is_leader_symmetric(const LeaderFollowerSystem& sys);

struct MirroredPairCondition {
  /// false when the follower graph is asymmetric (check not applicable).
  bool applicable = false;
  bool predicts_uncontrollable = false;
  /// 2-cycle pairs {i, pi(i)} with the leader adjacent to both.
  std::vector<std::pair<int, int>> leader_pairs;
  std::string explanation;
};

/// Sufficient uncontrollability condition: some 2-cycle automorphism of the
/// follower graph leaves delta invariant and the leader touches a moved
/// vertex.
MirroredPairCondition mirrored_pair_condition(const LeaderFollowerSystem& sys);

struct Trajectory {
  std::vector<double> times;       // steps + 1 entries, t_k = k dt
  Eigen::MatrixXd states;          // (steps + 1) x n_f, row k = x(t_k)
};

/// Fixed-step RK4 integration of x' = -L_f x + delta u(t) with u piecewise
/// constant per step (u[k] during step k; the last sample is held).
/// Throws std::invalid_argument unless 0 < dt < 1/(2 max diag L_f).
Trajectory simulate(const LeaderFollowerSystem& sys, std::span<const double> u,
                    const Eigen::VectorXd& x0, double dt, int steps);

/// Leaderless agreement dynamics x' = -L x (the delta-free mode; the state
/// mean is conserved).
Trajectory simulate_agreement(const Graph& g, const Eigen::VectorXd& x0,
                              double dt, int steps);

/// CSV: header "t,x1,...,xn", one row per step.
std::string trajectory_csv(const Trajectory& trajectory);

}  // namespace graphsym
