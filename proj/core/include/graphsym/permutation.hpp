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
#include <string>
#include <string_view>
#include <vector>

#include "graphsym/graph.hpp"

namespace graphsym {

class SplitMix64;

/// Bijection pi on {0, ..., n-1}, stored as the image array mapping[i] = pi(i).
class Permutation {
 public:
  /// Throws std::invalid_argument unless mapping is a bijection.
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int n);
  /// Images of 1..n as in the written two-line form, e.g. {2,1,4,5,3}.
  static Permutation from_one_based_images(const std::vector<int>& images);
  /// Text format: one line of space-separated images of 1..n.
  static Permutation parse(std::string_view text);
  static Permutation random(int n, SplitMix64& rng);

  int size() const { return static_cast<int>(mapping_.size()); }
  int operator()(int i) const { return mapping_[i]; }
  const std::vector<int>& mapping() const { return mapping_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.mapping_ == b.mapping_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.mapping_ <=> b.mapping_;
  }

 private:
  std::vector<int> mapping_;
};

/// Pi with Pi[i][pi(i)] = 1 and zeros elsewhere; one 1 per row and column.
IntMatrix permutation_matrix(const Permutation& p);

/// Directed cycles of the permutation graph i -> pi(i). Fixed points appear
/// as length-1 cycles. Each cycle starts at its minimum element; cycles are
/// sorted by starting element. The cycles partition {0, ..., n-1}.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Number of cycles of even length >= 2 (fixed points count as odd).
int count_even_cycles(const CycleDecomposition& d);

/// For an even-length cycle of p: the vector alternating +1/-1 along the
/// cycle in traversal order, 0 elsewhere. Satisfies Pi v = -v exactly and
/// v' 1 = 0. Throws std::invalid_argument if the cycle is odd or is not a
/// cycle of p.
Eigen::VectorXd minus_one_eigenvector(const Permutation& p,
                                      const std::vector<int>& cycle);

/// Image graph: edge set {{pi(i), pi(j)} : {i,j} in E}. Its adjacency is
/// Pi' A Pi under the row convention above. Labels are dropped (vertex
/// identities move). Throws std::invalid_argument on size mismatch.
Graph apply_to_graph(const Permutation& p, const Graph& g);

/// One-line external format: space-separated images of 1..n.
std::string format_images(const Permutation& p);

/// Cycle notation, e.g. "(1 6)(2 5)(3 4)"; fixed points omitted; identity
/// renders as "()". Vertices named by `labels` when given, else 1-based.
std::string cycle_notation(const Permutation& p,
                           const std::vector<std::string>& labels = {});

}  // namespace graphsym
