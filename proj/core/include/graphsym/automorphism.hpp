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
#include <optional>
#include <vector>

#include "graphsym/graph.hpp"
#include "graphsym/permutation.hpp"

namespace graphsym {

/// true iff Pi A = A Pi in exact integer arithmetic; equivalently the image
/// graph under p has the identical edge set.
bool is_automorphism(const Graph& g, const Permutation& p);

/// Frobenius norm of Pi A - B Pi; zero iff p is an isomorphism between the
/// graphs of a and b. Throws std::invalid_argument on dimension mismatch.
double distortion(const IntMatrix& a, const IntMatrix& b, const Permutation& p);

struct AutomorphismCertificate {
  Permutation permutation;
  bool verified = false;  // Pi A = A Pi re-checked exactly
  int even_cycle_count = 0;
};

AutomorphismCertificate make_certificate(const Graph& g, const Permutation& p);

struct AutomorphismSearchOptions {
  /// Stop after this many nontrivial automorphisms (unset: exhaustive).
  std::optional<int> nontrivial_limit;
  /// Safety cap for exhaustive enumeration of huge groups; exceeding it
  /// clears `complete`.
  std::uint64_t max_certificates = 100'000;
  /// Optional extra vertex coloring the automorphisms must preserve
  /// (used for leader-symmetry: color = leader adjacency indicator).
  const std::vector<int>* vertex_colors = nullptr;
};

struct AutomorphismSearchResult {
  /// Sorted lexicographically by mapping; the identity comes first.
  std::vector<AutomorphismCertificate> certificates;
  /// true iff the certificates form the complete (color-respecting) group.
  bool complete = true;
};

/// Complete backtracking search over color-refinement classes. Exact for
/// any n; intended desk scale is n <= 100.
AutomorphismSearchResult find_automorphisms(
    const Graph& g, const AutomorphismSearchOptions& options = {});

/// Oracle: enumerate all n! permutations. Hard-capped at n <= 10.
std::vector<Permutation> brute_force_automorphisms(const Graph& g);

struct SymmetryCheck {
  bool symmetric = false;
  std::optional<AutomorphismCertificate> witness;
};

/// Symmetric = nontrivial automorphism group.
SymmetryCheck is_symmetric_graph(const Graph& g);

/// Nontrivial automorphism whose cycle decomposition contains a 2-cycle.
/// Searches involutions first; falls back to exhaustive enumeration for
/// n <= 10. Empty when the graph is asymmetric (or, beyond the reach of
/// the theory, when no group element has a 2-cycle).
std::optional<AutomorphismCertificate> find_two_cycle_automorphism(const Graph& g);

/// Disjoint vertex blocks with identical induced structure, swapped by the
/// 2-cycles of an automorphism; anchors are its fixed points.
struct SymmetrySubgraphs {
  std::vector<std::vector<int>> blocks;              // each sorted; list sorted by min
  std::vector<std::pair<int, int>> correspondence;   // 2-cycle pairs (i, pi(i)), i < pi(i)
  std::vector<int> anchor_set;                       // fixed points, sorted
};

/// Blocks are connected components of the induced subgraph on 2-cycle
/// vertices with the pair edges (i, pi(i)) removed (inter-edges between
/// corresponding pairs do not merge blocks). Throws std::invalid_argument
/// if cert has no 2-cycle or fails verification against g.
SymmetrySubgraphs subgraphs_of_symmetry(const Graph& g,
                                        const AutomorphismCertificate& cert);

/// max over Auto(G) of count_even_cycles, by exhaustive enumeration.
/// nullopt when enumeration is infeasible (group larger than the cap) --
/// never a wrong number.
std::optional<int> max_minus_one_multiplicity(const Graph& g);

}  // namespace graphsym
