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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphsym {

/// Square integer matrices (adjacency, Laplacian, permutation, L_f).
/// Kept over the integers so that commutation checks are exact.
using IntMatrix = Eigen::MatrixXi;

bool exact_equal(const IntMatrix& a, const IntMatrix& b);
bool is_symmetric(const IntMatrix& m);

/// Undirected, unweighted graph without self-loops. Vertices are 0-based
/// internally; optional labels carry external names (states, 1-based
/// figure numbers). Immutable after construction.
class Graph {
 public:
  /// Throws std::invalid_argument on self-loops, out-of-range endpoints,
  /// or non-distinct labels. Duplicate edges collapse (edge set semantics).
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
        std::vector<std::string> labels = {});

  static Graph empty(int vertex_count) { return Graph(vertex_count, {}); }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Canonical edge list: each pair (i, j) with i < j, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int i, int j) const;

  /// N_i, sorted ascending. Throws std::out_of_range for bad indices.
  std::vector<int> neighbors(int i) const;
  int degree(int i) const;

  bool labeled() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of vertex i; 1-based index rendered as text when unlabeled.
  std::string label(int i) const;
  /// Index of a label, or -1.
  int index_of_label(std::string_view label) const;

  bool connected() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> adj_;
};

IntMatrix adjacency_matrix(const Graph& g);

/// L = D - A. Integer, rows sum to zero.
IntMatrix laplacian(const Graph& g);

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

/// Edge-list format: one edge per line as `<label> <label>`, `#` starts a
/// comment, blank lines ignored. Labels are assigned indices in order of
/// first appearance. min_vertices pads unlabeled isolated vertices.
/// Throws ParseError (with line number) on self-loops and malformed lines.
Graph parse_edge_list(std::string_view text, int min_vertices = 0);

/// Inverse of parse_edge_list up to edge-set equality: labels sorted
/// lexicographically within each line and lines sorted lexicographically.
std::string serialize_edge_list(const Graph& g);

/// G(n, p): each of the n(n-1)/2 vertex pairs is included independently
/// with probability p. Deterministic for a fixed seed (SplitMix64 stream).
/// Throws std::invalid_argument unless 0 <= p <= 1 and n >= 1.
Graph erdos_renyi_sample(int n, double p, std::uint64_t seed);

}  // namespace graphsym
