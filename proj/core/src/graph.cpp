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

#include "graphsym/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "graphsym/rng.hpp"

namespace graphsym {

bool exact_equal(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

bool is_symmetric(const IntMatrix& m) {
  return m.rows() == m.cols() && exact_equal(m, m.transpose());
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n_)
      throw std::invalid_argument("label count must equal vertex count");
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (static_cast<int>(distinct.size()) != n_)
      throw std::invalid_argument("vertex labels must be distinct");
  }
  std::set<std::pair<int, int>> canonical;
  for (auto [i, j] : edges) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    canonical.emplace(std::min(i, j), std::max(i, j));
  }
  edges_.assign(canonical.begin(), canonical.end());
  adj_.assign(n_, std::vector<bool>(n_, false));
  for (auto [i, j] : edges_) {
    adj_[i][j] = true;
    adj_[j][i] = true;
  }
}

bool Graph::has_edge(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw std::out_of_range("vertex index out of range");
  return adj_[i][j];
}

std::vector<int> Graph::neighbors(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("vertex index out of range");
  std::vector<int> result;
  for (int j = 0; j < n_; ++j)
    if (adj_[i][j]) result.push_back(j);
  return result;
}

int Graph::degree(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("vertex index out of range");
  int d = 0;
  for (int j = 0; j < n_; ++j) d += adj_[i][j] ? 1 : 0;
  return d;
}

std::string Graph::label(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("vertex index out of range");
  if (labels_.empty()) return std::to_string(i + 1);
  return labels_[i];
}

int Graph::index_of_label(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (this->label(i) == label) return i;
  return -1;
}

bool Graph::connected() const {
  std::vector<bool> seen(n_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n_; ++w) {
      if (adj_[v][w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

IntMatrix adjacency_matrix(const Graph& g) {
  const int n = g.vertex_count();
  IntMatrix a = IntMatrix::Zero(n, n);
  for (auto [i, j] : g.edges()) {
    a(i, j) = 1;
    a(j, i) = 1;
  }
  return a;
}

IntMatrix laplacian(const Graph& g) {
  const int n = g.vertex_count();
  IntMatrix l = -adjacency_matrix(g);
  for (int i = 0; i < n; ++i) l(i, i) = g.degree(i);
  return l;
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text, int min_vertices) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.emplace(label, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::vector<std::pair<int, int>> edges;
  int line_number = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError(line_number,
                       "expected two labels, got " + std::to_string(tokens.size()));
    if (tokens[0] == tokens[1])
      throw ParseError(line_number, "self-loop on '" + tokens[0] + "'");
    const int u = intern(tokens[0]);  // sequenced: first-appearance order
    const int v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }

  const int n = std::max(static_cast<int>(labels.size()), min_vertices);
  if (n == 0) throw ParseError(line_number, "no vertices in input");
  if (!labels.empty()) {
    // pad declared-but-unmentioned vertices with fresh numeric labels
    while (static_cast<int>(labels.size()) < n) {
      std::string fresh = std::to_string(labels.size() + 1);
      while (index.count(fresh)) fresh += "'";
      intern(fresh);
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

std::string serialize_edge_list(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.edges().size());
  for (auto [i, j] : g.edges()) {
    std::string a = g.label(i);
    std::string b = g.label(j);
    if (b < a) std::swap(a, b);
    lines.push_back(a + " " + b);
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

Graph erdos_renyi_sample(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_unit() < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace graphsym
