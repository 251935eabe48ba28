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

#include "graphsym/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "graphsym/rng.hpp"

namespace graphsym {

Permutation::Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
  const int n = static_cast<int>(mapping_.size());
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> hit(n, false);
  for (int image : mapping_) {
    if (image < 0 || image >= n || hit[image])
      throw std::invalid_argument("mapping is not a bijection on {0..n-1}");
    hit[image] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> mapping(n);
  std::iota(mapping.begin(), mapping.end(), 0);
  return Permutation(std::move(mapping));
}

Permutation Permutation::from_one_based_images(const std::vector<int>& images) {
  std::vector<int> mapping(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) mapping[i] = images[i] - 1;
  return Permutation(std::move(mapping));
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> images;
  int value = 0;
  while (in >> value) images.push_back(value);
  std::string rest;
  if (!in.eof() && in.fail()) {
    in.clear();
    in >> rest;
    throw std::invalid_argument("permutation: expected integer, got '" + rest + "'");
  }
  if (images.empty()) throw std::invalid_argument("permutation: empty input");
  return from_one_based_images(images);
}

Permutation Permutation::random(int n, SplitMix64& rng) {
  std::vector<int> mapping(n);
  std::iota(mapping.begin(), mapping.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(mapping[i], mapping[j]);
  }
  return Permutation(std::move(mapping));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (mapping_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(mapping_.size());
  for (int i = 0; i < size(); ++i) inv[mapping_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size())
    throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> result(mapping_.size());
  for (int i = 0; i < size(); ++i) result[i] = mapping_[other.mapping_[i]];
  return Permutation(std::move(result));
}

IntMatrix permutation_matrix(const Permutation& p) {
  const int n = p.size();
  IntMatrix pi = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) pi(i, p(i)) = 1;
  return pi;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const int n = p.size();
  CycleDecomposition d;
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = p(v)) {
      seen[v] = true;
      cycle.push_back(v);
    }
    d.cycles.push_back(std::move(cycle));
  }
  // scanning from 0 upward already yields min-first cycles in sorted order
  return d;
}

int count_even_cycles(const CycleDecomposition& d) {
  int count = 0;
  for (const auto& cycle : d.cycles)
    if (cycle.size() >= 2 && cycle.size() % 2 == 0) ++count;
  return count;
}

Eigen::VectorXd minus_one_eigenvector(const Permutation& p,
                                      const std::vector<int>& cycle) {
  if (cycle.size() < 2 || cycle.size() % 2 != 0)
    throw std::invalid_argument("cycle must have even length >= 2");
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const int v = cycle[k];
    if (v < 0 || v >= p.size() || p(v) != cycle[(k + 1) % cycle.size()])
      throw std::invalid_argument("not a cycle of this permutation");
  }
  Eigen::VectorXd v = Eigen::VectorXd::Zero(p.size());
  for (std::size_t k = 0; k < cycle.size(); ++k)
    v(cycle[k]) = (k % 2 == 0) ? 1.0 : -1.0;
  return v;
}

Graph apply_to_graph(const Permutation& p, const Graph& g) {
  if (p.size() != g.vertex_count())
    throw std::invalid_argument("permutation size does not match graph");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (auto [i, j] : g.edges()) edges.emplace_back(p(i), p(j));
  return Graph(g.vertex_count(), std::move(edges));
}

std::string format_images(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(i) + 1);
  }
  return out;
}

std::string cycle_notation(const Permutation& p,
                           const std::vector<std::string>& labels) {
  const auto name = [&](int v) {
    return labels.empty() ? std::to_string(v + 1) : labels[v];
  };
  std::string out;
  for (const auto& cycle : cycle_decomposition(p).cycles) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += name(cycle[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace graphsym
