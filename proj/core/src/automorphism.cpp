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

#include "graphsym/automorphism.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace graphsym {

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.vertex_count())
    throw std::invalid_argument("permutation size does not match graph");
  for (auto [i, j] : g.edges())
    if (!g.has_edge(p(i), p(j))) return false;
  return true;
}

double distortion(const IntMatrix& a, const IntMatrix& b, const Permutation& p) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != p.size())
    throw std::invalid_argument("distortion: dimension mismatch");
  const IntMatrix pi = permutation_matrix(p);
  const IntMatrix diff = pi * a - b * pi;
  long long sum_sq = 0;
  for (Eigen::Index i = 0; i < diff.rows(); ++i)
    for (Eigen::Index j = 0; j < diff.cols(); ++j)
      sum_sq += static_cast<long long>(diff(i, j)) * diff(i, j);
  return std::sqrt(static_cast<double>(sum_sq));
}

AutomorphismCertificate make_certificate(const Graph& g, const Permutation& p) {
  AutomorphismCertificate cert{p, false, 0};
  const IntMatrix a = adjacency_matrix(g);
  const IntMatrix pi = permutation_matrix(p);
  cert.verified = exact_equal(pi * a, a * pi);
  cert.even_cycle_count = count_even_cycles(cycle_decomposition(p));
  return cert;
}

namespace {

// Renumber arbitrary keys to dense color ids, assigned in sorted key order
// so the result is independent of vertex numbering quirks.
int densify(std::vector<std::vector<int>>& keys, std::vector<int>& colors) {
  std::map<std::vector<int>, int> ids;
  for (const auto& key : keys) ids.emplace(key, 0);
  int next = 0;
  for (auto& [key, id] : ids) id = next++;
  for (std::size_t v = 0; v < keys.size(); ++v) colors[v] = ids[keys[v]];
  return next;
}

// Iterated neighbor-multiset refinement (1-WL) to a fixed point.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adjacency(n);
  for (int v = 0; v < n; ++v) adjacency[v] = g.neighbors(v);

  std::vector<std::vector<int>> keys(n);
  int color_count = 0;
  {
    for (int v = 0; v < n; ++v) keys[v] = {colors[v]};
    color_count = densify(keys, colors);
  }
  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto& key = keys[v];
      key.clear();
      key.push_back(colors[v]);
      for (int w : adjacency[v]) key.push_back(colors[w]);
      std::sort(key.begin() + 1, key.end());
    }
    const int refined = densify(keys, colors);
    if (refined == color_count) return colors;
    color_count = refined;
  }
}

std::vector<int> initial_colors(const Graph& g, const std::vector<int>* extra) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> keys(n);
  for (int v = 0; v < n; ++v) {
    keys[v] = {g.degree(v)};
    if (extra) keys[v].push_back((*extra)[v]);
  }
  std::vector<int> colors(n);
  densify(keys, colors);
  return refine_colors(g, std::move(colors));
}

// Assignment order: most-anchored vertex first (max already-ordered
// neighbors, then smallest color class, then lowest index).
std::vector<int> assignment_order(const Graph& g, const std::vector<int>& colors) {
  const int n = g.vertex_count();
  std::vector<int> class_size(n, 0);
  for (int v = 0; v < n; ++v) ++class_size[colors[v]];
  std::vector<int> anchored(n, 0);
  std::vector<bool> placed(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || anchored[v] > anchored[best] ||
          (anchored[v] == anchored[best] &&
           class_size[colors[v]] < class_size[colors[best]]))
        best = v;
    }
    placed[best] = true;
    order.push_back(best);
    for (int w : g.neighbors(best)) ++anchored[w];
  }
  return order;
}

struct BacktrackSearch {
  const Graph& g;
  std::vector<int> colors;
  std::vector<int> order;
  std::vector<int> image;
  std::vector<bool> used;
  // return false to stop the search
  std::function<bool(const std::vector<int>&)> emit;
  bool stopped = false;

  BacktrackSearch(const Graph& graph, const std::vector<int>* extra_colors)
      : g(graph),
        colors(initial_colors(graph, extra_colors)),
        order(assignment_order(graph, colors)),
        image(graph.vertex_count(), -1),
        used(graph.vertex_count(), false) {}

  bool consistent(int u, int v, int depth) const {
    for (int k = 0; k < depth; ++k) {
      const int w = order[k];
      if (g.has_edge(u, w) != g.has_edge(v, image[w])) return false;
    }
    return true;
  }

  void run(int depth) {
    if (stopped) return;
    const int n = g.vertex_count();
    if (depth == n) {
      if (!emit(image)) stopped = true;
      return;
    }
    const int u = order[depth];
    for (int v = 0; v < n && !stopped; ++v) {
      if (used[v] || colors[v] != colors[u]) continue;
      if (!consistent(u, v, depth)) continue;
      image[u] = v;
      used[v] = true;
      run(depth + 1);
      used[v] = false;
      image[u] = -1;
    }
  }
};

}  // namespace

AutomorphismSearchResult find_automorphisms(
    const Graph& g, const AutomorphismSearchOptions& options) {
  AutomorphismSearchResult result;
  std::vector<Permutation> found;
  bool has_identity = false;
  int nontrivial = 0;

  BacktrackSearch search(g, options.vertex_colors);
  search.emit = [&](const std::vector<int>& image) {
    Permutation p{std::vector<int>(image)};
    if (p.is_identity()) {
      has_identity = true;
    } else {
      ++nontrivial;
    }
    found.push_back(std::move(p));
    if (options.nontrivial_limit && nontrivial >= *options.nontrivial_limit) {
      result.complete = false;
      return false;
    }
    if (found.size() >= options.max_certificates) {
      result.complete = false;
      return false;
    }
    return true;
  };
  search.run(0);

  if (!has_identity) found.push_back(Permutation::identity(g.vertex_count()));
  std::sort(found.begin(), found.end());
  result.certificates.reserve(found.size());
  for (const auto& p : found)
    result.certificates.push_back(make_certificate(g, p));
  return result;
}

std::vector<Permutation> brute_force_automorphisms(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 10)
    throw std::invalid_argument("brute force enumeration is capped at n <= 10");
  std::vector<int> mapping(n);
  std::iota(mapping.begin(), mapping.end(), 0);
  std::vector<Permutation> group;
  do {
    Permutation p{std::vector<int>(mapping)};
    if (is_automorphism(g, p)) group.push_back(std::move(p));
  } while (std::next_permutation(mapping.begin(), mapping.end()));
  return group;  // next_permutation yields lexicographic order
}

SymmetryCheck is_symmetric_graph(const Graph& g) {
  AutomorphismSearchOptions options;
  options.nontrivial_limit = 1;
  const auto result = find_automorphisms(g, options);
  for (const auto& cert : result.certificates) {
    if (!cert.permutation.is_identity()) return {true, cert};
  }
  return {false, std::nullopt};
}

namespace {

// Exhaustive search over involutions compatible with the refined coloring.
// Vertices are paired lowest-first; swaps are tried before fixed points so
// a nonidentity involution is reached as early as possible.
class InvolutionSearch {
 public:
  explicit InvolutionSearch(const Graph& graph)
      : g_(graph), colors_(initial_colors(graph, nullptr)),
        image_(graph.vertex_count(), -1) {}

  std::optional<Permutation> run() {
    if (search()) return Permutation(image_);
    return std::nullopt;
  }

 private:
  bool consistent(int u, int v) const {
    for (int w = 0; w < g_.vertex_count(); ++w) {
      if (image_[w] < 0) continue;
      if (g_.has_edge(u, w) != g_.has_edge(v, image_[w])) return false;
    }
    return true;
  }

  bool search() {
    int u = -1;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (image_[v] < 0) {
        u = v;
        break;
      }
    }
    if (u < 0) {
      for (int v = 0; v < g_.vertex_count(); ++v)
        if (image_[v] != v) return true;  // nonidentity involution
      return false;
    }
    for (int v = u + 1; v < g_.vertex_count(); ++v) {
      if (image_[v] >= 0 || colors_[v] != colors_[u]) continue;
      if (!consistent(u, v) || !consistent(v, u)) continue;
      image_[u] = v;
      image_[v] = u;
      if (search()) return true;
      image_[u] = -1;
      image_[v] = -1;
    }
    if (consistent(u, u)) {
      image_[u] = u;
      if (search()) return true;
      image_[u] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> colors_;
  std::vector<int> image_;
};

}  // namespace

std::optional<AutomorphismCertificate> find_two_cycle_automorphism(const Graph& g) {
  if (auto involution = InvolutionSearch(g).run()) {
    auto cert = make_certificate(g, *involution);
    if (cert.verified && cert.even_cycle_count > 0) return cert;
  }
  // Fallback: scan the whole group for an element with a 2-cycle. By group
  // theory the involution search above cannot miss one, but for small n the
  // oracle route is cheap.
  if (g.vertex_count() <= 10) {
    for (const auto& p : brute_force_automorphisms(g)) {
      const auto d = cycle_decomposition(p);
      const bool has_two_cycle = std::any_of(
          d.cycles.begin(), d.cycles.end(),
          [](const std::vector<int>& c) { return c.size() == 2; });
      if (has_two_cycle) return make_certificate(g, p);
    }
  }
  return std::nullopt;
}

SymmetrySubgraphs subgraphs_of_symmetry(const Graph& g,
                                        const AutomorphismCertificate& cert) {
  const Permutation& p = cert.permutation;
  if (!cert.verified || !is_automorphism(g, p))
    throw std::invalid_argument("certificate does not verify against the graph");
  const auto decomposition = cycle_decomposition(p);

  SymmetrySubgraphs out;
  std::vector<int> pair_of(g.vertex_count(), -1);
  for (const auto& cycle : decomposition.cycles) {
    if (cycle.size() == 1) {
      out.anchor_set.push_back(cycle[0]);
    } else if (cycle.size() == 2) {
      const int a = std::min(cycle[0], cycle[1]);
      const int b = std::max(cycle[0], cycle[1]);
      out.correspondence.emplace_back(a, b);
      pair_of[a] = b;
      pair_of[b] = a;
    }
  }
  if (out.correspondence.empty())
    throw std::invalid_argument("certificate has no 2-cycles");
  std::sort(out.anchor_set.begin(), out.anchor_set.end());
  std::sort(out.correspondence.begin(), out.correspondence.end());

  // Components of the induced subgraph on 2-cycle vertices, ignoring the
  // pair edges (i, pi(i)) themselves.
  std::vector<int> component(g.vertex_count(), -1);
  int component_count = 0;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (pair_of[start] < 0 || component[start] >= 0) continue;
    const int id = component_count++;
    std::vector<int> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < g.vertex_count(); ++w) {
        if (pair_of[w] < 0 || component[w] >= 0) continue;
        if (g.has_edge(v, w) && pair_of[v] != w) {
          component[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  out.blocks.assign(component_count, {});
  for (int v = 0; v < g.vertex_count(); ++v)
    if (component[v] >= 0) out.blocks[component[v]].push_back(v);
  for (auto& block : out.blocks) std::sort(block.begin(), block.end());
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

std::optional<int> max_minus_one_multiplicity(const Graph& g) {
  const auto result = find_automorphisms(g);
  if (!result.complete) return std::nullopt;
  int best = 0;
  for (const auto& cert : result.certificates)
    best = std::max(best, cert.even_cycle_count);
  return best;
}

}  // namespace graphsym
