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

#include <doctest.h>

#include <algorithm>

#include "graphsym/datasets.hpp"
#include "graphsym/rng.hpp"

using namespace graphsym;

namespace {

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

const Permutation kFig5Involution =
    Permutation::from_one_based_images({6, 5, 4, 3, 2, 1});

std::vector<std::vector<int>> mappings(const AutomorphismSearchResult& result) {
  std::vector<std::vector<int>> out;
  for (const auto& cert : result.certificates)
    out.push_back(cert.permutation.mapping());
  return out;
}

std::vector<std::vector<int>> mappings(const std::vector<Permutation>& group) {
  std::vector<std::vector<int>> out;
  for (const auto& p : group) out.push_back(p.mapping());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("is_automorphism") {
  const Graph fig5 = fig5_graph().graph;
  CHECK(is_automorphism(fig5, kFig5Involution));
  CHECK(is_automorphism(fig5, Permutation::identity(6)));

  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_automorphism(p3, Permutation({1, 0, 2})));
  CHECK_THROWS_AS(is_automorphism(p3, Permutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("exhaustive search on the bundled examples") {
  const auto fig5 = find_automorphisms(fig5_graph().graph);
  CHECK(fig5.complete);
  REQUIRE(fig5.certificates.size() == 2);
  CHECK(fig5.certificates[0].permutation.is_identity());
  CHECK(fig5.certificates[1].permutation == kFig5Involution);
  CHECK(fig5.certificates[1].verified);
  CHECK(fig5.certificates[1].even_cycle_count == 3);

  const auto k3 = find_automorphisms(complete_graph(3));
  CHECK(k3.complete);
  CHECK(k3.certificates.size() == 6);

  const auto single = find_automorphisms(Graph::empty(1));
  CHECK(single.certificates.size() == 1);
  CHECK_FALSE(is_symmetric_graph(Graph::empty(1)).symmetric);
}

TEST_CASE("backtracking equals brute force on random graphs") {
  SplitMix64 rng(101);
  int symmetric_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(5));  // n in [2, 6]
    const double p = 0.2 + 0.15 * static_cast<double>(rng.next_below(5));
    const Graph g = erdos_renyi_sample(n, p, rng.next());
    const auto searched = mappings(find_automorphisms(g));
    const auto brute = mappings(brute_force_automorphisms(g));
    CHECK(searched == brute);
    if (searched.size() > 1) ++symmetric_seen;
  }
  CHECK(symmetric_seen > 5);  // the sample exercises nontrivial groups
}

TEST_CASE("certificates preserve degrees and commute with the Laplacian") {
  SplitMix64 rng(211);
  for (int trial = 0; trial < 25; ++trial) {
    const auto dataset =
        random_symmetric_graph(1 + static_cast<int>(rng.next_below(3)),
                               static_cast<int>(rng.next_below(3)), 0.5,
                               rng.next(), 0.5);
    const Graph& g = dataset.graph;
    const IntMatrix l = laplacian(g);
    for (const auto& cert : find_automorphisms(g).certificates) {
      CHECK(cert.verified);
      const auto& p = cert.permutation;
      for (int i = 0; i < g.vertex_count(); ++i)
        CHECK(g.degree(i) == g.degree(p(i)));
      const IntMatrix pi = permutation_matrix(p);
      CHECK(exact_equal(pi * l, l * pi));
    }
  }
}

TEST_CASE("symmetry detection") {
  const auto fig4 = is_symmetric_graph(fig4_graph().graph);
  CHECK(fig4.symmetric);
  REQUIRE(fig4.witness.has_value());
  CHECK(fig4.witness->verified);
  CHECK_FALSE(fig4.witness->permutation.is_identity());
  // the nine-vertex example admits exactly one nontrivial automorphism
  CHECK(fig4.witness->permutation ==
        Permutation::from_one_based_images({6, 5, 4, 3, 2, 1, 7, 8, 9}));
}

TEST_CASE("two-cycle automorphism search") {
  const auto fig5 = find_two_cycle_automorphism(fig5_graph().graph);
  REQUIRE(fig5.has_value());
  CHECK(fig5->permutation == kFig5Involution);

  const auto c3 = find_two_cycle_automorphism(complete_graph(3));
  REQUIRE(c3.has_value());
  CHECK(c3->even_cycle_count >= 1);
  const auto cycles = cycle_decomposition(c3->permutation);
  CHECK(std::any_of(cycles.cycles.begin(), cycles.cycles.end(),
                    [](const auto& c) { return c.size() == 2; }));

  // every symmetric graph in a random sample yields a 2-cycle witness
  SplitMix64 rng(307);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(5));
    const Graph g = erdos_renyi_sample(n, 0.5, rng.next());
    if (!is_symmetric_graph(g).symmetric) {
      CHECK_FALSE(find_two_cycle_automorphism(g).has_value());
      continue;
    }
    const auto witness = find_two_cycle_automorphism(g);
    REQUIRE(witness.has_value());
    CHECK(witness->verified);
    const auto d = cycle_decomposition(witness->permutation);
    CHECK(std::any_of(d.cycles.begin(), d.cycles.end(),
                      [](const auto& c) { return c.size() == 2; }));
  }
}

TEST_CASE("subgraphs of symmetry") {
  // nine-vertex example: triangles {1,2,3} and {4,5,6}, anchors {7,8,9}
  const Graph fig4 = fig4_graph().graph;
  const auto cert = make_certificate(
      fig4, Permutation::from_one_based_images({6, 5, 4, 3, 2, 1, 7, 8, 9}));
  const auto subgraphs = subgraphs_of_symmetry(fig4, cert);
  REQUIRE(subgraphs.blocks.size() == 2);
  CHECK(subgraphs.blocks[0] == std::vector<int>{0, 1, 2});
  CHECK(subgraphs.blocks[1] == std::vector<int>{3, 4, 5});
  CHECK(subgraphs.anchor_set == std::vector<int>{6, 7, 8});
  CHECK(subgraphs.correspondence ==
        std::vector<std::pair<int, int>>{{0, 5}, {1, 4}, {2, 3}});

  // both blocks induce triangles and touch anchor vertex 7 (index 6)
  for (const auto& block : subgraphs.blocks) {
    int internal_edges = 0;
    bool touches_seven = false;
    for (int i : block) {
      for (int j : block)
        if (i < j && fig4.has_edge(i, j)) ++internal_edges;
      touches_seven = touches_seven || fig4.has_edge(i, 6);
    }
    CHECK(internal_edges == 3);
    CHECK(touches_seven);
  }

  // paired vertices see the same anchors
  for (auto [i, j] : subgraphs.correspondence)
    for (int anchor : subgraphs.anchor_set)
      CHECK(fig4.has_edge(i, anchor) == fig4.has_edge(j, anchor));

  // K2: singleton blocks, no anchors
  const Graph k2 = complete_graph(2);
  const auto k2_sub = subgraphs_of_symmetry(
      k2, make_certificate(k2, Permutation({1, 0})));
  CHECK(k2_sub.blocks ==
        std::vector<std::vector<int>>{{0}, {1}});
  CHECK(k2_sub.anchor_set.empty());

  // a certificate without 2-cycles is rejected
  const Graph k3 = complete_graph(3);
  CHECK_THROWS_AS(
      subgraphs_of_symmetry(k3, make_certificate(k3, Permutation({1, 2, 0}))),
      std::invalid_argument);
}

TEST_CASE("subgraphs of symmetry on the augmented USA graph") {
  const Graph usa = contiguous_usa_graph(true).graph;
  const auto check = is_symmetric_graph(usa);
  REQUIRE(check.symmetric);
  const auto subgraphs = subgraphs_of_symmetry(usa, *check.witness);
  REQUIRE(subgraphs.blocks.size() == 2);

  const auto label_block = [&](const std::vector<int>& block) {
    std::vector<std::string> names;
    for (int v : block) names.push_back(usa.label(v));
    std::sort(names.begin(), names.end());
    return names;
  };
  std::vector<std::vector<std::string>> blocks{label_block(subgraphs.blocks[0]),
                                               label_block(subgraphs.blocks[1])};
  std::sort(blocks.begin(), blocks.end());
  CHECK(blocks[0] == std::vector<std::string>{"CT", "RI"});
  CHECK(blocks[1] == std::vector<std::string>{"NH", "VT"});

  // both blocks are single edges (paths) adjacent to NY, MA, ME
  std::vector<std::string> anchor_neighbors;
  for (const auto& block : subgraphs.blocks) {
    CHECK(usa.has_edge(block[0], block[1]));
    std::vector<std::string> seen;
    for (int v : block)
      for (int w : usa.neighbors(v))
        if (std::find(subgraphs.anchor_set.begin(), subgraphs.anchor_set.end(),
                      w) != subgraphs.anchor_set.end())
          seen.push_back(usa.label(w));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    CHECK(seen == std::vector<std::string>{"MA", "ME", "NY"});
  }
}

TEST_CASE("distortion") {
  const IntMatrix fig5 = adjacency_matrix(fig5_graph().graph);
  CHECK(distortion(fig5, fig5, kFig5Involution) == 0.0);
  CHECK(distortion(fig5, fig5, Permutation::identity(6)) == 0.0);

  const IntMatrix p3 = adjacency_matrix(Graph(3, {{0, 1}, {1, 2}}));
  CHECK(distortion(p3, p3, Permutation({1, 0, 2})) == doctest::Approx(2.0));

  CHECK_THROWS_AS(distortion(fig5, p3, Permutation::identity(6)),
                  std::invalid_argument);

  // both printed forms agree, and zero distortion means automorphism
  SplitMix64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    const Graph g = erdos_renyi_sample(n, 0.5, rng.next());
    const Permutation p = Permutation::random(n, rng);
    const IntMatrix a = adjacency_matrix(g);
    const IntMatrix pi = permutation_matrix(p);
    const double via_commutator = distortion(a, a, p);
    const Eigen::MatrixXd alt =
        (a - pi.transpose() * a * pi).cast<double>();
    CHECK(via_commutator == doctest::Approx(alt.norm()).epsilon(1e-12));
    CHECK((via_commutator == 0.0) == is_automorphism(g, p));
  }
}

TEST_CASE("maximum eigenvalue -1 multiplicity over the group") {
  CHECK(max_minus_one_multiplicity(fig5_graph().graph) == 3);

  // an asymmetric graph scores zero; find one by scanning seeds
  SplitMix64 rng(61);
  bool found = false;
  for (int attempt = 0; attempt < 50 && !found; ++attempt) {
    const Graph g = erdos_renyi_sample(6, 0.5, rng.next());
    if (brute_force_automorphisms(g).size() == 1) {
      CHECK(max_minus_one_multiplicity(g) == 0);
      found = true;
    }
  }
  CHECK(found);

  // augmented USA graph: order-2 group, two 2-cycles
  CHECK(max_minus_one_multiplicity(contiguous_usa_graph(true).graph) == 2);
}
