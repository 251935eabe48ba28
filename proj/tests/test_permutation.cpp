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

#include <doctest.h>

#include "graphsym/datasets.hpp"
#include "graphsym/rng.hpp"
#include "graphsym/spectral.hpp"

using namespace graphsym;

TEST_CASE("permutation validation and text format") {
  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1 junk"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);

  const Permutation p = Permutation::parse("2 1 4 5 3");
  CHECK(p.size() == 5);
  CHECK(p(0) == 1);
  CHECK(p(4) == 2);
  CHECK(format_images(p) == "2 1 4 5 3");
  CHECK(format_images(Permutation::parse(format_images(p))) == "2 1 4 5 3");
}

TEST_CASE("permutation matrix convention") {
  // the normative 5x5 test vector: pi = (2 1 4 5 3) in one-line form
  const Permutation p = Permutation::from_one_based_images({2, 1, 4, 5, 3});
  IntMatrix expected(5, 5);
  expected << 0, 1, 0, 0, 0,
              1, 0, 0, 0, 0,
              0, 0, 0, 1, 0,
              0, 0, 0, 0, 1,
              0, 0, 1, 0, 0;
  CHECK(exact_equal(permutation_matrix(p), expected));

  CHECK(exact_equal(permutation_matrix(Permutation::identity(4)),
                    IntMatrix::Identity(4, 4)));

  IntMatrix swap2(2, 2);
  swap2 << 0, 1, 1, 0;
  CHECK(exact_equal(permutation_matrix(Permutation({1, 0})), swap2));

  // one 1 per row and per column
  const IntMatrix pi = permutation_matrix(p);
  CHECK((pi * IntMatrix::Ones(5, 1)).isOnes());
  CHECK((pi.transpose() * IntMatrix::Ones(5, 1)).isOnes());
}

TEST_CASE("cycle decomposition") {
  const Permutation p = Permutation::from_one_based_images({2, 1, 4, 5, 3});
  const auto d = cycle_decomposition(p);
  REQUIRE(d.cycles.size() == 2);
  CHECK(d.cycles[0] == std::vector<int>{0, 1});
  CHECK(d.cycles[1] == std::vector<int>{2, 3, 4});
  CHECK(count_even_cycles(d) == 1);
  CHECK(cycle_notation(p) == "(1 2)(3 4 5)");

  const auto id4 = cycle_decomposition(Permutation::identity(4));
  CHECK(id4.cycles.size() == 4);
  for (const auto& cycle : id4.cycles) CHECK(cycle.size() == 1);
  CHECK(count_even_cycles(id4) == 0);
  CHECK(cycle_notation(Permutation::identity(4)) == "()");

  const auto rotation = cycle_decomposition(
      Permutation::from_one_based_images({2, 3, 4, 1}));
  CHECK(rotation.cycles.size() == 1);
  CHECK(rotation.cycles[0].size() == 4);

  // the six-vertex example involution: three independent 2-cycles
  const Permutation involution =
      Permutation::from_one_based_images({6, 5, 4, 3, 2, 1});
  CHECK(count_even_cycles(cycle_decomposition(involution)) == 3);
  CHECK(cycle_notation(involution) == "(1 6)(2 5)(3 4)");
}

TEST_CASE("cycles reconstruct the mapping exactly") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(12));
    const Permutation p = Permutation::random(n, rng);
    std::vector<int> rebuilt(n, -1);
    for (const auto& cycle : cycle_decomposition(p).cycles)
      for (std::size_t k = 0; k < cycle.size(); ++k)
        rebuilt[cycle[k]] = cycle[(k + 1) % cycle.size()];
    CHECK(rebuilt == p.mapping());
  }
}

TEST_CASE("minus-one eigenvector of an even cycle") {
  const Permutation swap2({1, 0});
  const Eigen::VectorXd v2 = minus_one_eigenvector(swap2, {0, 1});
  CHECK(v2(0) == 1.0);
  CHECK(v2(1) == -1.0);

  // alternating vector on a 4-cycle
  const Permutation rotation = Permutation::from_one_based_images({2, 3, 4, 1});
  const Eigen::VectorXd v4 = minus_one_eigenvector(rotation, {0, 1, 2, 3});
  CHECK(v4 == Eigen::Vector4d(1, -1, 1, -1));

  // the (2 5) cycle of the six-vertex example involution
  const Permutation involution =
      Permutation::from_one_based_images({6, 5, 4, 3, 2, 1});
  const Eigen::VectorXd v = minus_one_eigenvector(involution, {1, 4});
  CHECK(v(1) == 1.0);
  CHECK(v(4) == -1.0);
  CHECK(v.cwiseAbs().sum() == 2.0);

  CHECK_THROWS_AS(minus_one_eigenvector(rotation, {0, 1, 2}),
                  std::invalid_argument);  // odd length
  CHECK_THROWS_AS(minus_one_eigenvector(rotation, {0, 2}),
                  std::invalid_argument);  // not a cycle of the permutation

  // exactness: Pi v = -v and v' 1 = 0, in integers, for random permutations
  SplitMix64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(11));
    const Permutation p = Permutation::random(n, rng);
    const IntMatrix pi = permutation_matrix(p);
    for (const auto& cycle : cycle_decomposition(p).cycles) {
      if (cycle.size() < 2 || cycle.size() % 2 != 0) continue;
      const Eigen::VectorXd v = minus_one_eigenvector(p, cycle);
      CHECK((pi.cast<double>() * v + v).isZero(0.0));
      CHECK(v.sum() == 0.0);
    }
  }
}

TEST_CASE("inverse and composition") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(10));
    const Permutation p = Permutation::random(n, rng);
    CHECK(p.compose(p.inverse()).is_identity());
    CHECK(exact_equal(permutation_matrix(p) * permutation_matrix(p.inverse()),
                      IntMatrix::Identity(n, n)));
  }
}

TEST_CASE("applying a permutation to a graph") {
  const Graph fig5 = fig5_graph().graph;
  CHECK(apply_to_graph(Permutation::identity(6), fig5).edges() == fig5.edges());

  // the six-vertex example automorphism leaves the edge set unchanged
  const Permutation involution =
      Permutation::from_one_based_images({6, 5, 4, 3, 2, 1});
  CHECK(apply_to_graph(involution, fig5).edges() == fig5.edges());

  // path 1-2-3 mirrored end to end
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(apply_to_graph(Permutation({2, 1, 0}), p3).edges() == p3.edges());

  CHECK_THROWS_AS(apply_to_graph(Permutation::identity(4), p3),
                  std::invalid_argument);

  // adjacency of the image is Pi' A Pi under the row convention
  SplitMix64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(8));
    const Graph g = erdos_renyi_sample(n, 0.5, rng.next());
    const Permutation p = Permutation::random(n, rng);
    const IntMatrix pi = permutation_matrix(p);
    const IntMatrix expected = pi.transpose() * adjacency_matrix(g) * pi;
    CHECK(exact_equal(adjacency_matrix(apply_to_graph(p, g)), expected));
  }
}

TEST_CASE("eigenvalue -1 multiplicity equals the even-cycle count") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(11));
    const Permutation p = Permutation::random(n, rng);
    const auto spectrum = complex_spectrum(permutation_matrix(p));
    const int multiplicity =
        eigenvalue_multiplicity(spectrum, {-1.0, 0.0}, 1e-6);
    CHECK(multiplicity == count_even_cycles(cycle_decomposition(p)));
  }
}
