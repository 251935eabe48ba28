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

#include "graphsym/datasets.hpp"

#include <sstream>

#include "graphsym/rng.hpp"
#include "usa_edges.inc"

namespace graphsym {

namespace {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Checksum of core/data/contiguous_usa.edges as shipped.
constexpr std::uint64_t kUsaChecksum = 0x9E1CA7C522B48C64ULL;

}  // namespace

NamedDataset fig5_graph() {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}});
  return {"fig5", std::move(g),
          "bundled six-vertex symmetric example; 6 vertices, 6 edges"};
}

NamedDataset fig4_graph() {
  Graph g(9, {{0, 1},
              {0, 2},
              {1, 2},
              {1, 4},
              {2, 3},
              {3, 4},
              {3, 5},
              {4, 5},
              {2, 6},
              {3, 6},
              {6, 7},
              {7, 8}});
  return {"fig4", std::move(g),
          "bundled nine-vertex symmetric example; 9 vertices, 12 edges"};
}

NamedDataset contiguous_usa_graph(bool with_me_ri_edge) {
  const std::string_view data = internal::kContiguousUsaEdgeData;
  if (fnv1a64(data) != kUsaChecksum)
    throw std::runtime_error("contiguous USA edge data failed checksum validation");
  Graph base = parse_edge_list(data);
  if (base.vertex_count() != 49 || base.edge_count() != 107)
    throw std::runtime_error("contiguous USA edge data failed count validation");
  if (!with_me_ri_edge) {
    return {"usa", std::move(base),
            "contiguous USA adjacency (48 states + DC, drivable-road borders; "
            "Knuth's dataset); 49 vertices, 107 edges"};
  }
  const int me = base.index_of_label("ME");
  const int ri = base.index_of_label("RI");
  if (me < 0 || ri < 0)
    throw std::runtime_error("contiguous USA edge data is missing ME or RI");
  auto edges = base.edges();
  edges.emplace_back(me, ri);
  Graph augmented(base.vertex_count(), std::move(edges), base.labels());
  return {"usa+me-ri", std::move(augmented),
          "contiguous USA adjacency with the extra ME-RI edge; "
          "49 vertices, 108 edges"};
}

NamedDataset random_symmetric_graph(int n_half, int anchor_count, double p,
                                    std::uint64_t seed,
                                    double pair_edge_probability) {
  if (n_half < 1) throw std::invalid_argument("n_half must be >= 1");
  if (anchor_count < 0) throw std::invalid_argument("anchor_count must be >= 0");
  if (!(p >= 0.0 && p <= 1.0) ||
      !(pair_edge_probability >= 0.0 && pair_edge_probability <= 1.0))
    throw std::invalid_argument("probabilities must lie in [0, 1]");

  SplitMix64 rng(seed);
  const int n = 2 * n_half + anchor_count;
  const int mirror = n_half;            // i' = i + n_half for i < n_half
  const int anchor0 = 2 * n_half;
  std::vector<std::pair<int, int>> edges;

  // random block and its mirrored copy
  for (int i = 0; i < n_half; ++i) {
    for (int j = i + 1; j < n_half; ++j) {
      if (rng.next_unit() < p) {
        edges.emplace_back(i, j);
        edges.emplace_back(i + mirror, j + mirror);
      }
    }
  }
  // random anchor subgraph
  for (int a = anchor0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.next_unit() < p) edges.emplace_back(a, b);
  // identical block-to-anchor edges for mirrored pairs
  for (int i = 0; i < n_half; ++i) {
    for (int a = anchor0; a < n; ++a) {
      if (rng.next_unit() < p) {
        edges.emplace_back(i, a);
        edges.emplace_back(i + mirror, a);
      }
    }
  }
  // optional pair edges (i, i')
  for (int i = 0; i < n_half; ++i)
    if (rng.next_unit() < pair_edge_probability)
      edges.emplace_back(i, i + mirror);

  std::ostringstream name;
  name << "random-symmetric(n_half=" << n_half << ",anchor=" << anchor_count
       << ",p=" << p << ",pair_p=" << pair_edge_probability << ",seed=" << seed
       << ")";
  return {name.str(), Graph(n, std::move(edges)),
          "mirror-constructed symmetric graph; " + std::to_string(n) +
              " vertices"};
}

std::vector<std::string> dataset_names() { return {"fig4", "fig5", "usa"}; }

NamedDataset dataset_by_name(std::string_view name, bool usa_me_ri) {
  if (name == "fig4") return fig4_graph();
  if (name == "fig5") return fig5_graph();
  if (name == "usa") return contiguous_usa_graph(usa_me_ri);
  throw std::invalid_argument("unknown dataset '" + std::string(name) +
                              "' (try: fig4, fig5, usa)");
}

}  // namespace graphsym
