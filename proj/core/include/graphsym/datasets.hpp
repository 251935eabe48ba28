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
#include <string>
#include <string_view>
#include <vector>

#include "graphsym/graph.hpp"

namespace graphsym {

struct NamedDataset {
  std::string name;
  Graph graph;
  std::string provenance;
};

/// Six-vertex symmetric example: a 6-path with the chord {2,5}.
/// Degrees (1,3,2,2,3,1); automorphism group of order 2.
NamedDataset fig5_graph();

/// Nine-vertex symmetric example: two triangles {1,2,3} and {4,5,6} joined
/// by the pair edges {2,5},{3,4} and both adjacent to vertex 7 of the
/// three-vertex tail 7-8-9.
NamedDataset fig4_graph();

/// Contiguous USA adjacency: 48 states plus DC, edges between regions
/// joined by a drivable road (Knuth's dataset). 49 vertices and 107 edges,
/// validated against a recorded checksum at load. With the flag, the extra
/// ME-RI edge is inserted (108 edges), which makes the graph symmetric.
NamedDataset contiguous_usa_graph(bool with_me_ri_edge);

/// Random graph that is symmetric by construction: a random block on
/// n_half vertices, its mirrored copy, a random anchor subgraph, identical
/// block-to-anchor edges for mirrored pairs, and optional pair edges
/// (i, i') drawn with pair_edge_probability. The mirror swap i <-> i' is
/// an automorphism of every sample.
NamedDataset random_symmetric_graph(int n_half, int anchor_count, double p,
                                    std::uint64_t seed,
                                    double pair_edge_probability);

/// Names accepted by dataset_by_name (and the CLI --dataset flag).
std::vector<std::string> dataset_names();

/// Throws std::invalid_argument for unknown names. usa_me_ri applies to
/// the "usa" dataset only.
NamedDataset dataset_by_name(std::string_view name, bool usa_me_ri = false);

}  // namespace graphsym
