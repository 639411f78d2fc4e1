// Copyright 2026 The Authors.
//
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
#include <vector>

#include "lamina/constructions.hpp"

namespace lamina {

/// Simple graph on at most 8 vertices as an adjacency bitmask per vertex.
struct SimpleGraph {
  int vertices = 0;
  std::vector<std::uint8_t> adj;

  explicit SimpleGraph(int v = 0) : vertices(v), adj(static_cast<std::size_t>(v), 0) {}
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  void add_edge(int u, int v);
  int edge_count() const;
  /// Edges (u, v), u < v, in lexicographic order, labelled e0, e1, ...
  Multigraph to_multigraph() const;
};

/// All labelled simple graphs on `v` vertices (2^(v choose 2) of them).
std::vector<SimpleGraph> all_simple_graphs(int v);

/// One representative per isomorphism class, for v <= 6.
std::vector<SimpleGraph> nonisomorphic_simple_graphs(int v);

bool is_connected(const SimpleGraph& g);
/// K2, or at least three vertices, connected, and no cut vertex. These are
/// exactly the loopless graphs whose cycle matroid is connected.
bool is_two_connected(const SimpleGraph& g);

/// A Hamiltonian cycle plus at most `max_chords` chords. With two chords they
/// must form a fan: (u, v1), (u, v2) with v1 v2 an edge of the cycle.
bool is_cycle_with_fan_chords(const SimpleGraph& g, int max_chords);

/// K2, K4, or a Hamiltonian cycle with at most two chords in fan position.
bool is_two_laminar_graph_shape(const SimpleGraph& g);
/// K2, K4, or a Hamiltonian cycle with at most one chord.
bool is_one_chord_graph_shape(const SimpleGraph& g);

/// Two-connected simple graphs on `v` vertices drawn with edge probability
/// 1/2 (rejection sampling), reproducible from `seed`.
std::vector<SimpleGraph> sample_two_connected(int v, int count, std::uint64_t seed);

}  // namespace lamina
