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

#include "lamina/graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace lamina {

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("SimpleGraph: loops are not allowed");
  adj[u] |= static_cast<std::uint8_t>(1u << v);
  adj[v] |= static_cast<std::uint8_t>(1u << u);
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (auto a : adj) twice += std::popcount(a);
  return twice / 2;
}

Multigraph SimpleGraph::to_multigraph() const {
  Multigraph g;
  g.vertex_count = vertices;
  int next = 0;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (has_edge(u, v)) g.add_edge("e" + std::to_string(next++), u, v);
    }
  }
  return g;
}

namespace {

std::vector<std::pair<int, int>> vertex_pairs(int v) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) out.emplace_back(a, b);
  }
  return out;
}

SimpleGraph from_pair_mask(int v, const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask) {
  SimpleGraph g(v);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
  }
  return g;
}

std::uint32_t canonical_mask(const SimpleGraph& g, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> perm(static_cast<std::size_t>(g.vertices));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~std::uint32_t{0};
  do {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (g.has_edge(perm[pairs[i].first], perm[pairs[i].second])) mask |= std::uint32_t{1} << i;
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected_without(const SimpleGraph& g, int skip) {
  int start = -1, total = 0;
  for (int u = 0; u < g.vertices; ++u) {
    if (u == skip) continue;
    ++total;
    if (start < 0) start = u;
  }
  if (total == 0) return true;
  std::uint32_t seen = std::uint32_t{1} << start, frontier = seen;
  const std::uint32_t blocked = skip >= 0 ? (std::uint32_t{1} << skip) : 0;
  while (frontier) {
    const int u = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint32_t next = g.adj[u] & ~seen & ~blocked;
    seen |= next;
    frontier |= next;
  }
  return std::popcount(seen) == total;
}

bool is_k4(const SimpleGraph& g) { return g.vertices == 4 && g.edge_count() == 6; }
bool is_k2(const SimpleGraph& g) { return g.vertices == 2 && g.edge_count() == 1; }

}  // namespace

std::vector<SimpleGraph> all_simple_graphs(int v) {
  if (v < 0 || v > 7) throw std::invalid_argument("all_simple_graphs: v must be in [0, 7]");
  const auto pairs = vertex_pairs(v);
  std::vector<SimpleGraph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
    out.push_back(from_pair_mask(v, pairs, mask));
  }
  return out;
}

std::vector<SimpleGraph> nonisomorphic_simple_graphs(int v) {
  if (v < 0 || v > 6) throw std::invalid_argument("nonisomorphic_simple_graphs: v must be in [0, 6]");
  const auto pairs = vertex_pairs(v);
  std::set<std::uint32_t> seen;
  for (const SimpleGraph& g : all_simple_graphs(v)) seen.insert(canonical_mask(g, pairs));
  std::vector<SimpleGraph> out;
  for (std::uint32_t mask : seen) out.push_back(from_pair_mask(v, pairs, mask));
  return out;
}

bool is_connected(const SimpleGraph& g) { return connected_without(g, -1); }

bool is_two_connected(const SimpleGraph& g) {
  if (g.vertices == 2) return is_k2(g);
  if (g.vertices < 3 || !is_connected(g)) return false;
  for (int u = 0; u < g.vertices; ++u) {
    if (!connected_without(g, u)) return false;
  }
  return true;
}

bool is_cycle_with_fan_chords(const SimpleGraph& g, int max_chords) {
  const int n = g.vertices;
  if (n < 3) return false;
  const int chords = g.edge_count() - n;
  if (chords < 0 || chords > max_chords) return false;
  // Hamiltonian cycles through vertex 0, in every rotation of the rest.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    bool cycle = true;
    for (int i = 0; i < n && cycle; ++i) cycle = g.has_edge(order[i], order[(i + 1) % n]);
    if (!cycle) continue;
    if (chords <= 1) return true;
    if (chords > 2) continue;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    auto on_cycle = [&](int a, int b) {
      const int d = (pos[a] - pos[b] + n) % n;
      return d == 1 || d == n - 1;
    };
    std::vector<std::pair<int, int>> extra;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (g.has_edge(a, b) && !on_cycle(a, b)) extra.emplace_back(a, b);
      }
    }
    // Shared endpoint u; the other two endpoints must be cycle neighbours.
    const auto [a1, b1] = extra[0];
    const auto [a2, b2] = extra[1];
    int v1 = -1, v2 = -1;
    if (a1 == a2) v1 = b1, v2 = b2;
    else if (a1 == b2) v1 = b1, v2 = a2;
    else if (b1 == a2) v1 = a1, v2 = b2;
    else if (b1 == b2) v1 = a1, v2 = a2;
    if (v1 >= 0 && on_cycle(v1, v2)) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

bool is_two_laminar_graph_shape(const SimpleGraph& g) {
  return is_k2(g) || is_k4(g) || is_cycle_with_fan_chords(g, 2);
}

bool is_one_chord_graph_shape(const SimpleGraph& g) {
  return is_k2(g) || is_k4(g) || is_cycle_with_fan_chords(g, 1);
}

std::vector<SimpleGraph> sample_two_connected(int v, int count, std::uint64_t seed) {
  if (v < 2 || v > 7) throw std::invalid_argument("sample_two_connected: v must be in [2, 7]");
  std::mt19937_64 rng(seed);
  const auto pairs = vertex_pairs(v);
  const std::uint64_t span = std::uint64_t{1} << pairs.size();
  std::vector<SimpleGraph> out;
  while (static_cast<int>(out.size()) < count) {
    SimpleGraph g = from_pair_mask(v, pairs, static_cast<std::uint32_t>(rng() & (span - 1)));
    if (is_two_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace lamina
