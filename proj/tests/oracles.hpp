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

// Slow, obviously-correct reference computations. None of these call into
// the library beyond reading a Matroid's rank table.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "lamina/constructions.hpp"
#include "lamina/matroid.hpp"

namespace oracle {

using lamina::Matroid;
using lamina::Subset;

inline int popcount(std::uint32_t x) { return __builtin_popcount(x); }

// Edges kept by Kruskal with a union-find over the chosen edges.
inline int forest_rank(const lamina::Multigraph& g, std::uint32_t edges) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int rank = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!((edges >> i) & 1)) continue;
    const int a = find(g.edges[i].u), b = find(g.edges[i].v);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

// Largest subset of X meeting every capacity.
inline int laminar_rank(const lamina::LaminarCapacitySystem& s, std::uint32_t x) {
  int best = 0;
  for (std::uint32_t i = x;; i = (i - 1) & x) {
    bool ok = true;
    for (std::size_t j = 0; j < s.family.size(); ++j) {
      if (popcount(i & s.family[j].bits()) > s.capacities[j]) ok = false;
    }
    if (ok) best = std::max(best, popcount(i));
    if (i == 0) break;
  }
  return best;
}

// Maximum matching of X into blocks by exhaustive assignment.
inline int transversal_rank(const std::vector<Subset>& blocks, std::uint32_t x) {
  std::vector<int> elems;
  for (int e = 0; e < 32; ++e) {
    if ((x >> e) & 1) elems.push_back(e);
  }
  std::vector<bool> used(blocks.size(), false);
  std::function<int(std::size_t)> go = [&](std::size_t i) -> int {
    if (i == elems.size()) return 0;
    int best = go(i + 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (used[b] || !blocks[b].contains(elems[i])) continue;
      used[b] = true;
      best = std::max(best, 1 + go(i + 1));
      used[b] = false;
    }
    return best;
  };
  return go(0);
}

// Dependent sets all of whose proper subsets are independent, from scratch.
inline std::vector<std::uint32_t> circuits(const Matroid& m) {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = (std::uint32_t{1} << m.size()) - 1;
  for (std::uint32_t c = 1; c <= full; ++c) {
    if (m.rank(Subset(c)) == popcount(c)) continue;
    bool minimal = true;
    for (int e = 0; e < m.size() && minimal; ++e) {
      if (((c >> e) & 1) && m.rank(Subset(c & ~(1u << e))) != popcount(c) - 1) minimal = false;
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

inline std::uint32_t closure(const Matroid& m, std::uint32_t a) {
  std::uint32_t out = a;
  for (int e = 0; e < m.size(); ++e) {
    if (m.rank(Subset(a | (1u << e))) == m.rank(Subset(a))) out |= 1u << e;
  }
  return out;
}

inline int flat_count(const Matroid& m) {
  int count = 0;
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << m.size()); ++a) count += closure(m, a) == a;
  return count;
}

// Closures of circuits C with r(cl C) = |C| - 1, deduplicated.
inline std::vector<std::uint32_t> hamiltonian_flats(const Matroid& m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c : oracle::circuits(m)) out.push_back(oracle::closure(m, c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Every circuit pair meeting in >= k elements has one inside the closure of
// the other.
inline bool k_laminar(const Matroid& m, int k) {
  const auto cs = oracle::circuits(m);
  for (std::uint32_t a : cs) {
    for (std::uint32_t b : cs) {
      if (popcount(a & b) < k) continue;
      if ((a & ~closure(m, b)) != 0 && (b & ~closure(m, a)) != 0) return false;
    }
  }
  return true;
}

// Hamiltonian flats through each independent k-set form a chain.
inline bool k_closure_laminar(const Matroid& m, int k) {
  const auto hams = oracle::hamiltonian_flats(m);
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << m.size()); ++x) {
    if (popcount(x) != k || m.rank(Subset(x)) != k) continue;
    for (std::uint32_t a : hams) {
      for (std::uint32_t b : hams) {
        if ((x & ~a) || (x & ~b)) continue;
        if ((a & ~b) && (b & ~a)) return false;
      }
    }
  }
  return true;
}

// Isomorphism by trying every permutation; fine up to 8 elements.
inline bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << n) && ok; ++x) {
      std::uint32_t y = 0;
      for (int e = 0; e < n; ++e) {
        if ((x >> e) & 1) y |= 1u << p[e];
      }
      ok = a.rank(Subset(x)) == b.rank(Subset(y));
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Rank table of U_{r,n}.
inline bool is_uniform(const Matroid& m, int r) {
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << m.size()); ++x) {
    if (m.rank(Subset(x)) != std::min(popcount(x), r)) return false;
  }
  return m.rank() == r;
}

}  // namespace oracle
