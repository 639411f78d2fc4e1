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

// Hand-rolled random inputs for the property tests.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lamina/constructions.hpp"
#include "lamina/matroid.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int below(Rng& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

inline lamina::Multigraph multigraph(Rng& rng, int edges, int vertices) {
  lamina::Multigraph g;
  g.vertex_count = vertices;
  for (int i = 0; i < edges; ++i) g.add_edge("g" + std::to_string(i), below(rng, vertices), below(rng, vertices));
  return g;
}

// Random laminar family by recursive splitting: each member is cut into up
// to three blocks, and each block may become a member itself.
inline void split(Rng& rng, lamina::Subset s, lamina::LaminarCapacitySystem& out) {
  lamina::Subset blocks[3];
  for (int e : s) blocks[below(rng, 3)] |= lamina::Subset::single(e);
  for (lamina::Subset b : blocks) {
    if (b.empty() || b == s || below(rng, 3) == 0) continue;
    out.family.push_back(b);
    out.capacities.push_back(below(rng, b.size() + 1));
    split(rng, b, out);
  }
}

inline lamina::LaminarCapacitySystem laminar_system(Rng& rng, int n) {
  lamina::LaminarCapacitySystem s{lamina::default_labels(n), {}, {}};
  const lamina::Subset ground = lamina::Subset::full(n);
  if (rng() & 1) {
    s.family.push_back(ground);
    s.capacities.push_back(below(rng, n + 1));
  }
  split(rng, ground, s);
  return s;
}

// Chain of prefixes of a random order.
inline lamina::NestedPresentation nested_presentation(Rng& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  lamina::NestedPresentation p{lamina::default_labels(n), {}};
  int len = 0;
  for (int b = below(rng, n) + 1; b > 0; --b) {
    len = std::min(n, len + below(rng, 3));
    lamina::Subset s;
    for (int i = 0; i < len; ++i) s = s.with(order[i]);
    p.chain.push_back(s);
  }
  return p;
}

// A matroid from one of the above, with 1..max_n elements.
inline lamina::Matroid matroid(Rng& rng, int max_n) {
  const int n = 1 + below(rng, max_n);
  switch (below(rng, 4)) {
    case 0: return lamina::cycle_matroid(multigraph(rng, n, 2 + below(rng, n)));
    case 1: return lamina::laminar_matroid(laminar_system(rng, n));
    case 2: return lamina::transversal_matroid(nested_presentation(rng, n));
    default: {
      const int r = below(rng, n + 1);
      return lamina::uniform(r, n);
    }
  }
}

inline lamina::Subset subset(Rng& rng, int n) {
  return lamina::Subset(static_cast<std::uint32_t>(rng()) & lamina::Subset::full(n).bits());
}

}  // namespace gen
