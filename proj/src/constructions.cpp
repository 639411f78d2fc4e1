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

#include "lamina/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lamina {

int Multigraph::add_edge(std::string label, int u, int v) {
  edges.push_back({std::move(label), u, v});
  return static_cast<int>(edges.size()) - 1;
}

bool is_laminar_family(const std::vector<Subset>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Subset a = family[i], b = family[j];
      if (a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a)) return false;
    }
  }
  return true;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<int> make_table(int n) { return std::vector<int>(std::size_t{1} << n); }

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Kuhn's augmenting-path matching of elements to blocks.
class BlockMatcher {
 public:
  BlockMatcher(const std::vector<Subset>& blocks, int n)
      : blocks_(blocks), owner_(blocks.size()), seen_(blocks.size()) {
    (void)n;
  }

  int max_matching(Subset x) {
    std::fill(owner_.begin(), owner_.end(), -1);
    int size = 0;
    for (int e : x) {
      std::fill(seen_.begin(), seen_.end(), false);
      if (augment(e)) ++size;
    }
    return size;
  }

 private:
  bool augment(int e) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (!blocks_[b].contains(e) || seen_[b]) continue;
      seen_[b] = true;
      if (owner_[b] < 0 || augment(owner_[b])) {
        owner_[b] = e;
        return true;
      }
    }
    return false;
  }

  const std::vector<Subset>& blocks_;
  std::vector<int> owner_;
  std::vector<bool> seen_;
};

std::vector<std::string> prefixed_labels(std::string_view prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

// Adds a path of `len` edges from u to v, allocating fresh internal vertices.
void add_path(Multigraph& g, int u, int v, int len, std::string_view prefix) {
  int prev = u;
  for (int i = 1; i <= len; ++i) {
    const int next = (i == len) ? v : g.vertex_count++;
    g.add_edge(std::string(prefix) + std::to_string(i), prev, next);
    prev = next;
  }
}

Matroid circuit_matroid(std::vector<std::string> labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> table = make_table(n);
  for (std::uint32_t a = 0; a < table.size(); ++a) table[a] = std::min(Subset(a).size(), n - 1);
  return Matroid(std::move(labels), std::move(table));
}

}  // namespace

Matroid uniform(int r, int n) {
  require(n >= 0 && n <= kMaxElements, "uniform: n must be in [0, 16]");
  require(r >= 0 && r <= n, "uniform: need 0 <= r <= n");
  std::vector<int> table = make_table(n);
  for (std::uint32_t a = 0; a < table.size(); ++a) table[a] = std::min(Subset(a).size(), r);
  return Matroid(default_labels(n), std::move(table));
}

Matroid cycle_matroid(const Multigraph& g) {
  const int n = static_cast<int>(g.edges.size());
  require(n <= kMaxElements, "cycle_matroid: more than 16 edges");
  std::vector<std::string> labels;
  for (const auto& e : g.edges) {
    require(e.u >= 0 && e.u < g.vertex_count && e.v >= 0 && e.v < g.vertex_count,
            "cycle_matroid: edge '" + e.label + "' has an invalid endpoint");
    labels.push_back(e.label);
  }
  std::vector<int> table = make_table(n);
  for (std::uint32_t a = 1; a < table.size(); ++a) {
    UnionFind uf(g.vertex_count);
    int r = 0;
    for (int e : Subset(a)) {
      if (uf.unite(g.edges[e].u, g.edges[e].v)) ++r;
    }
    table[a] = r;
  }
  return Matroid(std::move(labels), std::move(table));
}

Matroid laminar_matroid(const LaminarCapacitySystem& s) {
  const int n = static_cast<int>(s.ground.size());
  require(n <= kMaxElements, "laminar_matroid: more than 16 elements");
  require(s.family.size() == s.capacities.size(), "laminar_matroid: one capacity per member required");
  const Subset ground = Subset::full(n);
  for (std::size_t i = 0; i < s.family.size(); ++i) {
    require(s.family[i].is_subset_of(ground), "laminar_matroid: member outside the ground set");
    require(s.capacities[i] >= 0, "laminar_matroid: negative capacity");
  }
  require(is_laminar_family(s.family), "laminar_matroid: family is not laminar");

  // Children before parents; equal members chain by index.
  std::vector<std::size_t> order(s.family.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s.family[a].size() < s.family[b].size();
  });
  const std::size_t m = order.size();
  std::vector<int> parent(m, -1);  // positions in `order`
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (s.family[order[i]].is_subset_of(s.family[order[j]])) {
        parent[i] = static_cast<int>(j);
        break;
      }
    }
  }

  std::vector<int> table = make_table(n);
  std::vector<int> best(m);
  std::vector<Subset> covered(m);
  for (std::uint32_t a = 0; a < table.size(); ++a) {
    const Subset x(a);
    std::fill(best.begin(), best.end(), 0);
    std::fill(covered.begin(), covered.end(), Subset{});
    int top = 0;
    Subset top_covered;
    for (std::size_t i = 0; i < m; ++i) {
      const Subset member = s.family[order[i]];
      const int free_part = ((x & member) - covered[i]).size();
      const int value = std::min(s.capacities[order[i]], best[i] + free_part);
      if (parent[i] >= 0) {
        best[parent[i]] += value;
        covered[parent[i]] |= member;
      } else {
        top += value;
        top_covered |= member;
      }
    }
    table[a] = top + (x - top_covered).size();
  }
  return Matroid(s.ground, std::move(table));
}

Matroid transversal_matroid(const NestedPresentation& p) {
  const int n = static_cast<int>(p.ground.size());
  require(n <= kMaxElements, "transversal_matroid: more than 16 elements");
  const Subset ground = Subset::full(n);
  for (std::size_t i = 0; i < p.chain.size(); ++i) {
    require(p.chain[i].is_subset_of(ground), "transversal_matroid: block outside the ground set");
    if (i > 0) {
      require(p.chain[i - 1].is_subset_of(p.chain[i]), "transversal_matroid: blocks do not form a chain");
    }
  }
  BlockMatcher matcher(p.chain, n);
  std::vector<int> table = make_table(n);
  for (std::uint32_t a = 0; a < table.size(); ++a) table[a] = matcher.max_matching(Subset(a));
  return Matroid(p.ground, std::move(table));
}

Matroid from_circuits(std::vector<std::string> labels, const SetFamily& circuit_family) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxElements) throw InvalidMatroid("from_circuits: more than 16 elements");
  const std::size_t count = std::size_t{1} << n;
  std::vector<char> dependent(count, 0);
  for (Subset c : circuit_family) {
    if (c.empty() || !c.is_subset_of(Subset::full(n))) {
      throw InvalidMatroid("from_circuits: circuit is empty or outside the ground set");
    }
    dependent[c.bits()] = 1;
  }
  std::vector<int> table(count);
  for (std::uint32_t a = 1; a < count; ++a) {
    int best = 0;
    for (int e : Subset(a)) {
      const std::uint32_t sub = a & ~(std::uint32_t{1} << e);
      if (dependent[sub]) dependent[a] = 1;
      best = std::max(best, table[sub]);
    }
    table[a] = dependent[a] ? best : Subset(a).size();
  }
  Matroid m(std::move(labels), std::move(table));
  SetFamily expected = circuit_family;
  std::sort(expected.begin(), expected.end(), size_then_mask_less);
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  if (circuits(m) != expected) {
    throw InvalidMatroid("from_circuits: family is not the circuit set of a matroid");
  }
  return m;
}

Matroid truncate(const Matroid& m, int t) {
  require(t >= 0 && t <= m.rank(), "truncate: target rank out of range");
  std::vector<int> table(m.rank_table().begin(), m.rank_table().end());
  for (int& r : table) r = std::min(r, t);
  return Matroid(m.labels(), std::move(table));
}

namespace {

std::vector<std::string> disjoint_union_labels(std::vector<std::string> base,
                                               const std::vector<std::string>& extra) {
  std::set<std::string> used(base.begin(), base.end());
  for (std::string l : extra) {
    while (used.count(l)) l += '\'';
    used.insert(l);
    base.push_back(std::move(l));
  }
  return base;
}

}  // namespace

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int na = a.size(), nb = b.size();
  require(na + nb <= kMaxElements, "direct_sum: more than 16 elements");
  const int n = na + nb;
  std::vector<int> table = make_table(n);
  const std::uint32_t low = Subset::full(na).bits();
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    table[x] = a.rank(Subset(x & low)) + b.rank(Subset(x >> na));
  }
  return Matroid(disjoint_union_labels(a.labels(), b.labels()), std::move(table));
}

Matroid parallel_connection(const Matroid& a, int pa, const Matroid& b, int pb) {
  require(pa >= 0 && pa < a.size() && pb >= 0 && pb < b.size(), "parallel_connection: basepoint out of range");
  require(!loops(a).contains(pa) && !coloops(a).contains(pa), "parallel_connection: basepoint of first matroid is a loop or coloop");
  require(!loops(b).contains(pb) && !coloops(b).contains(pb), "parallel_connection: basepoint of second matroid is a loop or coloop");
  require(a.size() + b.size() - 1 <= kMaxElements, "parallel_connection: more than 16 elements");

  std::vector<int> to_new(static_cast<std::size_t>(b.size()));
  std::vector<std::string> b_labels;
  int next = a.size();
  for (int j = 0; j < b.size(); ++j) {
    if (j == pb) {
      to_new[j] = pa;
    } else {
      to_new[j] = next++;
      b_labels.push_back(b.label(j));
    }
  }
  auto map_b = [&](Subset s) {
    Subset out;
    for (int j : s) out = out.with(to_new[j]);
    return out;
  };

  const SetFamily ca = circuits(a), cb = circuits(b);
  SetFamily family = ca;
  for (Subset c : cb) family.push_back(map_b(c));
  for (Subset c1 : ca) {
    if (!c1.contains(pa)) continue;
    for (Subset c2 : cb) {
      if (!c2.contains(pb)) continue;
      family.push_back(c1.without(pa) | map_b(c2.without(pb)));
    }
  }
  return from_circuits(disjoint_union_labels(a.labels(), b_labels), family);
}

Matroid relax_circuit_hyperplane(const Matroid& m, Subset x) {
  require(is_circuit(m, x) && is_flat(m, x) && m.rank(x) == m.rank() - 1,
          "relax_circuit_hyperplane: " + format_subset(m, x) + " is not a circuit-hyperplane");
  std::vector<int> table(m.rank_table().begin(), m.rank_table().end());
  table[x.bits()] = x.size();
  return Matroid(m.labels(), std::move(table));
}

// ---------------------------------------------------------------------------
// Cyclic flats
// ---------------------------------------------------------------------------

std::string_view to_string(CyclicFlatAxiom axiom) {
  switch (axiom) {
    case CyclicFlatAxiom::kZ0: return "Z0";
    case CyclicFlatAxiom::kZ1: return "Z1";
    case CyclicFlatAxiom::kZ2: return "Z2";
    case CyclicFlatAxiom::kZ3: return "Z3";
  }
  return "?";
}

CyclicFlatError::CyclicFlatError(CyclicFlatViolation v)
    : std::invalid_argument("cyclic-flat family violates " + std::string(to_string(v.axiom)) +
                            (v.detail.empty() ? "" : ": " + v.detail)),
      violation_(std::move(v)) {}

namespace {

// Greatest member contained in `bound`, if one contains all the others.
std::optional<std::size_t> greatest_below(const std::vector<RankedSet>& e, Subset bound) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i].set.is_subset_of(bound)) continue;
    if (!best || e[*best].set.is_subset_of(e[i].set)) best = i;
  }
  if (!best) return std::nullopt;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].set.is_subset_of(bound) && !e[i].set.is_subset_of(e[*best].set)) return std::nullopt;
  }
  return best;
}

std::optional<std::size_t> least_above(const std::vector<RankedSet>& e, Subset bound) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!bound.is_subset_of(e[i].set)) continue;
    if (!best || e[i].set.is_subset_of(e[*best].set)) best = i;
  }
  if (!best) return std::nullopt;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (bound.is_subset_of(e[i].set) && !e[*best].set.is_subset_of(e[i].set)) return std::nullopt;
  }
  return best;
}

std::optional<CyclicFlatViolation> check_z0(const CyclicFlatFamily& z) {
  const auto& e = z.entries;
  const Subset ground = Subset::full(static_cast<int>(z.ground.size()));
  if (e.empty()) return CyclicFlatViolation{CyclicFlatAxiom::kZ0, {}, {}, "empty family"};
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i].set.is_subset_of(ground)) {
      return CyclicFlatViolation{CyclicFlatAxiom::kZ0, e[i].set, e[i].set, "member outside the ground set"};
    }
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i].set == e[j].set) {
        return CyclicFlatViolation{CyclicFlatAxiom::kZ0, e[i].set, e[j].set, "duplicate member"};
      }
    }
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (!greatest_below(e, e[i].set & e[j].set)) {
        return CyclicFlatViolation{CyclicFlatAxiom::kZ0, e[i].set, e[j].set, "no meet"};
      }
      if (!least_above(e, e[i].set | e[j].set)) {
        return CyclicFlatViolation{CyclicFlatAxiom::kZ0, e[i].set, e[j].set, "no join"};
      }
    }
  }
  return std::nullopt;
}

void collect_z3(const CyclicFlatFamily& z, bool first_only, std::vector<CyclicFlatViolation>& out) {
  const auto& e = z.entries;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const std::size_t meet = *greatest_below(e, e[i].set & e[j].set);
      const std::size_t join = *least_above(e, e[i].set | e[j].set);
      const int lhs = e[i].rank + e[j].rank;
      const int rhs = e[join].rank + e[meet].rank + ((e[i].set & e[j].set) - e[meet].set).size();
      if (lhs < rhs) {
        out.push_back({CyclicFlatAxiom::kZ3, e[i].set, e[j].set,
                       std::to_string(lhs) + " < " + std::to_string(rhs)});
        if (first_only) return;
      }
    }
  }
}

}  // namespace

std::optional<CyclicFlatViolation> validate_cyclic_flats(const CyclicFlatFamily& z) {
  if (z.ground.size() > static_cast<std::size_t>(kMaxElements)) {
    return CyclicFlatViolation{CyclicFlatAxiom::kZ0, {}, {}, "ground set exceeds 16 elements"};
  }
  if (auto v = check_z0(z)) return v;
  const auto& e = z.entries;

  const Subset all_meet = [&] {
    Subset s = Subset::full(static_cast<int>(z.ground.size()));
    for (const auto& x : e) s &= x.set;
    return s;
  }();
  const std::size_t bottom = *greatest_below(e, all_meet);
  if (e[bottom].rank != 0) {
    return CyclicFlatViolation{CyclicFlatAxiom::kZ1, e[bottom].set, e[bottom].set,
                               "least member has rank " + std::to_string(e[bottom].rank)};
  }

  for (const auto& x : e) {
    for (const auto& y : e) {
      if (!x.set.is_proper_subset_of(y.set)) continue;
      const int gap = y.rank - x.rank;
      if (gap <= 0 || gap >= (y.set - x.set).size()) {
        return CyclicFlatViolation{CyclicFlatAxiom::kZ2, x.set, y.set,
                                   "rank gap " + std::to_string(gap) + " for " +
                                       std::to_string((y.set - x.set).size()) + " new elements"};
      }
    }
  }

  std::vector<CyclicFlatViolation> z3;
  collect_z3(z, true, z3);
  if (!z3.empty()) return z3.front();
  return std::nullopt;
}

std::vector<CyclicFlatViolation> z3_violations(const CyclicFlatFamily& z) {
  std::vector<CyclicFlatViolation> out;
  if (check_z0(z)) return out;
  collect_z3(z, false, out);
  return out;
}

Matroid from_cyclic_flats(const CyclicFlatFamily& z) {
  if (auto v = validate_cyclic_flats(z)) throw CyclicFlatError(*v);
  const int n = static_cast<int>(z.ground.size());
  std::vector<int> table = make_table(n);
  for (std::uint32_t a = 0; a < table.size(); ++a) {
    int best = n;
    for (const auto& entry : z.entries) {
      best = std::min(best, entry.rank + (Subset(a) - entry.set).size());
    }
    table[a] = best;
  }
  Matroid m(z.ground, std::move(table));

  std::vector<RankedSet> expected = z.entries;
  std::sort(expected.begin(), expected.end(),
            [](const RankedSet& x, const RankedSet& y) { return size_then_mask_less(x.set, y.set); });
  if (cyclic_flats(m) != expected) {
    throw std::logic_error("from_cyclic_flats: synthesized matroid does not reproduce the family");
  }
  return m;
}

SetFamily circuits_from_cyclic_flats(const CyclicFlatFamily& z) {
  if (auto v = validate_cyclic_flats(z)) throw CyclicFlatError(*v);
  const int n = static_cast<int>(z.ground.size());
  const std::size_t count = std::size_t{1} << n;
  std::vector<char> candidate(count, 0), holds_candidate(count, 0);
  for (std::uint32_t a = 0; a < count; ++a) {
    const Subset s(a);
    for (const auto& entry : z.entries) {
      if (s.size() == entry.rank + 1 && s.is_subset_of(entry.set)) {
        candidate[a] = 1;
        break;
      }
    }
  }
  SetFamily out;
  for (std::uint32_t a = 0; a < count; ++a) {
    bool below = false;
    for (int e : Subset(a)) {
      if (holds_candidate[a & ~(std::uint32_t{1} << e)]) {
        below = true;
        break;
      }
    }
    holds_candidate[a] = below || candidate[a];
    if (candidate[a] && !below) out.push_back(Subset(a));
  }
  std::sort(out.begin(), out.end(), size_then_mask_less);
  return out;
}

CyclicFlatFamily cyclic_flat_family(const Matroid& m) {
  return CyclicFlatFamily{m.labels(), cyclic_flats(m)};
}

// ---------------------------------------------------------------------------
// Graphs and named matroids
// ---------------------------------------------------------------------------

Multigraph theta_graph(int p_len, int x1_len, int x2_len) {
  Multigraph g;
  g.vertex_count = 2;
  add_path(g, 0, 1, p_len, "p");
  add_path(g, 0, 1, x1_len, "x");
  add_path(g, 0, 1, x2_len, "y");
  return g;
}

Multigraph complete_graph(int v) {
  Multigraph g;
  g.vertex_count = v;
  int next = 0;
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) g.add_edge(default_labels(16)[next++], i, j);
  }
  return g;
}

Multigraph complete_bipartite_graph(int a, int b) {
  Multigraph g;
  g.vertex_count = a + b;
  int next = 0;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(default_labels(16)[next++], i, a + j);
  }
  return g;
}

std::string_view to_string(NamedFamily f) {
  switch (f) {
    case NamedFamily::kMn: return "Mn";
    case NamedFamily::kNn: return "Nn";
    case NamedFamily::kPn: return "Pn";
    case NamedFamily::kMK23: return "MK23";
    case NamedFamily::kMK23Minus: return "MK23minus";
    case NamedFamily::kMK4: return "MK4";
    case NamedFamily::kF7: return "F7";
    case NamedFamily::kF7Star: return "F7star";
    case NamedFamily::kMStarK33: return "MstarK33";
    case NamedFamily::kWheel4RimDel: return "Wheel4rimdel";
    case NamedFamily::kNotkExample: return "NotkExample";
    case NamedFamily::kSec1PCExample: return "Sec1PCExample";
  }
  return "?";
}

std::optional<NamedFamily> named_family_from_string(std::string_view id) {
  for (auto f : {NamedFamily::kMn, NamedFamily::kNn, NamedFamily::kPn, NamedFamily::kMK23,
                 NamedFamily::kMK23Minus, NamedFamily::kMK4, NamedFamily::kF7, NamedFamily::kF7Star,
                 NamedFamily::kMStarK33, NamedFamily::kWheel4RimDel, NamedFamily::kNotkExample,
                 NamedFamily::kSec1PCExample}) {
    if (to_string(f) == id) return f;
  }
  return std::nullopt;
}

namespace {

int need(const std::optional<int>& v, const char* what) {
  require(v.has_value(), std::string("named_matroid: parameter ") + what + " is required");
  return *v;
}

// Size of an in-range instance; throws for out-of-range parameters.
int checked_size(NamedFamily family, const NamedParams& p) {
  switch (family) {
    case NamedFamily::kMn: {
      const int n = need(p.n, "n"), k = need(p.k, "k");
      require(k >= 0 && n >= k + 2, "named_matroid: Mn needs k >= 0 and n >= k + 2");
      return 2 * n - k;
    }
    case NamedFamily::kNn: {
      const int n = need(p.n, "n"), k = need(p.k, "k");
      require(k >= 2 && n >= k + 3, "named_matroid: Nn needs n >= k + 3 >= 5");
      return 2 * n - k;
    }
    case NamedFamily::kPn: {
      const int n = need(p.n, "n"), k = need(p.k, "k");
      require(k >= 2 && n >= k + 2, "named_matroid: Pn needs n >= k + 2 >= 4");
      return 2 * n - k + 1;
    }
    case NamedFamily::kMK23: return 6;
    case NamedFamily::kMK23Minus: return 6;
    case NamedFamily::kMK4: return 6;
    case NamedFamily::kF7: return 7;
    case NamedFamily::kF7Star: return 7;
    case NamedFamily::kMStarK33: return 9;
    case NamedFamily::kWheel4RimDel: return 7;
    case NamedFamily::kNotkExample: {
      const int k = need(p.k, "k");
      require(k >= 4, "named_matroid: NotkExample needs k >= 4");
      return 3 * (k - 1) + 1;
    }
    case NamedFamily::kSec1PCExample: {
      const int k = need(p.k, "k");
      require(k >= 2, "named_matroid: Sec1PCExample needs k >= 2");
      return k + 5;
    }
  }
  throw std::invalid_argument("named_matroid: unknown family");
}

Matroid build_mn(int n, int k) {
  if (k == 0) {
    // Two n-circuits, direct sum, truncated to rank n.
    Matroid x = circuit_matroid(prefixed_labels("x", n));
    Matroid y = circuit_matroid(prefixed_labels("y", n));
    return truncate(direct_sum(x, y), n);
  }
  return truncate(cycle_matroid(theta_graph(k, n - k, n - k)), n);
}

// A cycle c1..c_len with extra paths closing cycles through c1 and c2.
Matroid build_circuit_with_two_ears(int center_len, int ear_len, int truncate_to) {
  Multigraph g;
  g.vertex_count = center_len;
  for (int i = 0; i < center_len; ++i) {
    g.add_edge("c" + std::to_string(i + 1), i, (i + 1) % center_len);
  }
  add_path(g, 0, 1, ear_len, "u");
  add_path(g, 1, 2 % center_len, ear_len, "w");
  return truncate(cycle_matroid(g), truncate_to);
}

Matroid build_fano() {
  const int lines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  SetFamily family;
  for (const auto& line : lines) {
    Subset s;
    for (int e : line) s = s.with(e);
    family.push_back(s);
    family.push_back(Subset::full(7) - s);
  }
  return from_circuits(prefixed_labels("", 7), family);
}

Matroid build_wheel4_rim_deleted() {
  Multigraph g;
  g.vertex_count = 5;  // hub 0, rim 1..4
  for (int i = 1; i <= 4; ++i) g.add_edge("s" + std::to_string(i), 0, i);
  for (int i = 1; i <= 3; ++i) g.add_edge("r" + std::to_string(i), i, i + 1);
  return cycle_matroid(g);
}

CyclicFlatFamily notk_family(int k) {
  std::vector<std::string> labels;
  for (const char* p : {"a", "b", "c"}) {
    for (const auto& l : prefixed_labels(p, k - 1)) labels.push_back(l);
  }
  labels.push_back("e");
  const int m = k - 1;
  const Subset a = Subset::full(m), b = Subset(a.bits() << m), c = Subset(a.bits() << (2 * m));
  const int e = 3 * m;
  const Subset d = Subset::single(e).with(0).with(m).with(2 * m);
  const Subset ca = a | c, cb = b | c;
  CyclicFlatFamily z{labels,
                     {{Subset{}, 0},
                      {c ^ d, k},
                      {a ^ d, k},
                      {b ^ d, k},
                      {ca, 2 * k - 3},
                      {cb, 2 * k - 3},
                      {ca | d, 2 * k - 2},
                      {cb | d, 2 * k - 2},
                      {Subset::full(3 * m + 1), 2 * k - 1}}};
  return z;
}

Matroid build_notk(int k) { return from_cyclic_flats(notk_family(k)); }

Matroid build_sec1_example(int k) {
  Matroid circuit = circuit_matroid(prefixed_labels("c", k + 1));
  Matroid t1 = circuit_matroid({"p", "u1", "u2"});
  Matroid t2 = circuit_matroid({"p", "w1", "w2"});
  Matroid once = parallel_connection(circuit, 0, t1, 0);
  return parallel_connection(once, 1, t2, 0);
}

}  // namespace

CyclicFlatFamily notk_cyclic_flats(int k) {
  if (k < 3 || 3 * (k - 1) + 1 > kMaxElements) throw std::invalid_argument("notk_cyclic_flats: k out of range");
  return notk_family(k);
}

int named_matroid_size(NamedFamily family, NamedParams params) { return checked_size(family, params); }

Matroid named_matroid(NamedFamily family, NamedParams p) {
  const int size = checked_size(family, p);
  require(size <= kMaxElements, "named_matroid: instance has " + std::to_string(size) + " elements; at most 16 supported");
  switch (family) {
    case NamedFamily::kMn: return build_mn(*p.n, *p.k);
    case NamedFamily::kNn: return build_circuit_with_two_ears(*p.k + 2, *p.n - *p.k - 1, *p.n);
    case NamedFamily::kPn: return build_circuit_with_two_ears(*p.k + 1, *p.n - *p.k, *p.n);
    case NamedFamily::kMK23: return cycle_matroid(complete_bipartite_graph(2, 3));
    case NamedFamily::kMK23Minus: {
      Matroid m = cycle_matroid(complete_bipartite_graph(2, 3));
      for (Subset c : circuits(m)) {
        if (is_flat(m, c) && m.rank(c) == m.rank() - 1) return relax_circuit_hyperplane(m, c);
      }
      throw std::logic_error("M(K23) has no circuit-hyperplane");
    }
    case NamedFamily::kMK4: return cycle_matroid(complete_graph(4));
    case NamedFamily::kF7: return build_fano();
    case NamedFamily::kF7Star: return dual(build_fano());
    case NamedFamily::kMStarK33: return dual(cycle_matroid(complete_bipartite_graph(3, 3)));
    case NamedFamily::kWheel4RimDel: return build_wheel4_rim_deleted();
    case NamedFamily::kNotkExample: return build_notk(*p.k);
    case NamedFamily::kSec1PCExample: return build_sec1_example(*p.k);
  }
  throw std::invalid_argument("named_matroid: unknown family");
}

std::vector<CatalogEntry> catalog(int max_elements) {
  std::vector<CatalogEntry> out;
  auto add = [&](NamedFamily f, NamedParams p, std::string name) {
    if (named_matroid_size(f, p) <= std::min(max_elements, kMaxElements)) {
      out.push_back({std::move(name), f, p});
    }
  };
  for (auto f : {NamedFamily::kMK23, NamedFamily::kMK23Minus, NamedFamily::kMK4, NamedFamily::kF7,
                 NamedFamily::kF7Star, NamedFamily::kMStarK33, NamedFamily::kWheel4RimDel}) {
    add(f, {}, std::string(to_string(f)));
  }
  auto tag = [](const char* fam, int n, int k) {
    return std::string(fam) + std::to_string(n) + "(" + std::to_string(k) + ")";
  };
  for (int k = 0; k <= kMaxElements; ++k) {
    for (int n = k + 2; 2 * n - k <= kMaxElements; ++n) add(NamedFamily::kMn, {n, k}, tag("M", n, k));
  }
  for (int k = 2; k <= kMaxElements; ++k) {
    for (int n = k + 3; 2 * n - k <= kMaxElements; ++n) add(NamedFamily::kNn, {n, k}, tag("N", n, k));
  }
  for (int k = 2; k <= kMaxElements; ++k) {
    for (int n = k + 2; 2 * n - k + 1 <= kMaxElements; ++n) add(NamedFamily::kPn, {n, k}, tag("P", n, k));
  }
  // NotkExample is left out: its cyclic-flat table is rejected (Z3).
  for (int k = 2; k + 5 <= kMaxElements; ++k) {
    add(NamedFamily::kSec1PCExample, {std::nullopt, k}, "Sec1PCExample(" + std::to_string(k) + ")");
  }
  return out;
}

}  // namespace lamina
