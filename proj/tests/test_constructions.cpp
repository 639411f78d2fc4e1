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

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "lamina/constructions.hpp"
#include "lamina/io.hpp"
#include "lamina/laminar.hpp"
#include "lamina/matroid.hpp"
#include "lamina/minors.hpp"
#include "oracles.hpp"

namespace {

using namespace lamina;

Matroid triangle(const std::string& prefix) {
  Multigraph g;
  g.vertex_count = 3;
  g.add_edge(prefix + "1", 0, 1);
  g.add_edge(prefix + "2", 1, 2);
  g.add_edge(prefix + "3", 2, 0);
  return cycle_matroid(g);
}

}  // namespace

TEST_CASE("uniform") {
  CHECK(circuits(uniform(2, 4)).size() == 4);
  CHECK(circuits(uniform(3, 3)).empty());
  CHECK(oracle::is_uniform(uniform(5, 7), 5));
  CHECK_THROWS_AS(uniform(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(uniform(-1, 2), std::invalid_argument);
}

TEST_CASE("cycle matroids agree with forest counting") {
  CHECK(oracle::is_uniform(triangle("t"), 2));
  Multigraph two;
  two.vertex_count = 2;
  two.add_edge("a", 0, 1);
  two.add_edge("b", 0, 1);
  CHECK(oracle::is_uniform(cycle_matroid(two), 1));

  const Matroid k23 = cycle_matroid(complete_bipartite_graph(2, 3));
  CHECK(k23.rank() == 4);
  CHECK(circuits(k23).size() == 3);

  gen::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Multigraph g = gen::multigraph(rng, 1 + gen::below(rng, 9), 1 + gen::below(rng, 6));
    const Matroid m = cycle_matroid(g);
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << m.size()); ++x) {
      REQUIRE(m.rank(Subset(x)) == oracle::forest_rank(g, x));
    }
  }
}

TEST_CASE("laminar matroids agree with capacity enumeration") {
  LaminarCapacitySystem whole{default_labels(5), {Subset::full(5)}, {3}};
  CHECK(oracle::is_uniform(laminar_matroid(whole), 3));
  CHECK(oracle::is_uniform(laminar_matroid({default_labels(4), {}, {}}), 4));

  LaminarCapacitySystem s{default_labels(5), {Subset(0b00011), Subset(0b01111)}, {1, 2}};
  const Matroid m = laminar_matroid(s);
  CHECK(m.rank() == 3);
  const SetFamily cs = circuits(m);
  CHECK(std::find(cs.begin(), cs.end(), Subset(0b00011)) != cs.end());
  for (Subset c : cs) CHECK((c.is_subset_of(Subset(0b01111))));  // e is a coloop
  for (std::uint32_t x = 0; x < 32; ++x) CHECK(m.rank(Subset(x)) == oracle::laminar_rank(s, x));

  CHECK_THROWS_AS(laminar_matroid({default_labels(3), {Subset(0b011), Subset(0b110)}, {1, 1}}), std::invalid_argument);

  gen::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + gen::below(rng, 12);
    const LaminarCapacitySystem sys = gen::laminar_system(rng, n);
    REQUIRE(is_laminar_family(sys.family));
    const Matroid lm = laminar_matroid(sys);
    for (int probe = 0; probe < 64; ++probe) {
      const std::uint32_t x = gen::subset(rng, n).bits();
      REQUIRE(lm.rank(Subset(x)) == oracle::laminar_rank(sys, x));
    }
  }
}

TEST_CASE("transversal matroids agree with matching enumeration") {
  CHECK(oracle::is_uniform(transversal_matroid({default_labels(4), {Subset::full(4)}}), 1));
  std::vector<Subset> chain;
  for (int i = 1; i <= 4; ++i) chain.push_back(Subset::full(i));
  CHECK(oracle::is_uniform(transversal_matroid({default_labels(4), chain}), 4));

  const NestedPresentation p{default_labels(5), {Subset(0b00011), Subset(0b00111), Subset(0b11111)}};
  const Matroid m = transversal_matroid(p);
  for (std::uint32_t x = 0; x < 32; ++x) CHECK(m.rank(Subset(x)) == oracle::transversal_rank(p.chain, x));
  CHECK_THROWS_AS(transversal_matroid({default_labels(3), {Subset(0b011), Subset(0b110)}}), std::invalid_argument);

  gen::Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + gen::below(rng, 10);
    const NestedPresentation q = gen::nested_presentation(rng, n);
    const Matroid t = transversal_matroid(q);
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
      REQUIRE(t.rank(Subset(x)) == oracle::transversal_rank(q.chain, x));
    }
  }
}

TEST_CASE("truncation") {
  const Matroid k23 = cycle_matroid(complete_bipartite_graph(2, 3));
  CHECK(truncate(k23, k23.rank()) == k23);
  CHECK(truncate(uniform(3, 4), 2) == uniform(2, 4));
  CHECK_THROWS_AS(truncate(uniform(3, 4), 5), std::invalid_argument);

  // Two 4-circuits, summed and truncated to rank 4.
  const Matroid c4 = uniform(3, 4);
  const Matroid m40 = truncate(direct_sum(c4, c4), 4);
  CHECK(is_isomorphic(m40, named_matroid(NamedFamily::kMn, {4, 0})));
}

TEST_CASE("direct sum") {
  const Matroid p = direct_sum(uniform(0, 1), uniform(2, 2));
  CHECK(p.size() == 3);
  CHECK(p.rank() == 2);
  CHECK_FALSE(is_paving(p));
  CHECK(direct_sum(uniform(2, 4), Matroid()) == uniform(2, 4));
  const Matroid two = direct_sum(uniform(1, 2), uniform(1, 2));
  CHECK(two.rank() == 2);
  CHECK(circuits(two) == SetFamily{Subset(0b0011), Subset(0b1100)});
  CHECK(two.labels() == std::vector<std::string>{"a", "b", "a'", "b'"});
}

TEST_CASE("parallel connection") {
  const Matroid glued = parallel_connection(triangle("x"), 0, triangle("y"), 0);
  CHECK(glued.size() == 5);
  CHECK(glued.rank() == 3);
  Multigraph g;  // two triangles sharing edge 0-1
  g.vertex_count = 4;
  g.add_edge("s", 0, 1);
  g.add_edge("a", 1, 2);
  g.add_edge("b", 2, 0);
  g.add_edge("c", 1, 3);
  g.add_edge("d", 3, 0);
  CHECK(is_isomorphic(glued, cycle_matroid(g)));
  CHECK(oracle::isomorphic(glued, cycle_matroid(g)));

  const Matroid k23 = cycle_matroid(complete_bipartite_graph(2, 3));
  const Matroid ext = parallel_connection(k23, 2, uniform(1, 2), 0);
  CHECK(ext.size() == 7);
  CHECK(ext.rank() == 4);
  CHECK(ext.rank(Subset::single(2).with(6)) == 1);
  CHECK(delete_elements(ext, Subset::single(6)) == k23);

  const Matroid sec = named_matroid(NamedFamily::kSec1PCExample, {std::nullopt, 2});
  CHECK(sec.size() == 7);
  CHECK(sec.rank() == 4);
  CHECK(is_k_laminar(sec, 2));
  CHECK_FALSE(is_k_closure_laminar(sec, 2));
}

TEST_CASE("relaxing a circuit-hyperplane") {
  const Matroid k23 = cycle_matroid(complete_bipartite_graph(2, 3));
  const Matroid relaxed = relax_circuit_hyperplane(k23, circuits(k23).front());
  int nonspanning = 0;
  for (Subset c : circuits(relaxed)) nonspanning += relaxed.rank(c) < relaxed.rank();
  CHECK(nonspanning == 2);
  CHECK(is_isomorphic(relaxed, named_matroid(NamedFamily::kMK23Minus)));

  const Matroid k4 = cycle_matroid(complete_graph(4));
  std::vector<Matroid> relaxations;
  for (Subset c : circuits(k4)) {
    if (c.size() == 3) relaxations.push_back(relax_circuit_hyperplane(k4, c));
  }
  REQUIRE(relaxations.size() == 4);
  for (const Matroid& r : relaxations) CHECK(oracle::isomorphic(r, relaxations.front()));

  const Matroid u24 = uniform(2, 4);
  CHECK_THROWS_AS(relax_circuit_hyperplane(u24, Subset(0b0111)), std::invalid_argument);
}

TEST_CASE("cyclic-flat synthesis") {
  CHECK(from_cyclic_flats({default_labels(5), {{Subset(), 0}, {Subset::full(5), 3}}}) == uniform(3, 5));
  CHECK(from_cyclic_flats({default_labels(4), {{Subset(), 0}}}) == uniform(4, 4));
  const CyclicFlatFamily u24{default_labels(4), {{Subset(), 0}, {Subset::full(4), 2}}};
  CHECK(circuits_from_cyclic_flats(u24) == circuits(uniform(2, 4)));
  CHECK(circuits_from_cyclic_flats({default_labels(3), {{Subset(), 0}}}).empty());

  // Z1: bottom member of positive rank.
  auto v = validate_cyclic_flats({default_labels(3), {{Subset(), 1}, {Subset::full(3), 2}}});
  REQUIRE(v);
  CHECK(v->axiom == CyclicFlatAxiom::kZ1);
  // Z2: rank gap as large as the size gap.
  v = validate_cyclic_flats({default_labels(3), {{Subset(), 0}, {Subset::full(3), 3}}});
  REQUIRE(v);
  CHECK(v->axiom == CyclicFlatAxiom::kZ2);
  // Z0: two incomparable members with no join.
  v = validate_cyclic_flats({default_labels(4), {{Subset(), 0}, {Subset(0b0011), 1}, {Subset(0b1100), 1}}});
  REQUIRE(v);
  CHECK(v->axiom == CyclicFlatAxiom::kZ0);
  CHECK_THROWS_AS(from_cyclic_flats({default_labels(3), {{Subset(), 0}, {Subset::full(3), 3}}}), CyclicFlatError);
}

TEST_CASE("the printed k-closure-laminar table is not a cyclic-flat lattice") {
  for (int k : {4, 5}) {
    const CyclicFlatFamily z = notk_cyclic_flats(k);
    CHECK(z.ground.size() == static_cast<std::size_t>(3 * (k - 1) + 1));
    REQUIRE(z.entries.size() == 9);
    std::vector<int> ranks;
    for (const RankedSet& r : z.entries) ranks.push_back(r.rank);
    std::sort(ranks.begin(), ranks.end());
    CHECK(ranks == std::vector<int>{0, k, k, k, 2 * k - 3, 2 * k - 3, 2 * k - 2, 2 * k - 2, 2 * k - 1});
    const auto v = validate_cyclic_flats(z);
    REQUIRE(v);
    CHECK(v->axiom == CyclicFlatAxiom::kZ3);
    CHECK_FALSE(z3_violations(z).empty());
    CHECK_THROWS_AS(named_matroid(NamedFamily::kNotkExample, {std::nullopt, k}), CyclicFlatError);
  }
  const auto v3 = validate_cyclic_flats(notk_cyclic_flats(3));
  REQUIRE(v3);
  CHECK(v3->axiom == CyclicFlatAxiom::kZ2);
  CHECK_THROWS_AS(notk_cyclic_flats(2), std::invalid_argument);
  CHECK_THROWS_AS(notk_cyclic_flats(7), std::invalid_argument);
}

TEST_CASE("named matroids") {
  CHECK(is_isomorphic(named_matroid(NamedFamily::kMn, {4, 2}), named_matroid(NamedFamily::kMK23)));
  CHECK(oracle::isomorphic(named_matroid(NamedFamily::kMn, {4, 2}), named_matroid(NamedFamily::kMK23)));
  CHECK(oracle::isomorphic(named_matroid(NamedFamily::kPn, {4, 2}), named_matroid(NamedFamily::kWheel4RimDel)));

  const Matroid f7 = named_matroid(NamedFamily::kF7);
  const Matroid f7s = named_matroid(NamedFamily::kF7Star);
  CHECK_FALSE(is_isomorphic(f7, f7s));
  CHECK(circuits(f7).size() == 14);
  for (int e = 0; e < 7; ++e) {
    CHECK(is_isomorphic(delete_elements(f7s, Subset::single(e)), named_matroid(NamedFamily::kMK23)));
  }

  const Matroid k33 = named_matroid(NamedFamily::kMStarK33);
  CHECK(k33.size() == 9);
  CHECK(k33.rank() == 4);

  CHECK_THROWS_AS(named_matroid(NamedFamily::kMn, {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(named_matroid(NamedFamily::kMn, {}), std::invalid_argument);
  CHECK_THROWS_AS(named_matroid(NamedFamily::kMn, {12, 2}), std::invalid_argument);
  CHECK(named_family_from_string("F7star") == NamedFamily::kF7Star);
  CHECK_FALSE(named_family_from_string("F8").has_value());
}

TEST_CASE("theta graphs have three cycles before truncation") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      const Matroid m = cycle_matroid(theta_graph(k, n - k, n - k));
      CHECK(circuits(m).size() == 3);
      CHECK(oracle::circuits(m).size() == 3);
    }
  }
}

TEST_CASE("P_n(k) is a contraction of N_{n+1}(k)") {
  for (const CatalogEntry& c : catalog(16)) {
    if (c.family != NamedFamily::kPn) continue;
    const NamedParams up{*c.params.n + 1, c.params.k};
    if (named_matroid_size(NamedFamily::kNn, up) > 16) continue;
    const Matroid n = named_matroid(NamedFamily::kNn, up);
    const Matroid p = named_matroid(NamedFamily::kPn, c.params);
    INFO(c.name);
    CHECK(is_isomorphic(contract(n, n.subset_of({kNnContractionElement})), p));
  }
}

TEST_CASE("property: cyclic flats round trip") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Matroid m = gen::matroid(rng, 9);
    const CyclicFlatFamily z = cyclic_flat_family(m);
    const Matroid back = from_cyclic_flats(z);
    REQUIRE(back == m);
    CHECK(circuits_from_cyclic_flats(z) == circuits(back));
  }
}
