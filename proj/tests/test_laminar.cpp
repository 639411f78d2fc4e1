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

#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "lamina/constructions.hpp"
#include "lamina/laminar.hpp"
#include "lamina/matroid.hpp"
#include "lamina/minors.hpp"
#include "oracles.hpp"

namespace {

using namespace lamina;

Matroid k23() { return named_matroid(NamedFamily::kMK23); }
Matroid sec1(int k) { return named_matroid(NamedFamily::kSec1PCExample, {std::nullopt, k}); }

int nonspanning_circuits(const Matroid& m) {
  int count = 0;
  for (Subset c : circuits(m)) count += m.rank(c) < m.rank();
  return count;
}

}  // namespace

TEST_CASE("nested") {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) CHECK(is_nested(uniform(r, n)));
  }
  const ClassVerdict v = is_nested(k23());
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->kind == ClassWitness::Kind::kFlatPair);
  CHECK(v.witness->first.size() == 4);
  CHECK(v.witness->second.size() == 4);
  CHECK(witness_replays(k23(), v));

  gen::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    CHECK(is_nested(transversal_matroid(gen::nested_presentation(rng, 1 + gen::below(rng, 9)))));
  }
}

TEST_CASE("k-laminar") {
  const ClassVerdict v = is_k_laminar(k23(), 2);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->kind == ClassWitness::Kind::kCircuitPair);
  CHECK(witness_replays(k23(), v));
  CHECK(is_k_laminar(k23(), 3));
  CHECK_THROWS_AS(is_k_laminar(k23(), -1), std::invalid_argument);

  // Every matroid of rank at most k + 1 is k-laminar and k-closure-laminar.
  gen::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Matroid m = gen::matroid(rng, 8);
    const int k = std::max(0, m.rank() - 1);
    CHECK(is_k_laminar(m, k));
    CHECK(is_k_closure_laminar(m, k));
  }
}

TEST_CASE("k-closure-laminar") {
  const Matroid s = sec1(2);
  CHECK(is_k_laminar(s, 2));
  const ClassVerdict v = is_k_closure_laminar(s, 2);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->kind == ClassWitness::Kind::kFlatPair);
  REQUIRE(v.witness->independent_set);
  CHECK(v.witness->independent_set->size() == 2);
  CHECK(witness_replays(s, v));
  CHECK(is_k_closure_laminar(s, 3));

  // Vacuous above the rank.
  CHECK(is_k_closure_laminar(k23(), 5));
}

TEST_CASE("circuit form") {
  CHECK(is_k_closure_laminar_circuit_form(uniform(2, 4), 0));
  const ClassVerdict v = is_k_closure_laminar_circuit_form(sec1(2), 2);
  CHECK_FALSE(v.holds);
  CHECK(witness_replays(sec1(2), v));
}

TEST_CASE("laminar") {
  CHECK_FALSE(is_laminar(k23()));
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) CHECK(is_laminar(uniform(r, n)));
  }
  gen::Rng rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    CHECK(is_laminar(laminar_matroid(gen::laminar_system(rng, 1 + gen::below(rng, 9)))));
  }
}

TEST_CASE("minimal k") {
  CHECK(min_laminar_k(k23()) == 3);
  CHECK(min_closure_laminar_k(sec1(2)) == 3);
  CHECK(min_laminar_k(uniform(3, 6)) == 0);
  CHECK(min_closure_laminar_k(uniform(3, 6)) == 0);
}

TEST_CASE("paving") {
  CHECK(is_paving(uniform(2, 5)));
  CHECK_FALSE(is_paving(direct_sum(uniform(0, 1), uniform(2, 2))));
  CHECK(is_paving(named_matroid(NamedFamily::kMK4)));
}

TEST_CASE("property: predicates agree with brute force and with each other") {
  gen::Rng rng(23);
  for (int trial = 0; trial < 250; ++trial) {
    const Matroid m = gen::matroid(rng, 8);
    INFO("trial " << trial << " n=" << m.size() << " r=" << m.rank());
    const bool nested = is_nested(m).holds;
    CHECK(nested == oracle::k_closure_laminar(m, 0));
    CHECK(is_k_laminar(m, 0).holds == nested);
    CHECK(is_k_closure_laminar(m, 0).holds == nested);
    CHECK(is_k_closure_laminar(m, 1).holds == is_laminar(m).holds);
    bool prev_lam = false, prev_cl = false;
    for (int k = 0; k <= m.rank() + 1; ++k) {
      const ClassVerdict lam = is_k_laminar(m, k);
      const ClassVerdict cl = is_k_closure_laminar(m, k);
      CHECK(lam.holds == oracle::k_laminar(m, k));
      CHECK(cl.holds == oracle::k_closure_laminar(m, k));
      CHECK(is_k_closure_laminar_circuit_form(m, k).holds == cl.holds);
      CHECK(is_k_laminar(m, k, CircuitScope::kNonSpanning).holds == lam.holds);
      CHECK(is_k_closure_laminar_circuit_form(m, k, CircuitScope::kNonSpanning).holds == cl.holds);
      if (cl.holds) CHECK(lam.holds);
      if (prev_lam) CHECK(lam.holds);
      if (prev_cl) CHECK(cl.holds);
      if (nonspanning_circuits(m) <= 1) CHECK((lam.holds && cl.holds));
      if (is_paving(m)) CHECK(lam.holds == cl.holds);
      if (!lam.holds) CHECK(witness_replays(m, lam));
      if (!cl.holds) CHECK(witness_replays(m, cl));
      prev_lam = lam.holds;
      prev_cl = cl.holds;
    }
    CHECK(min_laminar_k(m) <= m.rank() + 1);
    CHECK(min_closure_laminar_k(m) >= min_laminar_k(m));
  }
}
