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
#include <set>

#include "doctest.h"
#include "lamina/checks.hpp"
#include "lamina/constructions.hpp"
#include "lamina/corpus.hpp"
#include "lamina/graphs.hpp"
#include "lamina/io.hpp"
#include "lamina/laminar.hpp"
#include "lamina/matroid.hpp"

namespace {

using namespace lamina;

}  // namespace

TEST_CASE("corpus with no samples is the catalog slice") {
  const auto corpus = generate_corpus({1, 0, 8, {}, true});
  std::size_t expected = 0;
  for (const CatalogEntry& c : catalog(8)) expected += 1 + 2 * named_matroid_size(c.family, c.params);
  CHECK(corpus.size() == expected);
  for (const CorpusEntry& e : corpus) CHECK(e.source == CorpusSource::kCatalog);
  CHECK(generate_corpus({1, 0, 8, {}, false}).empty());
}

TEST_CASE("corpus is deterministic and valid") {
  CorpusSpec spec;
  spec.seed = 99;
  spec.count = 300;
  const auto a = generate_corpus(spec);
  const auto b = generate_corpus(spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].origin == b[i].origin);
    CHECK(serialize_matroid(a[i].matroid) == serialize_matroid(b[i].matroid));
  }
  std::set<CorpusSource> seen;
  for (const CorpusEntry& e : a) {
    seen.insert(e.source);
    CHECK(e.matroid.size() <= 8);
    const auto& t = e.matroid.rank_table();
    CHECK_FALSE(validate_rank_axioms(std::vector<int>(t.begin(), t.end()), e.matroid.size()));
  }
  CHECK(seen.size() == 7);

  spec.seed = 100;
  const auto c = generate_corpus(spec);
  bool differs = false;
  for (std::size_t i = 0; i < a.size() && !differs; ++i) differs = a[i].origin != c[i].origin;
  CHECK(differs);
}

TEST_CASE("sparse paving samples are paving") {
  CorpusSpec spec;
  spec.count = 200;
  spec.include_catalog = false;
  spec.mix = {0, 0, 0, 1, 0};
  for (const CorpusEntry& e : generate_corpus(spec)) {
    CHECK(e.source == CorpusSource::kSparsePaving);
    CHECK(is_paving(e.matroid));
    CHECK(is_paving(dual(e.matroid)));
  }
  spec.mix = {0, 0, 0, 0, 0};
  CHECK_THROWS_AS(generate_corpus(spec), std::invalid_argument);
  spec.max_elements = 17;
  CHECK_THROWS_AS(generate_corpus(spec), std::invalid_argument);
}

TEST_CASE("seed helpers") {
  std::mt19937_64 rng(5);
  std::vector<int> hits(3);
  for (int i = 0; i < 3000; ++i) ++hits[uniform_below(rng, 3)];
  for (int h : hits) CHECK(h > 800);
  CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
  CHECK(derive_seed(1, "a") == derive_seed(1, "a"));
  CHECK(derive_seed(1, "a") != derive_seed(1, "b"));
  CHECK(derive_seed(1, "a") != derive_seed(2, "a"));
}

TEST_CASE("graph enumeration") {
  CHECK(all_simple_graphs(4).size() == 64);
  // Unlabelled graphs on 4 and 5 vertices.
  CHECK(nonisomorphic_simple_graphs(4).size() == 11);
  CHECK(nonisomorphic_simple_graphs(5).size() == 34);
  int two_connected = 0;
  for (const SimpleGraph& g : nonisomorphic_simple_graphs(5)) two_connected += is_two_connected(g);
  CHECK(two_connected == 10);

  SimpleGraph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(is_two_connected(c5));
  CHECK(is_one_chord_graph_shape(c5));
  c5.add_edge(0, 2);
  CHECK(is_one_chord_graph_shape(c5));
  c5.add_edge(0, 3);  // fan at 0 over the cycle edge 2-3
  CHECK_FALSE(is_one_chord_graph_shape(c5));
  CHECK(is_two_laminar_graph_shape(c5));

  SimpleGraph k4(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  }
  CHECK(is_two_laminar_graph_shape(k4));
  CHECK(cycle_matroid(k4.to_multigraph()).rank_table() == cycle_matroid(complete_graph(4)).rank_table());

  const auto samples = sample_two_connected(6, 20, 3);
  CHECK(samples.size() == 20);
  for (const SimpleGraph& g : samples) CHECK(is_two_connected(g));
  CHECK(samples.front().adj == sample_two_connected(6, 20, 3).front().adj);
}

TEST_CASE("check registry") {
  CHECK(check_ids().size() == 29);
  CHECK(is_check_registered("lem-mnk"));
  CHECK_FALSE(is_check_registered("nope"));
  CHECK_THROWS_AS(run_check("nope"), std::invalid_argument);
  CHECK(check_seed(1, "a") != check_seed(1, "b"));

  CheckOptions opts;
  opts.corpus_count = 200;
  for (const char* id : {"lem-mnk", "thm-pav1", "lem-nb", "sec1-pc-example", "lem-therest"}) {
    const CheckResult r = run_check(id, opts);
    INFO(id << ": " << r.summary);
    CHECK(r.status == CheckStatus::kPass);
    CHECK_FALSE(r.witness.has_value());
  }
}

TEST_CASE("failing checks carry replayable witnesses") {
  for (const char* id : {"thm-notk-k4", "thm-notk-k5"}) {
    const CheckResult r = run_check(id);
    REQUIRE(r.status == CheckStatus::kFail);
    REQUIRE(r.witness);
    REQUIRE_FALSE(r.witness->files.empty());
    try {
      parse_matroid(r.witness->files.front());
      FAIL("witness table should be rejected");
    } catch (const CyclicFlatError& e) {
      CHECK(e.violation().axiom == CyclicFlatAxiom::kZ3);
    }
  }
}

TEST_CASE("parallel runs match serial runs") {
  CheckOptions opts;
  opts.corpus_count = 150;
  const std::vector<std::string> ids{"prop-baby", "lem-klam-minor-closed", "thm-bdm-roundtrip", "thm-notk-k4"};
  const auto serial = run_checks(ids, opts, 1);
  const auto parallel = run_checks(ids, opts, 4);
  REQUIRE(serial.size() == ids.size());
  REQUIRE(parallel.size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    CHECK(serial[i].check_id == ids[i]);
    CHECK(parallel[i].check_id == ids[i]);
    CHECK(serial[i].status == parallel[i].status);
    CHECK(serial[i].summary == parallel[i].summary);
  }
}
