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
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lamina/matroid.hpp"

namespace lamina {

/// Relative weights of the random generators. Zero disables a generator.
struct GeneratorMix {
  int laminar = 1;
  int nested = 1;
  int graphic = 1;
  int sparse_paving = 1;
  int named_minor = 1;
};

struct CorpusSpec {
  std::uint64_t seed = 1;
  int count = 0;          // random samples on top of the catalog slice
  int max_elements = 8;   // <= 16
  GeneratorMix mix;
  bool include_catalog = true;
};

enum class CorpusSource {
  kCatalog,        // named instance or one of its single-element minors
  kLaminar,
  kNested,
  kGraphic,        // cycle matroid of a random multigraph
  kTruncatedGraphic,
  kSparsePaving,
  kNamedMinor,     // random minor of a named instance
};

std::string_view to_string(CorpusSource s);

struct CorpusEntry {
  std::string origin;  // e.g. "F7", "M5(2)\\a3", "laminar#17"
  CorpusSource source;
  Matroid matroid;
};

/// Catalog instances with at most max_elements elements and all their
/// single-element deletions and contractions, then `count` random samples
/// with 2..max_elements elements. Same spec, same output.
std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec);

/// Uniform integer in [0, bound) from the raw 64-bit stream. Kept local so
/// output does not depend on the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Mixes a seed with a string into an independent seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view salt);

}  // namespace lamina
