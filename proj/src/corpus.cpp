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

#include "lamina/corpus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lamina/constructions.hpp"
#include "lamina/minors.hpp"

namespace lamina {

std::string_view to_string(CorpusSource s) {
  switch (s) {
    case CorpusSource::kCatalog: return "catalog";
    case CorpusSource::kLaminar: return "laminar";
    case CorpusSource::kNested: return "nested";
    case CorpusSource::kGraphic: return "graphic";
    case CorpusSource::kTruncatedGraphic: return "truncated-graphic";
    case CorpusSource::kSparsePaving: return "sparse-paving";
    case CorpusSource::kNamedMinor: return "named-minor";
  }
  return "?";
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view salt) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char ch : salt) h = (h ^ ch) * 1099511628211ULL;
  std::uint64_t z = seed ^ h;  // splitmix64 finaliser
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Subset random_subset(Rng& rng, Subset of) {
  Subset out;
  for (int e : of) {
    if (rng() & 1) out = out.with(e);
  }
  return out;
}

std::vector<int> permutation(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[pick(rng, 0, i)]);
  return p;
}

// Grows a laminar family one member at a time: a new member inside some
// parent P is a union of P's current children plus some of P's free elements.
Matroid random_laminar(Rng& rng, int n) {
  const Subset ground = Subset::full(n);
  LaminarCapacitySystem sys{default_labels(n), {}, {}};
  const int members = pick(rng, 1, n);
  for (int attempt = 0; attempt < 4 * n && static_cast<int>(sys.family.size()) < members; ++attempt) {
    std::vector<Subset> parents{ground};
    for (Subset s : sys.family) parents.push_back(s);
    const Subset parent = parents[uniform_below(rng, parents.size())];
    Subset covered, built;
    for (Subset s : sys.family) {
      if (!s.is_proper_subset_of(parent)) continue;
      const bool maximal = std::none_of(sys.family.begin(), sys.family.end(), [&](Subset t) {
        return s.is_proper_subset_of(t) && t.is_proper_subset_of(parent);
      });
      if (!maximal) continue;
      covered |= s;
      if (rng() & 1) built |= s;
    }
    built |= random_subset(rng, parent - covered);
    if (built.empty() || std::find(sys.family.begin(), sys.family.end(), built) != sys.family.end()) continue;
    sys.family.push_back(built);
    sys.capacities.push_back(pick(rng, 0, built.size()));
  }
  return laminar_matroid(sys);
}

Matroid random_nested(Rng& rng, int n) {
  const std::vector<int> order = permutation(rng, n);
  const int blocks = pick(rng, 1, n);
  std::vector<int> lengths;
  for (int i = 0; i < blocks; ++i) lengths.push_back(pick(rng, 1, n));
  std::sort(lengths.begin(), lengths.end());
  NestedPresentation p{default_labels(n), {}};
  for (int len : lengths) {
    Subset s;
    for (int i = 0; i < len; ++i) s = s.with(order[i]);
    p.chain.push_back(s);
  }
  return transversal_matroid(p);
}

Matroid random_graphic(Rng& rng, int n) {
  Multigraph g;
  g.vertex_count = pick(rng, 2, std::min(n + 1, 8));
  const auto labels = default_labels(n);
  for (int i = 0; i < n; ++i) {
    int u = pick(rng, 0, g.vertex_count - 1), v = pick(rng, 0, g.vertex_count - 1);
    // Loops only a quarter as often as they would come up by chance.
    while (u == v && (rng() & 3) != 0) v = pick(rng, 0, g.vertex_count - 1);
    g.add_edge(labels[i], u, v);
  }
  return cycle_matroid(g);
}

Matroid random_sparse_paving(Rng& rng, int n) {
  const int r = pick(rng, 1, n);
  SetFamily hyper;
  for (int attempt = 0; attempt < 2 * n; ++attempt) {
    const std::vector<int> order = permutation(rng, n);
    Subset h;
    for (int i = 0; i < r; ++i) h = h.with(order[i]);
    const bool sparse = std::all_of(hyper.begin(), hyper.end(), [&](Subset x) { return (x & h).size() <= r - 2; });
    if (sparse) hyper.push_back(h);
  }
  std::vector<int> table(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < table.size(); ++x) table[x] = std::min(Subset(x).size(), r);
  for (Subset h : hyper) table[h.bits()] = r - 1;
  return Matroid(default_labels(n), std::move(table));
}

struct PoolEntry {
  std::string name;
  Matroid matroid;
};

const std::vector<PoolEntry>& named_pool() {
  static const std::vector<PoolEntry> pool = [] {
    std::vector<PoolEntry> out;
    for (const CatalogEntry& c : catalog(12)) out.push_back({c.name, named_matroid(c.family, c.params)});
    return out;
  }();
  return pool;
}

CorpusEntry random_named_minor(Rng& rng, int n) {
  const auto& pool = named_pool();
  const PoolEntry& entry = pool[uniform_below(rng, pool.size())];
  Matroid m = entry.matroid;
  std::string origin = entry.name;
  const int target = std::min(n, m.size());
  while (m.size() > target) {
    const int e = pick(rng, 0, m.size() - 1);
    const bool del = rng() & 1;
    origin += (del ? "\\" : "/") + m.label(e);
    m = del ? delete_elements(m, Subset::single(e)) : contract(m, Subset::single(e));
  }
  return {origin, CorpusSource::kNamedMinor, std::move(m)};
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec) {
  if (spec.max_elements < 0 || spec.max_elements > kMaxElements) {
    throw std::invalid_argument("generate_corpus: max_elements must be in [0, 16]");
  }
  if (spec.count < 0) throw std::invalid_argument("generate_corpus: count must be non-negative");
  std::vector<CorpusEntry> out;
  if (spec.include_catalog) {
    for (const CatalogEntry& c : catalog(spec.max_elements)) {
      const Matroid m = named_matroid(c.family, c.params);
      out.push_back({c.name, CorpusSource::kCatalog, m});
      for (int e = 0; e < m.size(); ++e) {
        out.push_back({c.name + "\\" + m.label(e), CorpusSource::kCatalog, delete_elements(m, Subset::single(e))});
        out.push_back({c.name + "/" + m.label(e), CorpusSource::kCatalog, contract(m, Subset::single(e))});
      }
    }
  }
  if (spec.count == 0) return out;

  const std::vector<std::pair<CorpusSource, int>> weights{
      {CorpusSource::kLaminar, spec.mix.laminar},         {CorpusSource::kNested, spec.mix.nested},
      {CorpusSource::kGraphic, spec.mix.graphic},         {CorpusSource::kSparsePaving, spec.mix.sparse_paving},
      {CorpusSource::kNamedMinor, spec.mix.named_minor}};
  int total = 0;
  for (const auto& [source, w] : weights) {
    if (w < 0) throw std::invalid_argument("generate_corpus: negative generator weight");
    total += w;
  }
  if (total == 0) throw std::invalid_argument("generate_corpus: all generator weights are zero");

  Rng rng(spec.seed);
  const int lo = std::min(2, spec.max_elements);
  for (int i = 0; i < spec.count; ++i) {
    int ticket = pick(rng, 0, total - 1);
    CorpusSource source = weights.front().first;
    for (const auto& [s, w] : weights) {
      if (ticket < w) {
        source = s;
        break;
      }
      ticket -= w;
    }
    const int n = pick(rng, lo, spec.max_elements);
    const std::string tag = "#" + std::to_string(i);
    switch (source) {
      case CorpusSource::kLaminar:
        out.push_back({"laminar" + tag, source, random_laminar(rng, n)});
        break;
      case CorpusSource::kNested:
        out.push_back({"nested" + tag, source, random_nested(rng, n)});
        break;
      case CorpusSource::kGraphic: {
        Matroid m = random_graphic(rng, n);
        if ((rng() & 3) == 0 && m.rank() > 0) {
          const int t = pick(rng, 0, m.rank() - 1);
          out.push_back({"truncated-graphic" + tag, CorpusSource::kTruncatedGraphic, truncate(m, t)});
        } else {
          out.push_back({"graphic" + tag, source, std::move(m)});
        }
        break;
      }
      case CorpusSource::kSparsePaving:
        out.push_back({"sparse-paving" + tag, source, random_sparse_paving(rng, n)});
        break;
      default: {
        CorpusEntry e = random_named_minor(rng, n);
        e.origin += tag;
        out.push_back(std::move(e));
        break;
      }
    }
  }
  return out;
}

}  // namespace lamina
