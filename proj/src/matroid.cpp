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

#include "lamina/matroid.hpp"

#include <algorithm>
#include <set>

namespace lamina {

std::string_view to_string(RankAxiom axiom) {
  switch (axiom) {
    case RankAxiom::kR1: return "R1";
    case RankAxiom::kR2: return "R2";
    case RankAxiom::kR3: return "R3";
  }
  return "?";
}

std::optional<AxiomViolation> validate_rank_axioms(std::span<const int> table, int n) {
  if (n < 0 || n > kMaxElements || table.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("rank table must have 2^n entries with n <= 16");
  }
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t a = 0; a < count; ++a) {
    const int r = table[a];
    if (r < 0 || r > Subset(a).size()) {
      return AxiomViolation{RankAxiom::kR1, Subset(a), Subset(a)};
    }
  }
  for (std::uint32_t a = 0; a < count; ++a) {
    for (int e = 0; e < n; ++e) {
      const std::uint32_t ae = a | (std::uint32_t{1} << e);
      if (ae != a && table[a] > table[ae]) {
        return AxiomViolation{RankAxiom::kR2, Subset(a), Subset(ae)};
      }
    }
  }
  for (std::uint32_t a = 0; a < count; ++a) {
    for (int e = 0; e < n; ++e) {
      if ((a >> e) & 1U) continue;
      const std::uint32_t ae = a | (std::uint32_t{1} << e);
      for (int f = e + 1; f < n; ++f) {
        if ((a >> f) & 1U) continue;
        const std::uint32_t af = a | (std::uint32_t{1} << f);
        if (table[ae] + table[af] < table[ae | af] + table[a]) {
          return AxiomViolation{RankAxiom::kR3, Subset(ae), Subset(af)};
        }
      }
    }
  }
  return std::nullopt;
}

Matroid::Matroid() : ranks_{0} {}

Matroid::Matroid(std::vector<std::string> labels, std::vector<int> rank_table)
    : labels_(std::move(labels)) {
  const int n = static_cast<int>(labels_.size());
  if (n > kMaxElements) {
    throw InvalidMatroid("ground set has " + std::to_string(n) + " elements; at most 16 supported");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvalidMatroid("empty element label");
    if (!seen.insert(l).second) throw InvalidMatroid("duplicate element label '" + l + "'");
  }
  if (rank_table.size() != (std::size_t{1} << n)) {
    throw InvalidMatroid("rank table size does not match 2^n");
  }
  if (auto v = validate_rank_axioms(rank_table, n)) {
    throw InvalidMatroid("rank table violates " + std::string(to_string(v->axiom)), v);
  }
  ranks_.assign(rank_table.begin(), rank_table.end());
}

int Matroid::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  }
  return -1;
}

Subset Matroid::subset_of(std::initializer_list<std::string_view> labels) const {
  Subset s;
  for (auto l : labels) {
    const int i = index_of(l);
    if (i < 0) throw std::invalid_argument("unknown element label '" + std::string(l) + "'");
    s = s.with(i);
  }
  return s;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

std::string format_subset(const Matroid& m, Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ' ';
    out += m.label(e);
    first = false;
  }
  return out + "}";
}

Subset closure(const Matroid& m, Subset a) {
  const int r = m.rank(a);
  Subset cl = a;
  for (int e = 0; e < m.size(); ++e) {
    if (!a.contains(e) && m.rank(a.with(e)) == r) cl = cl.with(e);
  }
  return cl;
}

bool is_flat(const Matroid& m, Subset a) { return closure(m, a) == a; }

bool is_circuit(const Matroid& m, Subset a) {
  if (a.empty() || m.is_independent(a)) return false;
  for (int e : a) {
    if (!m.is_independent(a.without(e))) return false;
  }
  return true;
}

Subset loops(const Matroid& m) { return closure(m, Subset{}); }

Subset coloops(const Matroid& m) {
  Subset out;
  const Subset e = m.ground();
  for (int x : e) {
    if (m.rank(e.without(x)) < m.rank()) out = out.with(x);
  }
  return out;
}

namespace {

void sort_family(SetFamily& family) {
  std::sort(family.begin(), family.end(), size_then_mask_less);
}

}  // namespace

SetFamily circuits(const Matroid& m) {
  SetFamily out;
  const std::uint32_t count = std::uint32_t{1} << m.size();
  for (std::uint32_t a = 1; a < count; ++a) {
    if (is_circuit(m, Subset(a))) out.push_back(Subset(a));
  }
  sort_family(out);
  return out;
}

SetFamily flats(const Matroid& m) {
  SetFamily out;
  const std::uint32_t count = std::uint32_t{1} << m.size();
  for (std::uint32_t a = 0; a < count; ++a) {
    if (is_flat(m, Subset(a))) out.push_back(Subset(a));
  }
  sort_family(out);
  return out;
}

std::vector<RankedSet> cyclic_flats(const Matroid& m) {
  std::vector<RankedSet> out;
  for (Subset f : flats(m)) {
    const int r = m.rank(f);
    // No element of f is a coloop of m|f.
    bool cyclic = true;
    for (int e : f) {
      if (m.rank(f.without(e)) < r) {
        cyclic = false;
        break;
      }
    }
    if (cyclic) out.push_back({f, r});
  }
  return out;
}

bool is_hamiltonian_flat(const Matroid& m, Subset flat) {
  if (!is_flat(m, flat)) {
    throw std::invalid_argument("is_hamiltonian_flat: " + format_subset(m, flat) + " is not a flat");
  }
  bool found = false;
  for_each_subset(flat, [&](Subset c) {
    if (!found && is_circuit(m, c) && closure(m, c) == flat) found = true;
  });
  return found;
}

SetFamily hamiltonian_flats(const Matroid& m) {
  SetFamily out;
  for (Subset c : circuits(m)) out.push_back(closure(m, c));
  sort_family(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Matroid dual(const Matroid& m) {
  const int n = m.size();
  const Subset e = m.ground();
  std::vector<int> table(std::size_t{1} << n);
  for (std::uint32_t a = 0; a < table.size(); ++a) {
    const Subset s(a);
    table[a] = s.size() + m.rank(e - s) - m.rank();
  }
  return Matroid(m.labels(), std::move(table));
}

}  // namespace lamina
