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

#include "lamina/laminar.hpp"

#include <algorithm>

namespace lamina {

std::string to_string(LaminarProperty p, int k) {
  switch (p) {
    case LaminarProperty::kNested: return "nested";
    case LaminarProperty::kLaminar: return "laminar";
    case LaminarProperty::kKLaminar: return std::to_string(k) + "-laminar";
    case LaminarProperty::kKClosureLaminar: return std::to_string(k) + "-closure-laminar";
    case LaminarProperty::kKClosureLaminarCircuitForm:
      return std::to_string(k) + "-closure-laminar (circuit form)";
  }
  return "?";
}

namespace {

struct CircuitClosures {
  SetFamily circuits;
  SetFamily closures;
};

CircuitClosures circuit_closures(const Matroid& m, CircuitScope scope) {
  CircuitClosures out;
  for (Subset c : circuits(m)) {
    const Subset cl = closure(m, c);
    if (scope == CircuitScope::kNonSpanning && m.rank(c) == m.rank()) continue;
    out.circuits.push_back(c);
    out.closures.push_back(cl);
  }
  return out;
}

bool comparable(Subset a, Subset b) { return a.is_subset_of(b) || b.is_subset_of(a); }

// Scans circuit pairs in canonical order; `qualifies(i, j)` selects the pairs
// the property constrains.
template <typename Qualifies>
ClassVerdict circuit_pair_verdict(LaminarProperty property, int k, const CircuitClosures& cc,
                                  Qualifies&& qualifies) {
  ClassVerdict v{property, k, true, std::nullopt};
  const std::size_t count = cc.circuits.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      // C1 in cl(C2) iff cl(C1) in cl(C2).
      if (comparable(cc.closures[i], cc.closures[j])) continue;
      if (!qualifies(i, j)) continue;
      v.holds = false;
      v.witness = ClassWitness{ClassWitness::Kind::kCircuitPair, cc.circuits[i], cc.circuits[j], std::nullopt};
      return v;
    }
  }
  return v;
}

// First pair of incomparable flats among those containing `x`, if any.
std::optional<std::pair<Subset, Subset>> first_incomparable(const SetFamily& hams, Subset x) {
  std::vector<Subset> over;
  for (Subset h : hams) {
    if (x.is_subset_of(h)) over.push_back(h);
  }
  for (std::size_t i = 0; i < over.size(); ++i) {
    for (std::size_t j = i + 1; j < over.size(); ++j) {
      if (!comparable(over[i], over[j])) return std::make_pair(over[i], over[j]);
    }
  }
  return std::nullopt;
}

}  // namespace

ClassVerdict is_nested(const Matroid& m) {
  ClassVerdict v{LaminarProperty::kNested, 0, true, std::nullopt};
  if (auto pair = first_incomparable(hamiltonian_flats(m), Subset{})) {
    v.holds = false;
    v.witness = ClassWitness{ClassWitness::Kind::kFlatPair, pair->first, pair->second, Subset{}};
  }
  return v;
}

ClassVerdict is_k_laminar(const Matroid& m, int k, CircuitScope scope) {
  if (k < 0) throw std::invalid_argument("is_k_laminar: k must be non-negative");
  const CircuitClosures cc = circuit_closures(m, scope);
  return circuit_pair_verdict(LaminarProperty::kKLaminar, k, cc, [&](std::size_t i, std::size_t j) {
    return (cc.circuits[i] & cc.circuits[j]).size() >= k;
  });
}

ClassVerdict is_laminar(const Matroid& m) {
  ClassVerdict v = is_k_laminar(m, 1);
  v.property = LaminarProperty::kLaminar;
  return v;
}

ClassVerdict is_k_closure_laminar(const Matroid& m, int k) {
  if (k < 0) throw std::invalid_argument("is_k_closure_laminar: k must be non-negative");
  ClassVerdict v{LaminarProperty::kKClosureLaminar, k, true, std::nullopt};
  // No independent k-set when k > rank: vacuously true.
  if (k > m.rank()) return v;
  const SetFamily hams = hamiltonian_flats(m);
  std::optional<ClassWitness> found;
  for_each_subset_of_size(m.ground(), k, [&](Subset x) {
    if (found || !m.is_independent(x)) return;
    if (auto pair = first_incomparable(hams, x)) {
      found = ClassWitness{ClassWitness::Kind::kFlatPair, pair->first, pair->second, x};
    }
  });
  if (found) {
    v.holds = false;
    v.witness = found;
  }
  return v;
}

ClassVerdict is_k_closure_laminar_circuit_form(const Matroid& m, int k, CircuitScope scope) {
  if (k < 0) throw std::invalid_argument("is_k_closure_laminar_circuit_form: k must be non-negative");
  const CircuitClosures cc = circuit_closures(m, scope);
  return circuit_pair_verdict(LaminarProperty::kKClosureLaminarCircuitForm, k, cc,
                              [&](std::size_t i, std::size_t j) {
                                return m.rank(cc.closures[i] & cc.closures[j]) >= k;
                              });
}

int min_laminar_k(const Matroid& m) {
  for (int k = 0;; ++k) {
    if (is_k_laminar(m, k).holds) return k;
  }
}

int min_closure_laminar_k(const Matroid& m) {
  for (int k = 0;; ++k) {
    if (is_k_closure_laminar(m, k).holds) return k;
  }
}

bool is_paving(const Matroid& m) {
  for (Subset c : circuits(m)) {
    if (c.size() < m.rank()) return false;
  }
  return true;
}

bool witness_replays(const Matroid& m, const ClassVerdict& verdict) {
  if (verdict.holds || !verdict.witness) return false;
  const ClassWitness& w = *verdict.witness;
  const Subset a = w.first, b = w.second;
  switch (verdict.property) {
    case LaminarProperty::kNested:
    case LaminarProperty::kKClosureLaminar: {
      if (w.kind != ClassWitness::Kind::kFlatPair) return false;
      const Subset x = w.independent_set.value_or(Subset{});
      const int k = verdict.property == LaminarProperty::kNested ? 0 : verdict.k;
      return x.size() == k && m.is_independent(x) && x.is_subset_of(a) && x.is_subset_of(b) &&
             is_flat(m, a) && is_flat(m, b) && is_hamiltonian_flat(m, a) &&
             is_hamiltonian_flat(m, b) && !comparable(a, b);
    }
    case LaminarProperty::kLaminar:
    case LaminarProperty::kKLaminar:
    case LaminarProperty::kKClosureLaminarCircuitForm: {
      if (w.kind != ClassWitness::Kind::kCircuitPair) return false;
      if (!is_circuit(m, a) || !is_circuit(m, b)) return false;
      if (a.is_subset_of(closure(m, b)) || b.is_subset_of(closure(m, a))) return false;
      if (verdict.property == LaminarProperty::kKClosureLaminarCircuitForm) {
        return m.rank(closure(m, a) & closure(m, b)) >= verdict.k;
      }
      const int k = verdict.property == LaminarProperty::kLaminar ? 1 : verdict.k;
      return (a & b).size() >= k;
    }
  }
  return false;
}

}  // namespace lamina
