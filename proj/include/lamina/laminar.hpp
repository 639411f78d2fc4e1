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

#include <optional>
#include <string>

#include "lamina/matroid.hpp"

namespace lamina {

enum class LaminarProperty {
  kNested,                     // Hamiltonian flats form a chain
  kLaminar,                    // 1-laminar
  kKLaminar,                   // circuit pairs meeting in >= k elements
  kKClosureLaminar,            // chains over independent k-sets
  kKClosureLaminarCircuitForm, // circuit pairs whose closures meet in rank >= k
};

std::string to_string(LaminarProperty p, int k);

/// Restricts circuit-pair quantification to non-spanning circuits.
enum class CircuitScope { kAll, kNonSpanning };

/// Two circuits, or two incomparable Hamiltonian flats (with the independent
/// set that both contain for the closure-laminar form).
struct ClassWitness {
  enum class Kind { kCircuitPair, kFlatPair };
  Kind kind;
  Subset first;
  Subset second;
  std::optional<Subset> independent_set;
};

struct ClassVerdict {
  LaminarProperty property;
  int k = 0;
  bool holds = true;
  /// Present exactly when `holds` is false; the first violation in
  /// canonical order.
  std::optional<ClassWitness> witness;

  explicit operator bool() const { return holds; }
};

ClassVerdict is_nested(const Matroid& m);
ClassVerdict is_laminar(const Matroid& m);
ClassVerdict is_k_laminar(const Matroid& m, int k, CircuitScope scope = CircuitScope::kAll);
ClassVerdict is_k_closure_laminar(const Matroid& m, int k);
ClassVerdict is_k_closure_laminar_circuit_form(const Matroid& m, int k,
                                               CircuitScope scope = CircuitScope::kAll);

/// Smallest k for which the predicate holds; at most rank + 1.
int min_laminar_k(const Matroid& m);
int min_closure_laminar_k(const Matroid& m);

/// Every circuit has at least rank(M) elements.
bool is_paving(const Matroid& m);

/// Re-derives the violation recorded in a false verdict from scratch.
/// Returns false for true verdicts and for witnesses that do not violate.
bool witness_replays(const Matroid& m, const ClassVerdict& verdict);

}  // namespace lamina
