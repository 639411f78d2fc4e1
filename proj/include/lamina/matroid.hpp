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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lamina/subset.hpp"

namespace lamina {

enum class RankAxiom {
  kR1,  // 0 <= r(A) <= |A|
  kR2,  // A subset of B implies r(A) <= r(B)
  kR3,  // submodularity
};

std::string_view to_string(RankAxiom axiom);

/// First violated rank axiom, with the pair of subsets that exposes it. For
/// R1 both subsets are the offending set.
struct AxiomViolation {
  RankAxiom axiom;
  Subset first;
  Subset second;
};

/// Checks R1, then R2, then R3 over a candidate table of 2^n entries.
///
/// Monotonicity and submodularity are checked in their single-element
/// forms, r(A) <= r(A+e) and r(A+e) + r(A+f) >= r(A+e+f) + r(A), which are
/// equivalent to the global statements for any set function. The witness
/// pair for R3 is (A+e, A+f).
std::optional<AxiomViolation> validate_rank_axioms(std::span<const int> table, int n);

/// Raised when a constructor is handed data that does not describe a matroid.
class InvalidMatroid : public std::invalid_argument {
 public:
  explicit InvalidMatroid(const std::string& what,
                          std::optional<AxiomViolation> violation = std::nullopt)
      : std::invalid_argument(what), violation_(violation) {}
  const std::optional<AxiomViolation>& violation() const { return violation_; }

 private:
  std::optional<AxiomViolation> violation_;
};

/// A matroid on at most 16 labeled elements, stored as its full rank table.
///
/// Values are immutable once constructed. Equality is labeled equality: same
/// labels in the same order and identical rank tables.
class Matroid {
 public:
  /// Validates label count and distinctness, the table size and R1-R3.
  /// Throws InvalidMatroid on any failure.
  Matroid(std::vector<std::string> labels, std::vector<int> rank_table);

  /// The empty matroid.
  Matroid();

  int size() const { return static_cast<int>(labels_.size()); }
  Subset ground() const { return Subset::full(size()); }
  int rank() const { return ranks_.back(); }
  int rank(Subset a) const { return ranks_[a.bits()]; }
  bool is_independent(Subset a) const { return rank(a) == a.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int e) const { return labels_[static_cast<std::size_t>(e)]; }
  /// Index of the element with this label, or -1.
  int index_of(std::string_view label) const;
  /// Set with the given labels; throws std::invalid_argument on an unknown one.
  Subset subset_of(std::initializer_list<std::string_view> labels) const;

  const std::vector<std::uint8_t>& rank_table() const { return ranks_; }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> ranks_;
};

/// "a", "b", ... used by every constructor that has no natural names.
std::vector<std::string> default_labels(int n);

/// Human readable `{a b c}` rendering of a subset.
std::string format_subset(const Matroid& m, Subset s);

Subset closure(const Matroid& m, Subset a);
bool is_flat(const Matroid& m, Subset a);
bool is_circuit(const Matroid& m, Subset a);
Subset loops(const Matroid& m);
Subset coloops(const Matroid& m);

/// Minimal dependent sets in canonical (size, mask) order.
SetFamily circuits(const Matroid& m);
/// All closed sets in canonical order.
SetFamily flats(const Matroid& m);

struct RankedSet {
  Subset set;
  int rank;
  friend bool operator==(const RankedSet&, const RankedSet&) = default;
};

/// Flats that are unions of circuits, in canonical order, with their ranks.
std::vector<RankedSet> cyclic_flats(const Matroid& m);

/// True iff some circuit inside `flat` spans it. Throws std::invalid_argument
/// if `flat` is not closed.
bool is_hamiltonian_flat(const Matroid& m, Subset flat);
/// Closures of circuits, deduplicated, in canonical order.
SetFamily hamiltonian_flats(const Matroid& m);

/// r*(A) = |A| + r(E - A) - r(E).
Matroid dual(const Matroid& m);

}  // namespace lamina
