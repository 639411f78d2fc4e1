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
#include <string_view>
#include <vector>

#include "lamina/matroid.hpp"

namespace lamina {

/// Elements to delete and to contract; the two sets are disjoint.
struct MinorSpec {
  Subset delete_set;
  Subset contract_set;
  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

/// M \ D, over the remaining labels in their original order.
Matroid delete_elements(const Matroid& m, Subset d);
/// M / C, with r(A) = r(A | C) - r(C).
Matroid contract(const Matroid& m, Subset c);
/// M / C \ D. Throws std::invalid_argument if the sets overlap.
Matroid apply_minor(const Matroid& m, const MinorSpec& spec);

/// image[i] is the element of the second matroid that element i maps to.
using Bijection = std::vector<int>;

/// Precomputed isomorphism invariants, reusable across many comparisons.
class IsoProfile {
 public:
  explicit IsoProfile(const Matroid& m);
  const Matroid& matroid() const { return m_; }
  bool invariants_match(const IsoProfile& other) const;

 private:
  friend std::optional<Bijection> find_isomorphism(const IsoProfile&, const IsoProfile&);
  Matroid m_;
  std::vector<int> circuit_sizes_;           // sorted
  std::vector<int> flats_per_rank_;
  std::vector<std::vector<int>> element_fp_; // per element, sorted circuit sizes through it
};

/// Backtracking search for a rank-preserving bijection, pruned by the
/// invariants in IsoProfile. Elements of `a` are assigned most-constrained
/// first and candidates are tried in index order, so the witness is
/// deterministic.
std::optional<Bijection> find_isomorphism(const Matroid& a, const Matroid& b);
std::optional<Bijection> find_isomorphism(const IsoProfile& a, const IsoProfile& b);
bool is_isomorphic(const Matroid& a, const Matroid& b);

/// Searches contract sets that are independent of size r(M) - r(N) in
/// increasing mask order, then deletion sets of the right size in
/// increasing mask order. Returns the first spec whose minor is isomorphic
/// to N.
std::optional<MinorSpec> find_minor(const Matroid& host, const Matroid& target);
std::optional<MinorSpec> find_minor(const Matroid& host, const IsoProfile& target);
bool has_minor(const Matroid& host, const Matroid& target);

/// Minor-closed predicates registered for excluded-minor certification.
enum class ClassKind { kKLaminar, kKClosureLaminar, kNested, kLaminar, kPaving, kBinary, kTernary };

struct ClassPredicate {
  ClassKind kind;
  int k = 0;  // only for the k-parametrised kinds
};

std::string to_string(const ClassPredicate& p);
/// Parses "2-laminar", "3-closure-laminar", "nested", "laminar", "paving",
/// "binary", "ternary". Throws std::invalid_argument otherwise.
ClassPredicate class_predicate_from_string(std::string_view name);

bool satisfies(const Matroid& m, const ClassPredicate& p);

struct ExcludedMinorReport {
  bool excluded_minor = false;
  bool in_class = false;
  /// A single-element deletion or contraction outside the class, when the
  /// matroid is outside the class but is not minor-minimal.
  std::optional<MinorSpec> failing_minor;
};

/// True iff M fails P while every single-element deletion and contraction
/// satisfies P.
ExcludedMinorReport excluded_minor_report(const Matroid& m, const ClassPredicate& p);
bool is_excluded_minor(const Matroid& m, const ClassPredicate& p);

/// No U_{2,4} minor.
bool is_binary(const Matroid& m);
/// No minor among U_{2,5}, U_{3,5}, F_7, F_7*.
bool is_ternary(const Matroid& m);

}  // namespace lamina
