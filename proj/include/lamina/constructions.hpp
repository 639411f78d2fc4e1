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

// ---------------------------------------------------------------------------
// Input descriptions
// ---------------------------------------------------------------------------

struct Edge {
  std::string label;
  int u = 0;
  int v = 0;
};

/// Multigraph whose edges are matroid elements. Parallel edges and loops
/// are allowed.
struct Multigraph {
  int vertex_count = 0;
  std::vector<Edge> edges;

  /// Appends an edge labelled `label` and returns its index.
  int add_edge(std::string label, int u, int v);
};

/// (E, family, capacities): I is independent iff |I & A| <= c(A) for every
/// member A. The family must be laminar.
struct LaminarCapacitySystem {
  std::vector<std::string> ground;
  std::vector<Subset> family;
  std::vector<int> capacities;
};

/// Whether any two intersecting members are nested.
bool is_laminar_family(const std::vector<Subset>& family);

/// Chain B_1 <= B_2 <= ... <= B_m used as a transversal presentation.
struct NestedPresentation {
  std::vector<std::string> ground;
  std::vector<Subset> chain;
};

/// Candidate collection of cyclic flats with their ranks.
struct CyclicFlatFamily {
  std::vector<std::string> ground;
  std::vector<RankedSet> entries;
};

enum class CyclicFlatAxiom { kZ0, kZ1, kZ2, kZ3 };
std::string_view to_string(CyclicFlatAxiom axiom);

struct CyclicFlatViolation {
  CyclicFlatAxiom axiom;
  Subset first;
  Subset second;
  std::string detail;
};

class CyclicFlatError : public std::invalid_argument {
 public:
  explicit CyclicFlatError(CyclicFlatViolation v);
  const CyclicFlatViolation& violation() const { return violation_; }

 private:
  CyclicFlatViolation violation_;
};

/// Checks the lattice axioms Z0-Z3 in order and reports the first failure.
/// Meet and join are taken inside the family under inclusion: the greatest
/// member below X & Y and the least member above X | Y.
std::optional<CyclicFlatViolation> validate_cyclic_flats(const CyclicFlatFamily& z);

/// Every pair violating Z3 alone (ignoring Z0-Z2 order), for diagnostics.
/// Requires Z0 to hold; returns an empty list otherwise.
std::vector<CyclicFlatViolation> z3_violations(const CyclicFlatFamily& z);

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

Matroid uniform(int r, int n);

/// Rank = touched vertices minus components of the touched subgraph.
Matroid cycle_matroid(const Multigraph& g);

Matroid laminar_matroid(const LaminarCapacitySystem& s);

/// Rank of X is the largest matching of X into the chain blocks.
Matroid transversal_matroid(const NestedPresentation& p);

/// Builds the matroid whose circuits are exactly `circuit_family`. Throws
/// InvalidMatroid when the family is not the circuit set of a matroid.
Matroid from_circuits(std::vector<std::string> labels, const SetFamily& circuit_family);

Matroid truncate(const Matroid& m, int t);

/// Elements of `b` follow those of `a`. A label of `b` that collides with an
/// earlier label gets primes appended until it is unique.
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Glues `a` at element `pa` to `b` at element `pb`. The basepoint keeps
/// index and label `pa` of `a`; the other elements of `b` follow in order.
Matroid parallel_connection(const Matroid& a, int pa, const Matroid& b, int pb);

/// Raises the rank of circuit-hyperplane `x` to |x|.
Matroid relax_circuit_hyperplane(const Matroid& m, Subset x);

/// Rank r(X) = min over members (Z, r_Z) of r_Z + |X - Z|. Validates Z0-Z3
/// first (CyclicFlatError) and checks that the result reproduces the family.
Matroid from_cyclic_flats(const CyclicFlatFamily& z);

/// Minimal S such that some member Z contains S with |S| = r(Z) + 1.
SetFamily circuits_from_cyclic_flats(const CyclicFlatFamily& z);

/// The cyclic flats of `m` as a family over its labels.
CyclicFlatFamily cyclic_flat_family(const Matroid& m);

// ---------------------------------------------------------------------------
// Named catalog
// ---------------------------------------------------------------------------

enum class NamedFamily {
  kMn,             // theta-graph family M_n(k)
  kNn,             // N_n(k)
  kPn,             // P_n(k)
  kMK23,
  kMK23Minus,
  kMK4,
  kF7,
  kF7Star,
  kMStarK33,
  kWheel4RimDel,
  kNotkExample,    // cyclic-flat example, parameter k
  kSec1PCExample,  // circuit with two triangles attached, parameter k
};

std::string_view to_string(NamedFamily f);
/// Parses the catalog identifiers ("Mn", "MK23minus", "F7star", ...).
std::optional<NamedFamily> named_family_from_string(std::string_view id);

struct NamedParams {
  std::optional<int> n;
  std::optional<int> k;
};

/// Throws std::invalid_argument for missing or out-of-range parameters and
/// for instances with more than 16 elements.
Matroid named_matroid(NamedFamily family, NamedParams params = {});

/// The printed cyclic-flat table behind NotkExample(k), 3 <= k <= 6, with
/// labels a1.., b1.., c1.., e. The table fails Z3, so named_matroid throws
/// CyclicFlatError for this family.
CyclicFlatFamily notk_cyclic_flats(int k);

/// Ground-set size of the instance without building it.
int named_matroid_size(NamedFamily family, NamedParams params = {});

struct CatalogEntry {
  std::string name;  // e.g. "M5(2)", "F7star", "Sec1PCExample(3)"
  NamedFamily family;
  NamedParams params;
};

/// Every catalog instance with at most `max_elements` elements, in a fixed
/// order. Parametric families contribute all in-range (n, k).
std::vector<CatalogEntry> catalog(int max_elements);

/// Element of N_n(k)'s central circuit whose contraction gives P_{n-1}(k).
inline constexpr std::string_view kNnContractionElement = "c3";

/// Shorthand for the graphs behind the families.
Multigraph theta_graph(int p_len, int x1_len, int x2_len);
Multigraph complete_graph(int v);
Multigraph complete_bipartite_graph(int a, int b);

}  // namespace lamina
