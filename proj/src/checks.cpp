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

#include "lamina/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "lamina/constructions.hpp"
#include "lamina/corpus.hpp"
#include "lamina/graphs.hpp"
#include "lamina/io.hpp"
#include "lamina/laminar.hpp"
#include "lamina/minors.hpp"

namespace lamina {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

std::uint64_t check_seed(std::uint64_t seed, std::string_view id) { return derive_seed(seed, id); }

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::optional<CheckWitness> witness;
};

Outcome passed(std::string summary) { return {true, std::move(summary), std::nullopt}; }

Outcome failed(std::vector<std::string> files, std::string detail) {
  return {false, "", CheckWitness{std::move(files), std::move(detail)}};
}

Outcome failed(const Matroid& m, const std::string& origin, const std::string& detail) {
  return failed({serialize_matroid(m)}, origin + ": " + detail);
}

std::string fmt(const Matroid& m, Subset s) { return format_subset(m, s); }

std::string fmt(const std::vector<std::string>& labels, Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    out += (first ? "" : " ") + labels[static_cast<std::size_t>(e)];
    first = false;
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string describe(const Matroid& m, const ClassVerdict& v) {
  if (v.holds || !v.witness) return to_string(v.property, v.k) + " holds";
  std::string out = to_string(v.property, v.k) + " fails at " + fmt(m, v.witness->first) + ", " +
                    fmt(m, v.witness->second);
  if (v.witness->independent_set) out += " over X = " + fmt(m, *v.witness->independent_set);
  return out;
}

// The corpus is shared by every check that quantifies over it.
const std::vector<CorpusEntry>& shared_corpus(const CheckOptions& o) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint64_t, int, int>, std::unique_ptr<const std::vector<CorpusEntry>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{o.seed, o.corpus_count, o.max_elements}];
  if (!slot) {
    CorpusSpec spec;
    spec.seed = o.seed;
    spec.count = o.corpus_count;
    spec.max_elements = o.max_elements;
    slot = std::make_unique<const std::vector<CorpusEntry>>(generate_corpus(spec));
  }
  return *slot;
}

struct Ctx {
  const CheckOptions& options;
  std::uint64_t seed;  // this check's sub-seed
  const std::vector<CorpusEntry>& corpus() const { return shared_corpus(options); }
};

std::string count_of(std::size_t n, const char* noun) { return std::to_string(n) + " " + noun; }

bool is_chain(const SetFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!family[i].is_subset_of(family[j]) && !family[j].is_subset_of(family[i])) return false;
    }
  }
  return true;
}

int non_spanning_circuits(const Matroid& m) {
  int count = 0;
  for (Subset c : circuits(m)) count += m.rank(c) < m.rank();
  return count;
}

struct Target {
  std::string name;
  IsoProfile profile;
};

Target target(std::string name, const Matroid& m) { return {std::move(name), IsoProfile(m)}; }

Matroid named(NamedFamily f, std::optional<int> n = std::nullopt, std::optional<int> k = std::nullopt) {
  return named_matroid(f, {n, k});
}

// First listed minor of `m` (list order), with its delete/contract sets.
std::optional<std::string> first_listed_minor(const Matroid& m, const std::vector<Target>& targets) {
  for (const Target& t : targets) {
    if (t.profile.matroid().size() > m.size()) continue;
    if (auto spec = find_minor(m, t.profile)) {
      return t.name + " (delete " + fmt(m, spec->delete_set) + ", contract " + fmt(m, spec->contract_set) + ")";
    }
  }
  return std::nullopt;
}

std::string names(const std::vector<Target>& targets) {
  std::string out;
  for (const auto& t : targets) out += (out.empty() ? "" : ", ") + t.name;
  return out;
}

// Every corpus matroid with at most 8 elements: `in_class` must hold exactly
// when no listed minor is present.
Outcome excluded_minor_sweep(const Ctx& ctx, const std::vector<Target>& targets, const std::string& class_name,
                             const std::function<bool(const Matroid&)>& in_class) {
  std::size_t seen = 0, outside = 0;
  for (const auto& e : ctx.corpus()) {
    if (e.matroid.size() > 8) continue;
    ++seen;
    const bool member = in_class(e.matroid);
    const auto minor = first_listed_minor(e.matroid, targets);
    outside += !member;
    if (member && minor) return failed(e.matroid, e.origin, class_name + " but has minor " + *minor);
    if (!member && !minor) {
      return failed(e.matroid, e.origin, "not " + class_name + " yet has no minor among " + names(targets));
    }
  }
  return passed(count_of(seen, "corpus matroids") + ", " + std::to_string(outside) + " outside " + class_name +
                ", all explained by {" + names(targets) + "}");
}

// --- checks ---------------------------------------------------------------

Outcome prop_nested_circuits(const Ctx& ctx) {
  std::size_t nested = 0, loop_flat_changes = 0;
  for (const auto& e : ctx.corpus()) {
    const Matroid& m = e.matroid;
    const ClassVerdict by_flats = is_nested(m);
    const ClassVerdict by_circuits = is_k_laminar(m, 0);
    if (by_flats.holds != by_circuits.holds) {
      return failed(m, e.origin, describe(m, by_flats) + "; " + describe(m, by_circuits));
    }
    nested += by_flats.holds;
    SetFamily without_loop_flat;
    for (Subset h : hamiltonian_flats(m)) {
      if (m.rank(h) > 0) without_loop_flat.push_back(h);
    }
    loop_flat_changes += is_chain(without_loop_flat) != by_flats.holds;
    if (e.source == CorpusSource::kNested && !by_flats.holds) {
      return failed(m, e.origin, "chain presentation, but " + describe(m, by_flats));
    }
  }
  return passed(count_of(ctx.corpus().size(), "corpus matroids") + ", " + std::to_string(nested) +
                " nested; counting the loop flat as Hamiltonian changed " + std::to_string(loop_flat_changes) +
                " verdicts");
}

Outcome thm_laminar_circuits(const Ctx& ctx) {
  CorpusSpec spec;
  spec.seed = ctx.seed;
  spec.count = 300;
  spec.max_elements = 10;
  spec.include_catalog = false;
  spec.mix = {1, 0, 0, 0, 0};
  std::vector<CorpusEntry> pool = generate_corpus(spec);
  for (const auto& e : ctx.corpus()) {
    if (e.source == CorpusSource::kLaminar) pool.push_back(e);
  }
  for (const auto& e : pool) {
    const ClassVerdict v = is_laminar(e.matroid);
    if (!v.holds) return failed(e.matroid, e.origin, "laminar capacity system, but " + describe(e.matroid, v));
  }
  // M_n(1) is an excluded minor for laminar matroids, so the circuit test must reject it.
  for (int n = 3; n <= 6; ++n) {
    const Matroid m = named(NamedFamily::kMn, n, 1);
    const ClassVerdict v = is_laminar(m);
    if (v.holds) return failed(m, "M" + std::to_string(n) + "(1)", "circuit condition accepts a non-laminar matroid");
    if (!witness_replays(m, v)) return failed(m, "M" + std::to_string(n) + "(1)", "witness does not replay");
  }
  return passed(count_of(pool.size(), "laminar systems") + " satisfy the circuit condition; M_n(1), n=3..6, rejected");
}

Outcome cor_ham_laminar(const Ctx& ctx) {
  std::size_t laminar = 0;
  for (const auto& e : ctx.corpus()) {
    const ClassVerdict a = is_laminar(e.matroid);
    const ClassVerdict b = is_k_closure_laminar(e.matroid, 1);
    if (a.holds != b.holds) return failed(e.matroid, e.origin, describe(e.matroid, a) + "; " + describe(e.matroid, b));
    laminar += a.holds;
  }
  return passed(count_of(ctx.corpus().size(), "corpus matroids") + ", " + std::to_string(laminar) + " laminar");
}

Outcome lem_kcl_equiv(const Ctx& ctx) {
  std::size_t pairs = 0;
  for (const auto& e : ctx.corpus()) {
    const Matroid& m = e.matroid;
    for (int k = 0; k <= m.rank() + 1; ++k) {
      ++pairs;
      const ClassVerdict flats_form = is_k_closure_laminar(m, k);
      const ClassVerdict circuit_form = is_k_closure_laminar_circuit_form(m, k);
      if (flats_form.holds != circuit_form.holds) {
        return failed(m, e.origin, describe(m, flats_form) + "; " + describe(m, circuit_form));
      }
      if (!flats_form.holds && (!witness_replays(m, flats_form) || !witness_replays(m, circuit_form))) {
        return failed(m, e.origin, "witness does not replay at k=" + std::to_string(k));
      }
      if (k == 0 && flats_form.holds != is_nested(m).holds) {
        return failed(m, e.origin, "k=0 verdict differs from is_nested");
      }
      if (k == 1 && flats_form.holds != is_laminar(m).holds) {
        return failed(m, e.origin, "k=1 verdict differs from is_laminar");
      }
    }
  }
  return passed(count_of(pairs, "(matroid, k) pairs") + " agree");
}

Outcome sec1_pc_example(const Ctx&) {
  int tried = 0;
  for (int k = 2; k + 5 <= kMaxElements; ++k, ++tried) {
    const Matroid m = named(NamedFamily::kSec1PCExample, std::nullopt, k);
    const std::string origin = "Sec1PCExample(" + std::to_string(k) + ")";
    if (m.size() != k + 5 || m.rank() != k + 2) return failed(m, origin, "unexpected size or rank");
    const ClassVerdict lam = is_k_laminar(m, k);
    if (!lam.holds) return failed(m, origin, describe(m, lam));
    const ClassVerdict cl = is_k_closure_laminar(m, k);
    if (cl.holds) return failed(m, origin, "expected not " + std::to_string(k) + "-closure-laminar");
    if (!witness_replays(m, cl)) return failed(m, origin, "closure witness does not replay");
  }
  return passed("k = 2.." + std::to_string(tried + 1) + ": k-laminar and not k-closure-laminar");
}

Outcome prop_baby(const Ctx& ctx) {
  std::size_t pairs = 0;
  for (const auto& e : ctx.corpus()) {
    const Matroid& m = e.matroid;
    const bool few = non_spanning_circuits(m) <= 1;
    for (int k = 0; k <= m.rank() + 1; ++k) {
      ++pairs;
      const bool cl = is_k_closure_laminar(m, k).holds;
      const bool lam = is_k_laminar(m, k).holds;
      const std::string at = " at k=" + std::to_string(k);
      if (cl && !lam) return failed(m, e.origin, "(i) closure-laminar but not laminar" + at);
      if (cl && !is_k_closure_laminar(m, k + 1).holds) return failed(m, e.origin, "(ii) not monotone" + at);
      if (lam && !is_k_laminar(m, k + 1).holds) return failed(m, e.origin, "(iii) not monotone" + at);
      if (cl != is_k_closure_laminar_circuit_form(m, k, CircuitScope::kNonSpanning).holds) {
        return failed(m, e.origin, "(iv) non-spanning circuit form disagrees" + at);
      }
      if (lam != is_k_laminar(m, k, CircuitScope::kNonSpanning).holds) {
        return failed(m, e.origin, "(v) non-spanning circuit form disagrees" + at);
      }
      if (few && !(cl && lam)) return failed(m, e.origin, "(vi) at most one non-spanning circuit" + at);
    }
  }
  return passed(count_of(pairs, "(matroid, k) pairs") + " satisfy (i)-(vi)");
}

template <typename Pred>
Outcome minor_closure_sweep(const Ctx& ctx, const std::vector<int>& fixed_ks, const Pred& holds,
                            const std::string& name) {
  std::size_t tested = 0;
  for (const auto& e : ctx.corpus()) {
    const Matroid& m = e.matroid;
    std::vector<int> ks = fixed_ks;
    if (ks.empty()) {
      for (int k = 0; k <= m.rank(); ++k) ks.push_back(k);
    }
    std::vector<std::pair<std::string, Matroid>> minors;
    for (int x = 0; x < m.size(); ++x) {
      minors.emplace_back("\\" + m.label(x), delete_elements(m, Subset::single(x)));
      minors.emplace_back("/" + m.label(x), contract(m, Subset::single(x)));
    }
    for (int k : ks) {
      if (!holds(m, k)) continue;
      for (const auto& [op, minor] : minors) {
        ++tested;
        if (!holds(minor, k)) {
          return failed({serialize_matroid(m), serialize_matroid(minor)},
                        e.origin + ": " + std::to_string(k) + "-" + name + " but M" + op + " is not");
        }
      }
    }
  }
  return passed(count_of(tested, "single-element minors") + " of class members stay in the class");
}

Outcome lem_klam_minor_closed(const Ctx& ctx) {
  return minor_closure_sweep(ctx, {}, [](const Matroid& m, int k) { return is_k_laminar(m, k).holds; }, "laminar");
}

Outcome thm_cl23_minor_closed(const Ctx& ctx) {
  return minor_closure_sweep(ctx, {2, 3}, [](const Matroid& m, int k) { return is_k_closure_laminar(m, k).holds; },
                             "closure-laminar");
}

Outcome lem_hamcir(const Ctx& ctx) {
  std::size_t instances = 0;
  for (const auto& e : ctx.corpus()) {
    const Matroid& m = e.matroid;
    const SetFamily cs = circuits(m);
    for (int k = 0; k <= m.rank(); ++k) {
      if (!is_k_laminar(m, k).holds) continue;
      for (Subset c : cs) {
        if (c.size() < 2 * k - 1) continue;
        const Subset cl = closure(m, c);
        for (int x : m.ground() - cl) {
          const Subset f = closure(m, c.with(x));
          if (m.rank(f - cl) < 2) continue;
          ++instances;
          if (!is_hamiltonian_flat(m, f)) {
            return failed(m, e.origin,
                          std::to_string(k) + "-laminar, C = " + fmt(m, c) + ", e = " + m.label(x) + ": cl(C+e) = " +
                              fmt(m, f) + " is not Hamiltonian");
          }
        }
      }
    }
  }
  return passed(count_of(instances, "(C, e, k) instances") + ", all Hamiltonian");
}

Outcome notk(const Ctx&, int k) {
  const CyclicFlatFamily z = notk_cyclic_flats(k);
  if (auto v = validate_cyclic_flats(z)) {
    std::string detail = "the table for k=" + std::to_string(k) + " violates " + std::string(to_string(v->axiom)) +
                         " at X = " + fmt(z.ground, v->first) + ", Y = " + fmt(z.ground, v->second) + " (" +
                         v->detail + "), so no matroid has these cyclic flats";
    return failed({serialize_cyclic_flats(z)}, detail);
  }
  const Matroid m = from_cyclic_flats(z);
  const std::string origin = "NotkExample(" + std::to_string(k) + ")";
  if (cyclic_flats(m).size() != z.entries.size()) return failed(m, origin, "cyclic flats differ from the table");
  const ClassVerdict before = is_k_closure_laminar(m, k);
  if (!before.holds) return failed(m, origin, describe(m, before));
  const Matroid me = contract(m, Subset::single(m.index_of("e")));
  const ClassVerdict after = is_k_closure_laminar(me, k);
  if (after.holds) return failed({serialize_matroid(m), serialize_matroid(me)}, origin + "/e is still closure-laminar");
  return passed(origin + ": " + std::to_string(m.size()) + " elements, rank " + std::to_string(m.rank()) +
                "; M/e: " + describe(me, after));
}

Outcome thm_bdm_roundtrip(const Ctx& ctx) {
  for (const auto& e : ctx.corpus()) {
    const CyclicFlatFamily z = cyclic_flat_family(e.matroid);
    if (auto v = validate_cyclic_flats(z)) {
      return failed(e.matroid, e.origin, "own cyclic flats fail " + std::string(to_string(v->axiom)));
    }
    if (from_cyclic_flats(z) != e.matroid) return failed(e.matroid, e.origin, "round trip changed the matroid");
    SetFamily a = circuits_from_cyclic_flats(z), b = circuits(e.matroid);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return failed(e.matroid, e.origin, "circuits from cyclic flats differ");
  }
  const CyclicFlatFamily bad = notk_cyclic_flats(3);
  const auto v = validate_cyclic_flats(bad);
  if (!v) return failed({serialize_cyclic_flats(bad)}, "the k=3 table was accepted");
  return passed(count_of(ctx.corpus().size(), "corpus matroids") + " round-trip; k=3 table rejected (" +
                std::string(to_string(v->axiom)) + ")");
}

Outcome excluded_battery(const std::vector<std::tuple<std::string, Matroid, ClassPredicate>>& items) {
  for (const auto& [name, m, p] : items) {
    const ExcludedMinorReport r = excluded_minor_report(m, p);
    if (r.excluded_minor) continue;
    std::string detail = name + " is not an excluded minor for " + to_string(p) + ": ";
    if (r.in_class) {
      detail += "it is in the class";
    } else {
      detail += "minor (delete " + fmt(m, r.failing_minor->delete_set) + ", contract " +
                fmt(m, r.failing_minor->contract_set) + ") is also outside";
    }
    return failed(m, name, detail);
  }
  return passed(count_of(items.size(), "(matroid, class) pairs") + " certified");
}

std::string param_name(const char* fam, int n, int k) {
  return std::string(fam) + std::to_string(n) + "(" + std::to_string(k) + ")";
}

Outcome lem_mnk(const Ctx&) {
  std::vector<std::tuple<std::string, Matroid, ClassPredicate>> items;
  for (int k = 0; k <= 4; ++k) {
    for (int n = std::max(4, k + 2); 2 * n - k <= 12; ++n) {
      const Matroid m = named(NamedFamily::kMn, n, k);
      items.emplace_back(param_name("M", n, k), m, ClassPredicate{ClassKind::kKLaminar, k});
      items.emplace_back(param_name("M", n, k), m, ClassPredicate{ClassKind::kKClosureLaminar, k});
    }
  }
  return excluded_battery(items);
}

Outcome lem_therest(const Ctx&) {
  std::vector<std::tuple<std::string, Matroid, ClassPredicate>> items;
  const Matroid minus = named(NamedFamily::kMK23Minus);
  items.emplace_back("MK23minus", minus, ClassPredicate{ClassKind::kKLaminar, 2});
  items.emplace_back("MK23minus", minus, ClassPredicate{ClassKind::kKClosureLaminar, 2});
  for (int k = 2; k <= 4; ++k) {
    for (int n = k + 3; 2 * n - k <= 12; ++n) {
      items.emplace_back(param_name("N", n, k), named(NamedFamily::kNn, n, k), ClassPredicate{ClassKind::kKLaminar, k});
    }
    for (int n = k + 2; 2 * n - k + 1 <= 12; ++n) {
      items.emplace_back(param_name("P", n, k), named(NamedFamily::kPn, n, k),
                         ClassPredicate{ClassKind::kKClosureLaminar, k});
    }
  }
  return excluded_battery(items);
}

Outcome lem_obvious(const Ctx& ctx) {
  std::size_t pairs = 0;
  for (const auto& e : ctx.corpus()) {
    const Matroid& m = e.matroid;
    const SetFamily cs = circuits(m);
    for (Subset c : cs) {
      const Subset cl = closure(m, c);
      for (Subset d : cs) {
        if (c == d) continue;
        ++pairs;
        if (!d.is_subset_of(cl) && (d - cl).size() < 2) {
          return failed(m, e.origin, "(i) C = " + fmt(m, c) + ", D = " + fmt(m, d) + ": |D - cl(C)| = 1");
        }
        if ((d - c).size() != 1) continue;
        for (Subset other : cs) {
          if (other == c || other == d || !other.is_subset_of(c | d)) continue;
          if (!(c - d).is_subset_of(other)) {
            return failed(m, e.origin, "(ii) C = " + fmt(m, c) + ", D = " + fmt(m, d) + ", D' = " + fmt(m, other));
          }
        }
      }
    }
  }
  return passed(count_of(pairs, "ordered circuit pairs"));
}

std::vector<Target> two_laminar_targets() {
  return {target("MK23minus", named(NamedFamily::kMK23Minus)), target("M4(2)", named(NamedFamily::kMn, 4, 2)),
          target("M5(2)", named(NamedFamily::kMn, 5, 2)), target("N5(2)", named(NamedFamily::kNn, 5, 2))};
}

std::vector<Target> two_closure_targets() {
  return {target("MK23minus", named(NamedFamily::kMK23Minus)), target("M4(2)", named(NamedFamily::kMn, 4, 2)),
          target("M5(2)", named(NamedFamily::kMn, 5, 2)), target("P4(2)", named(NamedFamily::kPn, 4, 2))};
}

bool two_laminar(const Matroid& m) { return is_k_laminar(m, 2).holds; }
bool two_closure(const Matroid& m) { return is_k_closure_laminar(m, 2).holds; }

Outcome thm_em2lm(const Ctx& ctx) {
  return excluded_minor_sweep(ctx, two_laminar_targets(), "2-laminar", two_laminar);
}

Outcome thm_em2lcm(const Ctx& ctx) {
  return excluded_minor_sweep(ctx, two_closure_targets(), "2-closure-laminar", two_closure);
}

Outcome prop_rank_k1(const Ctx& ctx) {
  std::size_t pairs = 0;
  for (const auto& e : ctx.corpus()) {
    const Matroid& m = e.matroid;
    for (int k = std::max(0, m.rank() - 1); k <= m.rank() + 1; ++k) {
      ++pairs;
      const ClassVerdict a = is_k_laminar(m, k), b = is_k_closure_laminar(m, k);
      if (!a.holds) return failed(m, e.origin, describe(m, a));
      if (!b.holds) return failed(m, e.origin, describe(m, b));
    }
  }
  return passed(count_of(pairs, "(matroid, k >= r-1) pairs"));
}

Outcome lem_nb(const Ctx&) {
  const Matroid minus = named(NamedFamily::kMK23Minus);
  if (is_binary(minus)) return failed(minus, "MK23minus", "is binary");
  if (!is_ternary(minus)) return failed(minus, "MK23minus", "is not ternary");
  auto expect_uniform = [](const Matroid& host, const std::string& name, Subset del, int r, int n) -> Outcome {
    const Matroid u = uniform(r, n);
    const Matroid minor = delete_elements(host, del);
    if (!is_isomorphic(minor, u)) {
      return failed(host, name, "deleting " + fmt(host, del) + " does not give U" + std::to_string(r) + "," +
                                    std::to_string(n));
    }
    if (!has_minor(host, u)) return failed(host, name, "minor search misses U" + std::to_string(r) + "," + std::to_string(n));
    return passed("");
  };
  // M4(2) is M(K23), whose cycles all have length 4, so it has no U45 minor.
  for (int n = 5; n <= 6; ++n) {
    const Matroid mn = named(NamedFamily::kMn, n, 2);
    if (auto o = expect_uniform(mn, param_name("M", n, 2), mn.subset_of({"p1"}), n, 2 * n - 3); !o.pass) return o;
  }
  if (has_minor(named(NamedFamily::kMn, 4, 2), uniform(4, 5))) {
    return failed(named(NamedFamily::kMn, 4, 2), "M4(2)", "unexpected U45 minor");
  }
  for (int n = 4; n <= 6; ++n) {
    const Matroid pn = named(NamedFamily::kPn, n, 2);
    if (auto o = expect_uniform(pn, param_name("P", n, 2), pn.subset_of({"c1", "c2"}), n, 2 * n - 3); !o.pass) return o;
  }
  for (int n = 5; n <= 6; ++n) {
    const Matroid nn = named(NamedFamily::kNn, n, 2);
    if (auto o = expect_uniform(nn, param_name("N", n, 2), nn.subset_of({"c1", "c2"}), n, 2 * n - 4); !o.pass) return o;
  }
  return passed("MK23minus non-binary ternary; U_{n,2n-3} in M_n(2) (n=5,6) and P_n(2) (n=4..6), none in M4(2); U_{n,2n-4} in N_n(2) (n=5,6)");
}

Matroid u24() { return uniform(2, 4); }

Outcome binary_corollary(const Ctx& ctx, const std::string& last_name, const Matroid& last,
                         const std::function<bool(const Matroid&)>& in_two) {
  const std::vector<Target> targets{target("U24", u24()), target("MK23", named(NamedFamily::kMK23)),
                                    target(last_name, last)};
  return excluded_minor_sweep(ctx, targets, "binary and 2-" + std::string(last_name == "N5(2)" ? "laminar" : "closure-laminar"),
                              [&](const Matroid& m) { return is_binary(m) && in_two(m); });
}

Outcome ternary_corollary(const Ctx& ctx, const std::string& last_name, const Matroid& last,
                          const std::function<bool(const Matroid&)>& in_two) {
  const std::vector<Target> targets{target("U25", uniform(2, 5)),
                                    target("U35", uniform(3, 5)),
                                    target("F7", named(NamedFamily::kF7)),
                                    target("MK23minus", named(NamedFamily::kMK23Minus)),
                                    target("MK23", named(NamedFamily::kMK23)),
                                    target(last_name, last)};
  return excluded_minor_sweep(ctx, targets, "ternary and 2-" + std::string(last_name == "N5(2)" ? "laminar" : "closure-laminar"),
                              [&](const Matroid& m) { return is_ternary(m) && in_two(m); });
}

// Up to 8 elements, graphic means no U24, F7 or F7* minor: the other two
// excluded minors for graphic matroids have 9 and 10 elements.
bool graphic_up_to_8(const Matroid& m) {
  static const std::vector<Target> excluded{target("U24", u24()), target("F7", named(NamedFamily::kF7)),
                                            target("F7star", named(NamedFamily::kF7Star))};
  return !first_listed_minor(m, excluded).has_value();
}

Outcome graphic_corollary(const Ctx& ctx, const std::vector<Target>& targets, const std::string& class_name,
                          const std::function<bool(const Matroid&)>& in_two) {
  std::size_t graphs = 0;
  for (int v = 1; v <= 5; ++v) {
    for (const SimpleGraph& g : nonisomorphic_simple_graphs(v)) {
      const Matroid m = cycle_matroid(g.to_multigraph());
      ++graphs;
      const bool member = in_two(m);
      const auto minor = first_listed_minor(m, targets);
      if (member == minor.has_value()) {
        return failed(m, "graph on " + std::to_string(v) + " vertices",
                      (member ? "graphic and " + class_name + " but has minor " + *minor
                              : "not " + class_name + " yet no minor among " + names(targets)));
      }
    }
  }
  for (const auto& e : ctx.corpus()) {
    if (e.source == CorpusSource::kGraphic && e.matroid.size() <= 8 && !graphic_up_to_8(e.matroid)) {
      return failed(e.matroid, e.origin, "cycle matroid fails the graphic test");
    }
  }
  Outcome sweep = excluded_minor_sweep(ctx, targets, "graphic and " + class_name,
                                       [&](const Matroid& m) { return graphic_up_to_8(m) && in_two(m); });
  if (sweep.pass) sweep.summary = count_of(graphs, "unlabelled graphs on <= 5 vertices") + "; " + sweep.summary;
  return sweep;
}

Outcome graph_shape_sweep(const Ctx& ctx, const std::function<bool(const Matroid&)>& in_class,
                          const std::function<bool(const SimpleGraph&)>& shape, const std::string& class_name) {
  std::vector<SimpleGraph> graphs;
  for (int v = 2; v <= 5; ++v) {
    for (SimpleGraph& g : all_simple_graphs(v)) {
      if (is_two_connected(g)) graphs.push_back(std::move(g));
    }
  }
  const std::size_t exhaustive = graphs.size();
  for (SimpleGraph& g : sample_two_connected(6, 500, ctx.seed)) graphs.push_back(std::move(g));
  std::size_t members = 0;
  for (const SimpleGraph& g : graphs) {
    const Matroid m = cycle_matroid(g.to_multigraph());
    const bool member = in_class(m);
    members += member;
    if (member != shape(g)) {
      return failed(m, "graph on " + std::to_string(g.vertices) + " vertices",
                    member ? class_name + " but not of the listed shape" : "listed shape but not " + class_name);
    }
  }
  return passed(count_of(exhaustive, "labelled 2-connected graphs on <= 5 vertices") + " + 500 six-vertex samples, " +
                std::to_string(members) + " " + class_name);
}

Outcome thm_pav1(const Ctx& ctx) {
  std::size_t paving = 0;
  for (const auto& e : ctx.corpus()) {
    const Matroid& m = e.matroid;
    if (!is_paving(m)) continue;
    ++paving;
    for (int k = 0; k <= m.rank() + 1; ++k) {
      const ClassVerdict a = is_k_laminar(m, k), b = is_k_closure_laminar(m, k);
      if (a.holds != b.holds) return failed(m, e.origin, describe(m, a) + "; " + describe(m, b));
    }
  }
  return passed(count_of(paving, "paving corpus matroids") + ", all k");
}

Outcome cor_t2lp(const Ctx& ctx) {
  const std::vector<Target> targets{target("U01+U22", direct_sum(uniform(0, 1), uniform(2, 2))),
                                    target("MK23minus", named(NamedFamily::kMK23Minus)),
                                    target("M4(2)", named(NamedFamily::kMn, 4, 2)),
                                    target("M5(2)", named(NamedFamily::kMn, 5, 2))};
  std::size_t seen = 0;
  for (const auto& e : ctx.corpus()) {
    const Matroid& m = e.matroid;
    if (m.size() > 8) continue;
    ++seen;
    const bool paving = is_paving(m);
    const bool i = paving && two_laminar(m);
    const bool ii = paving && two_closure(m);
    const auto minor = first_listed_minor(m, targets);
    if (i != ii || i == minor.has_value()) {
      return failed(m, e.origin, "(i) " + yes_no(i) + ", (ii) " + yes_no(ii) + ", listed minor: " +
                                     minor.value_or("none"));
    }
  }
  return passed(count_of(seen, "corpus matroids") + " agree on (i), (ii), (iii)");
}

struct Registered {
  const char* id;
  std::function<Outcome(const Ctx&)> run;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r{
      {"prop-nested-circuits", prop_nested_circuits},
      {"thm-laminar-circuits", thm_laminar_circuits},
      {"cor-ham-laminar", cor_ham_laminar},
      {"lem-kcl-equiv", lem_kcl_equiv},
      {"sec1-pc-example", sec1_pc_example},
      {"prop-baby", prop_baby},
      {"lem-klam-minor-closed", lem_klam_minor_closed},
      {"thm-cl23-minor-closed", thm_cl23_minor_closed},
      {"lem-hamcir", lem_hamcir},
      {"thm-notk-k4", [](const Ctx& c) { return notk(c, 4); }},
      {"thm-notk-k5", [](const Ctx& c) { return notk(c, 5); }},
      {"thm-bdm-roundtrip", thm_bdm_roundtrip},
      {"lem-mnk", lem_mnk},
      {"lem-therest", lem_therest},
      {"lem-obvious", lem_obvious},
      {"thm-em2lm", thm_em2lm},
      {"thm-em2lcm", thm_em2lcm},
      {"prop-rank-k1", prop_rank_k1},
      {"lem-nb", lem_nb},
      {"cor-binary-2lam",
       [](const Ctx& c) { return binary_corollary(c, "N5(2)", named(NamedFamily::kNn, 5, 2), two_laminar); }},
      {"cor-binary-2clam",
       [](const Ctx& c) { return binary_corollary(c, "P4(2)", named(NamedFamily::kPn, 4, 2), two_closure); }},
      {"cor-ternary-2lam",
       [](const Ctx& c) { return ternary_corollary(c, "N5(2)", named(NamedFamily::kNn, 5, 2), two_laminar); }},
      {"cor-ternary-2clam",
       [](const Ctx& c) { return ternary_corollary(c, "P4(2)", named(NamedFamily::kPn, 4, 2), two_closure); }},
      {"cor-graphic-2lam",
       [](const Ctx& c) {
         return graphic_corollary(c,
                                  {target("U24", u24()), target("MK23", named(NamedFamily::kMK23)),
                                   target("F7", named(NamedFamily::kF7)),
                                   target("MstarK33", named(NamedFamily::kMStarK33)),
                                   target("N5(2)", named(NamedFamily::kNn, 5, 2))},
                                  "2-laminar", two_laminar);
       }},
      {"cor-graphic-2clam",
       [](const Ctx& c) {
         return graphic_corollary(c,
                                  {target("U24", u24()), target("MK23", named(NamedFamily::kMK23)),
                                   target("F7", named(NamedFamily::kF7)),
                                   target("P4(2)", named(NamedFamily::kPn, 4, 2))},
                                  "2-closure-laminar", two_closure);
       }},
      {"lem-outerplanar",
       [](const Ctx& c) { return graph_shape_sweep(c, two_laminar, is_two_laminar_graph_shape, "2-laminar"); }},
      {"prop-one-chord",
       [](const Ctx& c) { return graph_shape_sweep(c, two_closure, is_one_chord_graph_shape, "2-closure-laminar"); }},
      {"thm-pav1", thm_pav1},
      {"cor-t2lp", cor_t2lp},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& r : registry()) out.emplace_back(r.id);
    return out;
  }();
  return ids;
}

bool is_check_registered(std::string_view id) {
  const auto& ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CheckResult run_check(std::string_view id, const CheckOptions& options) {
  const auto& r = registry();
  const auto it = std::find_if(r.begin(), r.end(), [&](const Registered& x) { return id == x.id; });
  if (it == r.end()) throw std::invalid_argument("unknown check id '" + std::string(id) + "'");
  CheckResult result;
  result.check_id = it->id;
  const auto start = std::chrono::steady_clock::now();
  const Ctx ctx{options, check_seed(options.seed, id)};
  Outcome o;
  try {
    o = it->run(ctx);
  } catch (const std::exception& ex) {
    o = failed({}, std::string("check aborted: ") + ex.what());
  }
  result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  result.status = o.pass ? CheckStatus::kPass : CheckStatus::kFail;
  result.summary = std::move(o.summary);
  result.witness = std::move(o.witness);
  return result;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const CheckOptions& options, int jobs) {
  for (const auto& id : ids) {
    if (!is_check_registered(id)) throw std::invalid_argument("unknown check id '" + id + "'");
  }
  std::vector<CheckResult> results(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) results[i] = run_check(ids[i], options);
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(ids.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace lamina
