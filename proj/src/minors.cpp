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

#include "lamina/minors.hpp"

#include <algorithm>
#include <charconv>

#include "lamina/constructions.hpp"
#include "lamina/laminar.hpp"

namespace lamina {

namespace {

// Rank table of M/C restricted to `keep`, indexed by masks over `keep`
// renumbered in increasing order.
Matroid restrict_contract(const Matroid& m, Subset keep, Subset c) {
  std::vector<int> old_index(keep.begin(), keep.end());
  const int n = static_cast<int>(old_index.size());
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint32_t> expand(count, 0);
  std::vector<int> table(count);
  const int base = m.rank(c);
  for (std::uint32_t x = 0; x < count; ++x) {
    if (x != 0) {
      const int low = std::countr_zero(x);
      expand[x] = expand[x & (x - 1)] | (std::uint32_t{1} << old_index[low]);
    }
    table[x] = m.rank(Subset(expand[x]) | c) - base;
  }
  std::vector<std::string> labels;
  for (int e : old_index) labels.push_back(m.label(e));
  return Matroid(std::move(labels), std::move(table));
}

}  // namespace

Matroid delete_elements(const Matroid& m, Subset d) {
  if (!d.is_subset_of(m.ground())) throw std::invalid_argument("delete: set outside the ground set");
  return restrict_contract(m, m.ground() - d, Subset{});
}

Matroid contract(const Matroid& m, Subset c) {
  if (!c.is_subset_of(m.ground())) throw std::invalid_argument("contract: set outside the ground set");
  return restrict_contract(m, m.ground() - c, c);
}

Matroid apply_minor(const Matroid& m, const MinorSpec& spec) {
  if (spec.delete_set.intersects(spec.contract_set)) {
    throw std::invalid_argument("apply_minor: delete and contract sets overlap");
  }
  if (!(spec.delete_set | spec.contract_set).is_subset_of(m.ground())) {
    throw std::invalid_argument("apply_minor: set outside the ground set");
  }
  return restrict_contract(m, m.ground() - spec.delete_set - spec.contract_set, spec.contract_set);
}

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

IsoProfile::IsoProfile(const Matroid& m) : m_(m), element_fp_(static_cast<std::size_t>(m.size())) {
  for (Subset c : circuits(m)) {
    circuit_sizes_.push_back(c.size());
    for (int e : c) element_fp_[e].push_back(c.size());
  }
  std::sort(circuit_sizes_.begin(), circuit_sizes_.end());
  for (auto& fp : element_fp_) std::sort(fp.begin(), fp.end());
  flats_per_rank_.assign(static_cast<std::size_t>(m.rank() + 1), 0);
  for (Subset f : flats(m)) ++flats_per_rank_[m.rank(f)];
}

bool IsoProfile::invariants_match(const IsoProfile& other) const {
  if (m_.size() != other.m_.size() || m_.rank() != other.m_.rank()) return false;
  if (circuit_sizes_ != other.circuit_sizes_ || flats_per_rank_ != other.flats_per_rank_) return false;
  auto a = element_fp_, b = other.element_fp_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const IsoProfile& a, const IsoProfile& b,
            const std::vector<std::vector<int>>& fp_a, const std::vector<std::vector<int>>& fp_b)
      : a_(a.matroid()), b_(b.matroid()), n_(a_.size()), limit_(a_.rank() + 1),
        image_(static_cast<std::size_t>(n_), -1), used_(static_cast<std::size_t>(n_), false),
        amask_(std::size_t{1} << n_), bmask_(std::size_t{1} << n_) {
    // Candidates per element; assign elements with fewest candidates first.
    candidates_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (fp_a[i] == fp_b[j]) candidates_[i].push_back(j);
      }
      order_.push_back(i);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return candidates_[x].size() < candidates_[y].size();
    });
  }

  std::optional<Bijection> run() {
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(int level) {
    if (level == n_) return true;
    const int e = order_[level];
    const std::uint32_t top = std::uint32_t{1} << level;
    for (int f : candidates_[e]) {
      if (used_[f]) continue;
      bool ok = true;
      for (std::uint32_t s = 0; s < top; ++s) {
        const std::uint32_t am = amask_[s] | (std::uint32_t{1} << e);
        const std::uint32_t bm = bmask_[s] | (std::uint32_t{1} << f);
        amask_[s | top] = am;
        bmask_[s | top] = bm;
        // Sets larger than rank + 1 are determined by the smaller ones.
        if (std::popcount(s) + 1 <= limit_ && a_.rank(Subset(am)) != b_.rank(Subset(bm))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used_[f] = true;
      image_[e] = f;
      if (extend(level + 1)) return true;
      used_[f] = false;
      image_[e] = -1;
    }
    return false;
  }

  const Matroid& a_;
  const Matroid& b_;
  int n_;
  int limit_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> order_;
  Bijection image_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> amask_, bmask_;
};

}  // namespace

std::optional<Bijection> find_isomorphism(const IsoProfile& a, const IsoProfile& b) {
  if (!a.invariants_match(b)) return std::nullopt;
  return IsoSearch(a, b, a.element_fp_, b.element_fp_).run();
}

std::optional<Bijection> find_isomorphism(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  return find_isomorphism(IsoProfile(a), IsoProfile(b));
}

bool is_isomorphic(const Matroid& a, const Matroid& b) { return find_isomorphism(a, b).has_value(); }

// ---------------------------------------------------------------------------
// Minor search
// ---------------------------------------------------------------------------

std::optional<MinorSpec> find_minor(const Matroid& host, const IsoProfile& target) {
  const Matroid& t = target.matroid();
  const int contract_size = host.rank() - t.rank();
  const int delete_size = host.size() - t.size() - contract_size;
  if (contract_size < 0 || delete_size < 0) return std::nullopt;

  std::optional<MinorSpec> found;
  for_each_subset_of_size(host.ground(), contract_size, [&](Subset c) {
    if (found || !host.is_independent(c)) return;
    const Subset rest = host.ground() - c;
    const int base = host.rank(c);
    for_each_subset_of_size(rest, delete_size, [&](Subset d) {
      if (found) return;
      const Subset keep = rest - d;
      // Deleting d must not lower the rank of the contraction.
      if (host.rank(keep | c) - base != t.rank()) return;
      const MinorSpec spec{d, c};
      const IsoProfile candidate(apply_minor(host, spec));
      if (find_isomorphism(candidate, target)) found = spec;
    });
  });
  return found;
}

std::optional<MinorSpec> find_minor(const Matroid& host, const Matroid& target) {
  return find_minor(host, IsoProfile(target));
}

bool has_minor(const Matroid& host, const Matroid& target) { return find_minor(host, target).has_value(); }

// ---------------------------------------------------------------------------
// Class predicates
// ---------------------------------------------------------------------------

std::string to_string(const ClassPredicate& p) {
  switch (p.kind) {
    case ClassKind::kKLaminar: return std::to_string(p.k) + "-laminar";
    case ClassKind::kKClosureLaminar: return std::to_string(p.k) + "-closure-laminar";
    case ClassKind::kNested: return "nested";
    case ClassKind::kLaminar: return "laminar";
    case ClassKind::kPaving: return "paving";
    case ClassKind::kBinary: return "binary";
    case ClassKind::kTernary: return "ternary";
  }
  return "?";
}

ClassPredicate class_predicate_from_string(std::string_view name) {
  if (name == "nested") return {ClassKind::kNested};
  if (name == "laminar") return {ClassKind::kLaminar};
  if (name == "paving") return {ClassKind::kPaving};
  if (name == "binary") return {ClassKind::kBinary};
  if (name == "ternary") return {ClassKind::kTernary};
  int k = -1;
  const auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), k);
  if (ec == std::errc{} && k >= 0) {
    const std::string_view rest(ptr, static_cast<std::size_t>(name.data() + name.size() - ptr));
    if (rest == "-laminar") return {ClassKind::kKLaminar, k};
    if (rest == "-closure-laminar") return {ClassKind::kKClosureLaminar, k};
  }
  throw std::invalid_argument("unregistered class predicate '" + std::string(name) + "'");
}

bool satisfies(const Matroid& m, const ClassPredicate& p) {
  switch (p.kind) {
    case ClassKind::kKLaminar: return is_k_laminar(m, p.k).holds;
    case ClassKind::kKClosureLaminar: return is_k_closure_laminar(m, p.k).holds;
    case ClassKind::kNested: return is_nested(m).holds;
    case ClassKind::kLaminar: return is_laminar(m).holds;
    case ClassKind::kPaving: return is_paving(m);
    case ClassKind::kBinary: return is_binary(m);
    case ClassKind::kTernary: return is_ternary(m);
  }
  throw std::invalid_argument("unregistered class predicate");
}

ExcludedMinorReport excluded_minor_report(const Matroid& m, const ClassPredicate& p) {
  ExcludedMinorReport report;
  report.in_class = satisfies(m, p);
  if (report.in_class) return report;
  for (int e = 0; e < m.size(); ++e) {
    const Subset x = Subset::single(e);
    for (const MinorSpec spec : {MinorSpec{x, {}}, MinorSpec{{}, x}}) {
      if (!satisfies(apply_minor(m, spec), p)) {
        report.failing_minor = spec;
        return report;
      }
    }
  }
  report.excluded_minor = true;
  return report;
}

bool is_excluded_minor(const Matroid& m, const ClassPredicate& p) {
  return excluded_minor_report(m, p).excluded_minor;
}

bool is_binary(const Matroid& m) {
  static const IsoProfile u24(uniform(2, 4));
  return !find_minor(m, u24).has_value();
}

bool is_ternary(const Matroid& m) {
  static const std::vector<IsoProfile> excluded = [] {
    std::vector<IsoProfile> out;
    out.emplace_back(uniform(2, 5));
    out.emplace_back(uniform(3, 5));
    out.emplace_back(named_matroid(NamedFamily::kF7));
    out.emplace_back(named_matroid(NamedFamily::kF7Star));
    return out;
  }();
  for (const auto& target : excluded) {
    if (find_minor(m, target)) return false;
  }
  return true;
}

}  // namespace lamina
