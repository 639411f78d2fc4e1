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

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

namespace lamina {

/// Largest ground set whose full rank table is kept explicitly.
inline constexpr int kMaxElements = 16;

/// A subset of a ground set {0, ..., n-1}, stored as a bitmask.
///
/// Ordering (operator<=>) is by raw mask value; the canonical family order
/// used throughout the library is `size_then_mask_less`.
class Subset {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }
  static constexpr Subset single(int e) { return Subset(std::uint32_t{1} << e); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(Subset other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(Subset other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr Subset with(int e) const { return Subset(bits_ | (std::uint32_t{1} << e)); }
  constexpr Subset without(int e) const {
    return Subset(bits_ & ~(std::uint32_t{1} << e));
  }
  /// Index of the smallest element; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr Subset& operator&=(Subset o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr Subset& operator-=(Subset o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Canonical order for set families: by cardinality, then by mask value.
constexpr bool size_then_mask_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

/// Ordered list of pairwise distinct subsets.
using SetFamily = std::vector<Subset>;

/// Calls `fn(sub)` for every subset of `set`, including the empty set and
/// `set` itself, in increasing mask order.
template <typename Fn>
constexpr void for_each_subset(Subset set, Fn&& fn) {
  const std::uint32_t full = set.bits();
  std::uint32_t sub = 0;
  while (true) {
    fn(Subset(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

/// Calls `fn(sub)` for every `size`-element subset of `set`, in increasing
/// mask order.
template <typename Fn>
void for_each_subset_of_size(Subset set, int size, Fn&& fn) {
  if (size < 0 || size > set.size()) return;
  std::vector<int> elems(set.begin(), set.end());
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[i] = i;
  const int m = static_cast<int>(elems.size());
  // Lexicographic combinations of positions; with ascending element indices
  // this is not mask order, so collect and sort.
  std::vector<Subset> out;
  while (true) {
    std::uint32_t bits = 0;
    for (int p : pick) bits |= std::uint32_t{1} << elems[p];
    out.push_back(Subset(bits));
    int i = size - 1;
    while (i >= 0 && pick[i] == m - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  for (Subset s : out) fn(s);
}

}  // namespace lamina
