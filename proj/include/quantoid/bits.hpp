#pragma once

#include <bit>
#include <cstdint>

namespace quantoid {

/// Subset of a ground set; element i is bit i.
using Mask = std::uint32_t;

constexpr Mask bit(int i) noexcept { return Mask{1} << i; }
constexpr bool contains(Mask set, int i) noexcept { return (set >> i) & 1u; }
constexpr int cardinality(Mask set) noexcept { return std::popcount(set); }
constexpr bool is_subset(Mask sub, Mask super) noexcept { return (sub & ~super) == 0; }
constexpr Mask full_mask(int n) noexcept { return n == 0 ? 0 : (~Mask{0} >> (32 - n)); }

/// Calls f(sub) for every subset of `set`, including the empty set and `set`.
template <class F>
void for_each_subset(Mask set, F&& f) {
  Mask sub = set;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & set;
  }
}

/// Calls f(i) for every element of `set` in increasing order.
template <class F>
void for_each_element(Mask set, F&& f) {
  while (set) {
    f(std::countr_zero(set));
    set &= set - 1;
  }
}

}  // namespace quantoid
