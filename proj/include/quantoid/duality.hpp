#pragma once

#include <type_traits>
#include <vector>

#include "quantoid/debug.hpp"
#include "quantoid/set_function.hpp"

namespace quantoid {

/// The singleton-preserving duality h -> h'. Total on all set functions:
///
///   h'(I) = h(N\I) + h(0) - h(N) + sum_{i in I} [h(i) - h(0) + h(N) - h(N\i)]
///
/// It is an involution, keeps h(0), the singleton values and the tightness
/// deficits h(N) - h(N\i), and preserves submodularity.
template <class Scalar>
BasicSetFunction<Scalar> dual(const BasicSetFunction<Scalar>& h) {
  const int n = h.size();
  const Mask all = h.full();
  const Scalar empty = h[0];
  const Scalar total = h[all];

  std::vector<Scalar> weight;
  weight.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    weight.emplace_back(h[bit(i)] - empty + total - h[all ^ bit(i)]);
  }

  // Prefix sums over subsets: sum(I) = sum(I minus lowest element) + weight.
  std::vector<Scalar> sum(h.ground().subset_count(), Scalar(0));
  for (std::size_t m = 1; m < sum.size(); ++m) {
    const Mask mask = static_cast<Mask>(m);
    const int low = std::countr_zero(mask);
    sum[m] = sum[mask & (mask - 1)] + weight[static_cast<std::size_t>(low)];
  }

  auto result = BasicSetFunction<Scalar>::generate(h.ground(), [&](Mask m) {
    return Scalar(h[all ^ m] + empty - total + sum[m]);
  });

  if constexpr (!std::is_floating_point_v<Scalar>) {
    if (debug_checks()) {
      bool normalized = (empty == 0);
      bool tight = true;
      for (int i = 0; i < n; ++i) tight = tight && (h[all ^ bit(i)] == total);
      if (normalized && tight) {
        std::vector<Scalar> singles(sum.size(), Scalar(0));
        for (std::size_t m = 1; m < singles.size(); ++m) {
          const Mask mask = static_cast<Mask>(m);
          singles[m] = singles[mask & (mask - 1)] + h[bit(std::countr_zero(mask))];
        }
        for (std::size_t m = 0; m < singles.size(); ++m) {
          const Mask mask = static_cast<Mask>(m);
          if (result[mask] != h[all ^ mask] - total + singles[m]) {
            throw Error(Errc::InternalInvariant,
                        "dual: simplified tight form disagrees at {" + h.ground().key(mask) + "}");
          }
        }
      }
    }
  }
  return result;
}

/// dual(h) == h, compared within `tol` (exactly for rationals).
template <class Scalar>
bool is_selfdual(const BasicSetFunction<Scalar>& h, const Scalar& tol = Scalar(0)) {
  const auto d = dual(h);
  for (std::size_t m = 0; m < h.ground().subset_count(); ++m) {
    const Mask mask = static_cast<Mask>(m);
    Scalar diff = d[mask] - h[mask];
    if (diff < 0) diff = -diff;
    if (diff > tol) return false;
  }
  return true;
}

}  // namespace quantoid
