#pragma once

#include <vector>

#include "quantoid/set_function.hpp"

namespace quantoid {

namespace detail {

// Sum of singleton values over each subset, scaled by `factor`.
template <class Scalar>
std::vector<Scalar> singleton_sums(const BasicSetFunction<Scalar>& f, const Scalar& factor) {
  std::vector<Scalar> sum(f.ground().subset_count(), Scalar(0));
  for (std::size_t m = 1; m < sum.size(); ++m) {
    const Mask mask = static_cast<Mask>(m);
    sum[m] = sum[mask & (mask - 1)] + factor * f.singleton(std::countr_zero(mask));
  }
  return sum;
}

}  // namespace detail

/// e^(I) = e(I) + sum_{i in I} e(i). Carries polyquantoids onto tight
/// selfdual polymatroids; inverse of vee().
template <class Scalar>
BasicSetFunction<Scalar> hat(const BasicSetFunction<Scalar>& e) {
  const auto sum = detail::singleton_sums(e, Scalar(1));
  return BasicSetFunction<Scalar>::generate(e.ground(),
                                            [&](Mask m) { return Scalar(e[m] + sum[m]); });
}

/// h_v(I) = h(I) - 1/2 sum_{i in I} h(i). Inverse of hat().
template <class Scalar>
BasicSetFunction<Scalar> vee(const BasicSetFunction<Scalar>& h) {
  const Scalar half = Scalar(1) / Scalar(2);
  const auto sum = detail::singleton_sums(h, half);
  return BasicSetFunction<Scalar>::generate(h.ground(),
                                            [&](Mask m) { return Scalar(h[m] - sum[m]); });
}

}  // namespace quantoid
