#include "quantoid/catalog.hpp"

#include <algorithm>

namespace quantoid::catalog {

SetFunction uniform_matroid(int k, int n) {
  return SetFunction::generate(GroundSet::numbered(n),
                               [&](Mask m) { return Rational(std::min(cardinality(m), k)); });
}

SetFunction free_matroid(int n) {
  return SetFunction::generate(GroundSet::numbered(n),
                               [](Mask m) { return Rational(cardinality(m)); });
}

SetFunction zero(int n) { return SetFunction::zero(GroundSet::numbered(n)); }

SetFunction bell() { return ghz(2); }

SetFunction ghz(int n) {
  const Mask all = full_mask(n);
  return SetFunction::generate(GroundSet::numbered(n),
                               [&](Mask m) { return Rational(m != 0 && m != all ? 1 : 0); });
}

}  // namespace quantoid::catalog
