#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quantoid/bits.hpp"
#include "quantoid/error.hpp"
#include "quantoid/ground_set.hpp"
#include "quantoid/rational.hpp"

namespace quantoid {

/// Dense table of values on all subsets of a ground set, indexed by mask.
/// Immutable once constructed.
template <class Scalar>
class BasicSetFunction {
 public:
  using scalar_type = Scalar;

  BasicSetFunction() : values_(1, Scalar(0)) {}

  BasicSetFunction(GroundSet ground, std::vector<Scalar> values)
      : ground_(std::move(ground)), values_(std::move(values)) {
    if (values_.size() != ground_.subset_count()) {
      throw Error(Errc::InvalidArgument,
                  "value table has " + std::to_string(values_.size()) + " entries, expected " +
                      std::to_string(ground_.subset_count()));
    }
  }

  /// Tabulates f(mask) over all subsets.
  template <class F>
  static BasicSetFunction generate(GroundSet ground, F&& f) {
    std::vector<Scalar> values;
    values.reserve(ground.subset_count());
    for (std::size_t m = 0; m < ground.subset_count(); ++m) {
      values.emplace_back(f(static_cast<Mask>(m)));
    }
    return BasicSetFunction(std::move(ground), std::move(values));
  }

  static BasicSetFunction zero(GroundSet ground) {
    std::vector<Scalar> values(ground.subset_count(), Scalar(0));
    return BasicSetFunction(std::move(ground), std::move(values));
  }

  const GroundSet& ground() const noexcept { return ground_; }
  int size() const noexcept { return ground_.size(); }
  Mask full() const noexcept { return ground_.full(); }

  const Scalar& operator[](Mask subset) const { return values_[subset]; }
  const Scalar& at(Mask subset) const { return values_.at(subset); }
  const Scalar& operator()(std::string_view key) const { return values_[ground_.parse_key(key)]; }
  const Scalar& singleton(int i) const { return values_[bit(i)]; }

  std::span<const Scalar> values() const noexcept { return values_; }

  bool operator==(const BasicSetFunction& other) const {
    return ground_ == other.ground_ && values_ == other.values_;
  }

 private:
  GroundSet ground_;
  std::vector<Scalar> values_;
};

using SetFunction = BasicSetFunction<Rational>;

/// Builds a set function from (subset key, rational text) pairs. Throws
/// DuplicateLabel, InvalidLabel, GroundSetTooLarge, UnknownElement,
/// DuplicateSubset, MissingSubset or MalformedRational.
SetFunction build(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& values);

/// Same, from exact values listed in mask order.
SetFunction build(std::vector<std::string> labels, std::vector<Rational> values);

/// Pointwise t * f. Throws NonpositiveScale unless t > 0.
template <class Scalar>
BasicSetFunction<Scalar> scale(const BasicSetFunction<Scalar>& f, const Scalar& t) {
  if (!(t > 0)) throw Error(Errc::NonpositiveScale, "scale factor must be positive");
  return BasicSetFunction<Scalar>::generate(f.ground(), [&](Mask m) { return Scalar(f[m] * t); });
}

inline SetFunction scale(const SetFunction& f, long t) { return scale(f, Rational(t)); }

/// f with its ground set relabeled; values are unchanged.
template <class Scalar>
BasicSetFunction<Scalar> relabel(const BasicSetFunction<Scalar>& f, GroundSet ground) {
  if (ground.size() != f.size()) {
    throw Error(Errc::InvalidArgument, "relabel: ground set size mismatch");
  }
  return BasicSetFunction<Scalar>(std::move(ground),
                                  std::vector<Scalar>(f.values().begin(), f.values().end()));
}

/// True when some bijection of the ground sets carries f onto g. Brute force
/// over permutations; limited to ten elements.
bool isomorphic(const SetFunction& f, const SetFunction& g);

/// Multi-line human-readable table, one "{key}: value" per line.
std::string to_string(const SetFunction& f);

}  // namespace quantoid
