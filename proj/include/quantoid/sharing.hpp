#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "quantoid/classify.hpp"
#include "quantoid/set_function.hpp"

namespace quantoid {

/// Family of subsets, sorted by mask.
using Family = std::vector<Mask>;

/// Inclusion-minimal members of a family.
Family minimal_members(const Family& family);

/// Rank function h = t * r split into a positive scale and a matroid.
struct Extraction {
  Rational t;
  SetFunction rank;
};

struct SharingReport {
  int dealer = 0;
  Kind kind = Kind::polymatroid;
  bool perfect = false;
  /// Subsets of N \ dealer whose increment marks them authorized. Computed
  /// whether or not the dealer is perfect.
  Family authorized;
  Family minimal_authorized;
  /// Essential elements; empty unless the dealer is perfect.
  Mask essential = 0;
  bool ideal = false;
  /// Present iff ideal.
  std::optional<Extraction> extraction;
};

/// Exhaustive secret-sharing analysis of `dealer` in a polymatroid or
/// polyquantoid. For polyquantoids the verdicts coincide with those of the
/// polymatroid hat(f); debug mode asserts this.
///
/// Throws NotAPolymatroid / NotAPolyquantoid, UnknownElement.
SharingReport analyze(const SetFunction& f, int dealer, Kind kind);
SharingReport analyze(const SetFunction& f, std::string_view dealer, Kind kind);

/// For an ideal dealer of polymatroid h, returns (t, r) with r a matroid and
/// h = t r. When h(dealer) = 0 the polymatroid is zero and t = 1.
/// Throws NotIdeal naming the violated clause.
Extraction extract_matroid(const SetFunction& h, int dealer);
Extraction extract_matroid(const SetFunction& h, std::string_view dealer);

/// For an ideal dealer of polyquantoid e, returns (t, r) with r a tight
/// selfdual matroid and e = t vee(r).
Extraction extract_sd_matroid(const SetFunction& e, int dealer);
Extraction extract_sd_matroid(const SetFunction& e, std::string_view dealer);

struct MatroidStructure {
  SetFunction rank;
  Family circuits;
  Mask loops = 0;
  Mask coloops = 0;
  /// Every two distinct elements share a circuit. Ground sets with fewer
  /// than two elements count as connected.
  bool connected = false;
};

/// Throws NotAMatroid.
MatroidStructure matroid_structure(const SetFunction& r);

/// { I subset of N \ dealer : some circuit C has dealer in C and C within
/// dealer + I }. Throws NotAMatroid, UnknownElement.
Family access_from_circuits(const SetFunction& r, int dealer);
Family access_from_circuits(const SetFunction& r, std::string_view dealer);

}  // namespace quantoid
