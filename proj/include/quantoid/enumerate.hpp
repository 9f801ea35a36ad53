#pragma once

#include <optional>
#include <vector>

#include "quantoid/classify.hpp"
#include "quantoid/set_function.hpp"

namespace quantoid {

/// Streams every integer polymatroid or polyquantoid on the ground set
/// {1, ..., n} whose values lie in [0, cap], in lexicographic order of the
/// value table (mask order). Backtracks over the table, checking each axiom
/// as soon as the largest subset it mentions has been assigned.
///
/// Single consumer; not thread-safe.
class Enumerator {
 public:
  Enumerator(Kind kind, int n, int cap);

  std::optional<SetFunction> next();

 private:
  bool feasible(Mask m) const;

  Kind kind_;
  GroundSet ground_;
  int cap_;
  std::vector<int> values_;
  bool started_ = false;
  bool exhausted_ = false;
};

std::vector<SetFunction> enumerate(Kind kind, int n, int cap);

}  // namespace quantoid
