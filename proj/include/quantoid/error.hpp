#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quantoid {

enum class Errc {
  MissingSubset,
  DuplicateSubset,
  DuplicateLabel,
  InvalidLabel,
  GroundSetTooLarge,
  MalformedRational,
  MalformedDocument,
  UnknownElement,
  NonpositiveScale,
  NotAPolymatroid,
  NotAPolyquantoid,
  NotAMatroid,
  NotIdeal,
  NotIntegerPolymatroid,
  NotIntegerPolyquantoid,
  OddSingletonValue,
  ExpansionTooLarge,
  InvalidDistribution,
  NotNormalized,
  DimensionMismatch,
  SnapFailed,
  InvalidArgument,
  InternalInvariant,
};

std::string_view errc_name(Errc code) noexcept;

/// Library exception. `what()` renders as "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace quantoid
