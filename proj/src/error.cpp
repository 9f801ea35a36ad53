#include "quantoid/error.hpp"

namespace quantoid {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MissingSubset: return "MissingSubset";
    case Errc::DuplicateSubset: return "DuplicateSubset";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::GroundSetTooLarge: return "GroundSetTooLarge";
    case Errc::MalformedRational: return "MalformedRational";
    case Errc::MalformedDocument: return "MalformedDocument";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::NonpositiveScale: return "NonpositiveScale";
    case Errc::NotAPolymatroid: return "NotAPolymatroid";
    case Errc::NotAPolyquantoid: return "NotAPolyquantoid";
    case Errc::NotAMatroid: return "NotAMatroid";
    case Errc::NotIdeal: return "NotIdeal";
    case Errc::NotIntegerPolymatroid: return "NotIntegerPolymatroid";
    case Errc::NotIntegerPolyquantoid: return "NotIntegerPolyquantoid";
    case Errc::OddSingletonValue: return "OddSingletonValue";
    case Errc::ExpansionTooLarge: return "ExpansionTooLarge";
    case Errc::InvalidDistribution: return "InvalidDistribution";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SnapFailed: return "SnapFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Error";
}

Error::Error(Errc code, std::string detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace quantoid
