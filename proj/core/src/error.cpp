#include "sptok/error.hpp"

namespace sptok {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::ParseError: return "ParseError";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::BadLength: return "BadLength";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnassignedVariable: return "UnassignedVariable";
    case Errc::NonInvertiblePoint: return "NonInvertiblePoint";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::NegativeMultiplicity: return "NegativeMultiplicity";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::UnmatchedPattern: return "UnmatchedPattern";
    case Errc::UnknownScheme: return "UnknownScheme";
    case Errc::UnknownIdentity: return "UnknownIdentity";
    case Errc::LemmaViolation: return "LemmaViolation";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::ScaleExceeded: return "ScaleExceeded";
  }
  return "Unknown";
}

}  // namespace sptok
