#include "starring/error.hpp"

namespace starring {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeOrder: return "NonPrimeOrder";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::InternalNonReal: return "InternalNonReal";
    case ErrorCode::NonRationalNorm: return "NonRationalNorm";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::InfiniteUnitGroup: return "InfiniteUnitGroup";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidShiftVector: return "InvalidShiftVector";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SymbolNotInRing: return "SymbolNotInRing";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::SymbolNotInRing:
    case ErrorCode::NegativeExponent:
    case ErrorCode::InvalidInput:
    case ErrorCode::MissingParameter:
    case ErrorCode::NonPrimeOrder:
      return true;
    default:
      return false;
  }
}

}  // namespace starring
