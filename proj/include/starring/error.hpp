#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starring {

enum class ErrorCode {
  NonPrimeOrder,
  MissingParameter,
  RingMismatch,
  InternalNonReal,
  NonRationalNorm,
  ZeroElement,
  InfiniteUnitGroup,
  DivisionByZero,
  UnsupportedRing,
  BothZero,
  EnumerationBoundExceeded,
  ModulusMismatch,
  NotInvertible,
  OrderMismatch,
  OrderTooLarge,
  DimensionMismatch,
  InvalidShiftVector,
  SyntaxError,
  SymbolNotInRing,
  NegativeExponent,
  InvalidInput,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Parse and usage failures map to CLI exit code 2, everything else to 1.
bool is_usage_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace starring
