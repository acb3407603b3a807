#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrclab {

/// Domain error categories. Every failure the library reports maps to one of these.
enum class Errc {
  NotPrime,
  OrderExceedsCap,
  NotIrreducible,
  UnknownField,
  InverseOfZero,
  ZeroMatrix,
  DimensionMismatch,
  BudgetExceeded,
  RangeError,
  NoLocality,
  SearchBudgetExceeded,
  NegativeSlack,
  NotDivisible,
  InvariantViolation,
  EmptyResult,
  PreconditionFailed,
  CeilingMismatch,
  DegenerateDistance,
  NoDisjointPartition,
  NoFullSizeRecoverySet,
  RegimeViolated,
  ConditionUnmet,
  WindowEmpty,
  OutOfTable,
  Unsupported,
  CapExceeded,
  ParameterUnsupported,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace lrclab
