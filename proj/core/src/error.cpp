#include "lrclab/error.hpp"

namespace lrclab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::OrderExceedsCap: return "OrderExceedsCap";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::UnknownField: return "UnknownField";
    case Errc::InverseOfZero: return "InverseOfZero";
    case Errc::ZeroMatrix: return "ZeroMatrix";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::RangeError: return "RangeError";
    case Errc::NoLocality: return "NoLocality";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::NegativeSlack: return "NegativeSlack";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::EmptyResult: return "EmptyResult";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::CeilingMismatch: return "CeilingMismatch";
    case Errc::DegenerateDistance: return "DegenerateDistance";
    case Errc::NoDisjointPartition: return "NoDisjointPartition";
    case Errc::NoFullSizeRecoverySet: return "NoFullSizeRecoverySet";
    case Errc::RegimeViolated: return "RegimeViolated";
    case Errc::ConditionUnmet: return "ConditionUnmet";
    case Errc::WindowEmpty: return "WindowEmpty";
    case Errc::OutOfTable: return "OutOfTable";
    case Errc::Unsupported: return "Unsupported";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ParameterUnsupported: return "ParameterUnsupported";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lrclab
