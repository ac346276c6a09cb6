#include "zerosum/error.hpp"

namespace zerosum {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::EmptyTuple: return "EmptyTuple";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::ZeroDimension: return "ZeroDimension";
    case Errc::DependentPrefix: return "DependentPrefix";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroPoly: return "ZeroPoly";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::TooManyGenerators: return "TooManyGenerators";
    case Errc::DependentInput: return "DependentInput";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ScanBudgetExceeded: return "ScanBudgetExceeded";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace zerosum
