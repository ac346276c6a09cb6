#ifndef ZEROSUM_ERROR_HPP
#define ZEROSUM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zerosum {

enum class Errc {
  DegreeOutOfRange,
  SpecMismatch,
  NotADivisor,
  DimensionMismatch,
  BudgetExceeded,
  EmptyTuple,
  IndexOutOfRange,
  DependentBasis,
  ZeroDimension,
  DependentPrefix,
  DivisionByZeroPoly,
  BothZero,
  ZeroPoly,
  DegreeCapExceeded,
  TooManyGenerators,
  DependentInput,
  PreconditionViolated,
  CapExceeded,
  ScanBudgetExceeded,
  ParseError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zerosum

#endif
