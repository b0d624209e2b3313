#ifndef CMKIT_ERRORS_HPP
#define CMKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmkit {

enum class Errc {
  NonDivisible,
  ZeroConstantTerm,
  NotPrime,
  TooLarge,
  EvenCharacteristic,
  Singular,
  BadZetaNumerator,
  Char2Or3Unsupported,
  NegativeClosedPointCount,
  DivisionByZero,
  NotSplit,
  ZeroElement,
  NotOrdinary,
  DegreeOutOfRange,
  MissingBase,
  BadInput,
};

const char* errc_name(Errc code);

/// Domain-level failure carrying a stable error code (the CLI maps the
/// code straight into its JSON error object).
class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& detail);
  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] void fail(Errc code, const std::string& detail = "");

}  // namespace cmkit

#endif
