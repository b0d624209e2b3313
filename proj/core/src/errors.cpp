#include "cmkit/errors.hpp"

namespace cmkit {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonDivisible: return "NonDivisible";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::NotPrime: return "NotPrime";
    case Errc::TooLarge: return "TooLarge";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::Singular: return "Singular";
    case Errc::BadZetaNumerator: return "BadZetaNumerator";
    case Errc::Char2Or3Unsupported: return "Char2Or3Unsupported";
    case Errc::NegativeClosedPointCount: return "NegativeClosedPointCount";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotSplit: return "NotSplit";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NotOrdinary: return "NotOrdinary";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::MissingBase: return "MissingBase";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

DomainError::DomainError(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) +
                         (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(detail) {}

void fail(Errc code, const std::string& detail) {
  throw DomainError(code, detail);
}

}  // namespace cmkit
