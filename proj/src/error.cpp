#include "gll/error.hpp"

namespace gll {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::CharacteristicDividesN: return "CharacteristicDividesN";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroWitness: return "ZeroWitness";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::BadPair: return "BadPair";
    case ErrorKind::NoWitnessFound: return "NoWitnessFound";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& what, std::size_t position)
    : std::runtime_error(std::string(to_string(kind)) + " at " + std::to_string(position) + ": " +
                         what),
      kind_(kind),
      position_(position) {}

}  // namespace gll
