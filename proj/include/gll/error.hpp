#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gll {

enum class ErrorKind {
  NotPrime,
  DivisionByZero,
  NotCoprime,
  ZeroPolynomial,
  FieldMismatch,
  CharacteristicDividesN,
  DegreeTooSmall,
  DimensionMismatch,
  ZeroWitness,
  BadDegree,
  HypothesisFailed,
  SearchSpaceTooLarge,
  NotMember,
  BadPair,
  NoWitnessFound,
  SyntaxError,
  UnknownVariable,
  InvalidArgument,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and is what
/// callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  Error(ErrorKind kind, const std::string& what, std::size_t position);

  ErrorKind kind() const noexcept { return kind_; }
  /// Byte offset into the parsed text, set for SyntaxError / UnknownVariable.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace gll
