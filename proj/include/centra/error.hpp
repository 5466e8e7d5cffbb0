#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace centra {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  BothZero,
  NotMonic,
  DegreeZero,
  IrreducibilityUnsupported,
  NotIrreducible,
  ShapeMismatch,
  NotSquare,
  BadPermutation,
  NonSeparableFirstKind,
  NotSortedDescending,
  NonPositivePart,
  NotMultipleOfS,
  NoSolution,
  FormulaMismatch,
  NotInCentralizer,
  NotCoprime,
  LengthMismatch,
  TooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every library failure is reported through this type; `code()` identifies
/// the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace centra
