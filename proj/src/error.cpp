#include "centra/error.hpp"

namespace centra {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::IrreducibilityUnsupported: return "IrreducibilityUnsupported";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::NonSeparableFirstKind: return "NonSeparableFirstKind";
    case ErrorCode::NotSortedDescending: return "NotSortedDescending";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::NotMultipleOfS: return "NotMultipleOfS";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::NotInCentralizer: return "NotInCentralizer";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace centra
