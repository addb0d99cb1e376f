#include "sl3f7/error.hpp"

namespace sl3f7 {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::CodeOutOfRange: return "CodeOutOfRange";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotInSL3: return "NotInSL3";
    case ErrorKind::HasEigenvector: return "HasEigenvector";
    case ErrorKind::NotEigenfree: return "NotEigenfree";
    case ErrorKind::PowerLeavesEigenfreeSet: return "PowerLeavesEigenfreeSet";
    case ErrorKind::OrbitTooLarge: return "OrbitTooLarge";
    case ErrorKind::NonIntegerCount: return "NonIntegerCount";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::InParabolic: return "InParabolic";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::EmptyAfterScalarStrip: return "EmptyAfterScalarStrip";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::IncompleteCover: return "IncompleteCover";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sl3f7
