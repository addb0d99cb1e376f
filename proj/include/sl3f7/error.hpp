#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl3f7 {

enum class ErrorKind {
  ZeroInverse,
  ZeroElement,
  SingularMatrix,
  CodeOutOfRange,
  Parse,
  NotInSL3,
  HasEigenvector,
  NotEigenfree,
  PowerLeavesEigenfreeSet,
  OrbitTooLarge,
  NonIntegerCount,
  WrongOrder,
  UnsupportedOrder,
  ClosureCapExceeded,
  InParabolic,
  NotCommuting,
  EmptyAfterScalarStrip,
  LengthMismatch,
  IncompleteCover,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sl3f7
