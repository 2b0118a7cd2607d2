#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicspec {

// Every failure the library can report. The numeric values are part of the
// C ABI (see cubicspec.h), so new kinds are appended only.
enum class ErrorKind : int {
  InvalidArgument = 1,
  OutOfRange,
  LoopEdge,
  NotTwoRegular,
  TooSmall,
  DegenerateStep,
  NotCubic,
  Disconnected,
  NotSimple,
  NotPlusMinusOne,
  StructureViolation,
  TooLarge,
  NotAPartition,
  BadMultiplicity,
  ConvergenceFailure,
  ParseError,
  InvalidRotation,
  NonIntegerGenus,
  DegreeTooSmall,
  IoError,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace cubicspec
