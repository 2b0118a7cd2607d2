#include "cubicspec/error.hpp"

namespace cubicspec {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::NotTwoRegular: return "NotTwoRegular";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::DegenerateStep: return "DegenerateStep";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotPlusMinusOne: return "NotPlusMinusOne";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::BadMultiplicity: return "BadMultiplicity";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidRotation: return "InvalidRotation";
    case ErrorKind::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace cubicspec
