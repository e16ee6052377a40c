#include "powdom/error.hpp"

namespace powdom {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::UnknownOp: return "UnknownOp";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::NonMonotoneResult: return "NonMonotoneResult";
    case ErrorKind::RejectInteger: return "RejectInteger";
    case ErrorKind::InvalidValue: return "InvalidValue";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::string file, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(ErrorKind::ParseError,
            file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      file_(std::move(file)),
      line_(line),
      column_(column) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace powdom
