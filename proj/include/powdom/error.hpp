#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace powdom {

enum class ErrorKind {
  DuplicateLabel,
  UnknownLabel,
  CycleDetected,
  SizeGuardExceeded,
  TypeMismatch,
  SignatureMismatch,
  UnknownOp,
  UnknownElement,
  UnboundVariable,
  ArityMismatch,
  NonMonotone,
  NonMonotoneResult,
  RejectInteger,
  InvalidValue,
  ParseError,
  UnknownName,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A definition-file error with its source location (1-based line and column).
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, std::size_t column,
             const std::string& message);
  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace powdom
