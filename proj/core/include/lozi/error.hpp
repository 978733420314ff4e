#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lozi {

enum class ErrorKind {
  NotHyperbolic,
  InsufficientWord,
  EmptyHead,
  WrongHead,
  BudgetExceeded,
  DegenerateBounds,
  NoFixedPoint,
  NonInvertible,
  WrongParams,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries an ErrorKind so callers (the
/// CLI in particular) can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lozi
