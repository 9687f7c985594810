#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ropen {

enum class ErrorCode {
  InvalidInput,
  UnboundName,
  ArityMismatch,
  NotSingleton,
  EmptyRelativization,
  SpaceMismatch,
  EmptySubspace,
  NotClosed,
  NotRegularOpen,
  Discontinuity,
  ImageEscapesCodomain,
  NotSurjective,
  NotIrreducible,
  NonDyadicEndpoint,
  DomainMismatch,
  EmptyDescriptor,
  SyntaxError,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

// Every library failure is an Error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column,
              std::vector<std::string> expected, const std::string& found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace ropen
