#include "ropen/errors.hpp"

namespace ropen {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnboundName: return "UnboundName";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotSingleton: return "NotSingleton";
    case ErrorCode::EmptyRelativization: return "EmptyRelativization";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::EmptySubspace: return "EmptySubspace";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotRegularOpen: return "NotRegularOpen";
    case ErrorCode::Discontinuity: return "Discontinuity";
    case ErrorCode::ImageEscapesCodomain: return "ImageEscapesCodomain";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NonDyadicEndpoint: return "NonDyadicEndpoint";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::EmptyDescriptor: return "EmptyDescriptor";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace {

std::string describe(std::size_t line, std::size_t column,
                     const std::vector<std::string>& expected, const std::string& found) {
  std::string msg = "line " + std::to_string(line) + ", column " + std::to_string(column) +
                    ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found " + found;
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column,
                         std::vector<std::string> expected, const std::string& found)
    : Error(ErrorCode::SyntaxError, describe(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace ropen
