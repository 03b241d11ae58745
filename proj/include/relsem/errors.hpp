#pragma once

#include <stdexcept>
#include <string>

namespace relsem {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error with source position (1-based line/column).
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

/// Ill-formed input that parses but cannot be given a meaning
/// (unbound names, scope mismatches, missing domain configuration).
struct SemanticError : Error {
  using Error::Error;
};

/// Two values built over different state spaces were combined.
struct DomainMismatchError : SemanticError {
  using SemanticError::SemanticError;
};

/// A finite enumeration (states, interpretations) exceeds the configured cap.
struct CapExceededError : Error {
  using Error::Error;
};

/// A verification run needs a contract that the table does not provide.
struct MissingContractError : Error {
  using Error::Error;
};

/// Composition was requested for non-composable components or contracts.
struct ComposabilityError : Error {
  using Error::Error;
};

}  // namespace relsem
