#pragma once

#include <stdexcept>
#include <string>

namespace patlab {

/// Bad arguments or a request outside what the library supports.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Class-expression syntax error; `column` is a 0-based offset into the
/// expression text.
class ParseError : public UsageError {
 public:
  ParseError(std::string message, std::string expression, std::size_t column)
      : UsageError(std::move(message)),
        expression_(std::move(expression)),
        column_(column) {}

  const std::string& expression() const noexcept { return expression_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string expression_;
  std::size_t column_;
};

/// An input permutation violates a map's class precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The permutation handed to an inverse map has no preimage.
class NotInImageError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Node budget exhausted.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A guarantee that should hold on valid input did not. Either a bug or a
/// counterexample to a published claim; carries the offending permutation.
class FindingError : public std::logic_error {
 public:
  FindingError(const std::string& message, std::string witness)
      : std::logic_error(message + " (witness: " + witness + ")"),
        witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace patlab
