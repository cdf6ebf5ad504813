#pragma once

#include <stdexcept>
#include <string>

namespace reprogym {

/// Base class of every error raised by the framework.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument or configuration violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The object is in a state where the operation is not allowed
/// (step after done, use after close).
class StateError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class NotSupportedError : public Error {
 public:
  using Error::Error;
};

/// A contract that the caller or a collaborator must uphold was broken
/// (e.g. a clock going backwards). Not recoverable.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed. Carries the 1-based line it failed on.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace reprogym
