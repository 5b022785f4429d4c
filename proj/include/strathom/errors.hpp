#pragma once

#include <stdexcept>
#include <string>

namespace strathom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computation stopped at its cutoff before reaching the requested degree.
class IncompleteError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes disagreed. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

}  // namespace strathom
