#pragma once

#include <stdexcept>
#include <string>

namespace ulam {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on argument values was violated (bad length, bad letter,
/// value out of range, empty family, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked before the state it needs exists
/// (e.g. querying a level that has not been computed yet).
class StateError : public Error {
 public:
  using Error::Error;
};

/// Computing a level would exceed the configured memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A persisted file is not in the expected format (magic / version).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A persisted file is structurally valid but internally inconsistent
/// (size mismatch, popcount does not match the recorded count, truncation).
class CorruptionError : public Error {
 public:
  using Error::Error;
};

/// An operating-system level I/O failure, wrapped with path context.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ulam
