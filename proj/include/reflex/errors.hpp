#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reflex {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Vertex input is not full-dimensional, has duplicates, or is redundant.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the input polytope does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A hard-coded named polytope failed its verification battery.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A slice distribution matched none of the three admissible cases.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

class EnumerationError : public Error {
 public:
  using Error::Error;
};

class TaxonomyError : public Error {
 public:
  using Error::Error;
};

/// A consistency check that should hold for every valid input failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed polytope file; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        detail_(what) {}

  /// The same error, reported against a named file.
  ParseError(const std::string& file, const ParseError& e)
      : Error(file + ":" + e.what()), line_(e.line_), column_(e.column_), detail_(e.detail_) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace reflex
