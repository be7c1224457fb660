#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagsh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A label that does not name a vertex, element or simplex of the structure.
class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// Structural invariant violated while building a value (self-loop, duplicate, cycle...).
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

/// Precondition of an operation does not hold (e.g. vertex not s-dismantlable).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exponential enumeration exceeded its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A certificate step failed to validate while being applied.
class CertificateError : public Error {
 public:
  CertificateError(std::size_t step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace flagsh
