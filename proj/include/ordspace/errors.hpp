#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordspace {

/// Root of every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad matrix, bad index, bad file).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Input file syntax error with 1-based position.
class ParseError : public ValidationError {
 public:
  ParseError(std::string message, int line, int column)
      : ValidationError(message + " (line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A size guard was exceeded. Never a silent truncation.
class SizeLimit : public Error {
 public:
  SizeLimit(const std::string& what, int requested, int limit)
      : Error(what + ": size " + std::to_string(requested) + " exceeds limit " +
              std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  int requested() const { return requested_; }
  int limit() const { return limit_; }

 private:
  int requested_;
  int limit_;
};

/// The exact LP solver could not reach a verdict.
class SolverFailure : public Error {
 public:
  using Error::Error;
};

/// Simplex realization ran out of scale reductions; carries the failing order.
class RetryExhausted : public Error {
 public:
  RetryExhausted(const std::string& what, int failing_order)
      : Error(what), failing_order_(failing_order) {}

  int failing_order() const { return failing_order_; }

 private:
  int failing_order_;
};

}  // namespace ordspace
