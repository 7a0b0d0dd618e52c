#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aft {

using Element = std::uint32_t;

enum class ErrorKind {
  NotAPartialOrder,
  NotALattice,
  ForeignElement,
  NonMonotoneOperator,
  DivergenceGuard,
  LatticeMismatch,
  NotPrecisionMonotone,
  DoesNotApproximate,
  InconsistentPair,
  NonMonotoneProjection,
  SyntaxError,
  UndeclaredStatement,
  ForeignAtom,
  TooManyAtoms,
  NotConvex,
};

const char* to_string(ErrorKind kind);

/// Errors on the input side (bad files, unknown names) as opposed to
/// violated algebraic invariants. The CLI maps the former to exit code 1.
bool is_input_error(ErrorKind kind);

/// Every failure raised by the library. `witness()` carries the lattice
/// elements that demonstrate the violation, in an order documented at the
/// throw site (pairs are flattened as lower, upper).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<Element> witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<Element> witness_;
};

/// Syntax errors carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorKind::SyntaxError, format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace aft
