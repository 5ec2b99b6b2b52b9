#pragma once

#include <stdexcept>
#include <string>

namespace cqg {

enum class ErrorKind {
  // input / parsing
  Syntax,
  UnknownGenerator,
  UndeclaredGenerator,
  IncompleteTable,
  OrientationViolation,
  // degree bookkeeping
  DegreeExceedsCertificate,
  DegreeClosureViolated,
  HaarTableInsufficient,
  // arithmetic
  DivisionByZero,
  PoleAtEvaluationPoint,
  InconsistentSystem,
  SingularMatrix,
  // structural
  PresentationMismatch,
  RegistryMismatch,
  NotAGroup,
  NotAState,
  HaarNotFaithful,
  NonUniqueSolution,
  NotPositiveDefinite,
  SplittingFailed,
  ConjugateUnresolved,
  NotInRegistry,
  InconsistentOrthogonality,
  CheckFailed,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& what, int line, int column)
      : Error(kind, format(what, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }
  int line_;
  int column_;
};

}  // namespace cqg
