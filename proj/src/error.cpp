#include "cqg/error.hpp"

namespace cqg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax-error";
    case ErrorKind::UnknownGenerator: return "unknown-generator";
    case ErrorKind::UndeclaredGenerator: return "undeclared-generator";
    case ErrorKind::IncompleteTable: return "incomplete-table";
    case ErrorKind::OrientationViolation: return "relation-orientation-violation";
    case ErrorKind::DegreeExceedsCertificate: return "degree-exceeds-certificate";
    case ErrorKind::DegreeClosureViolated: return "degree-closure-violated";
    case ErrorKind::HaarTableInsufficient: return "haar-table-insufficient";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::PoleAtEvaluationPoint: return "pole-at-evaluation-point";
    case ErrorKind::InconsistentSystem: return "inconsistent-system";
    case ErrorKind::SingularMatrix: return "singular-matrix";
    case ErrorKind::PresentationMismatch: return "presentation-mismatch";
    case ErrorKind::RegistryMismatch: return "registry-mismatch";
    case ErrorKind::NotAGroup: return "not-a-group";
    case ErrorKind::NotAState: return "not-a-state";
    case ErrorKind::HaarNotFaithful: return "haar-not-faithful";
    case ErrorKind::NonUniqueSolution: return "non-unique-solution";
    case ErrorKind::NotPositiveDefinite: return "not-positive-definite";
    case ErrorKind::SplittingFailed: return "splitting-failed";
    case ErrorKind::ConjugateUnresolved: return "conjugate-unresolved";
    case ErrorKind::NotInRegistry: return "not-in-registry";
    case ErrorKind::InconsistentOrthogonality: return "inconsistent-orthogonality";
    case ErrorKind::CheckFailed: return "check-failed";
    case ErrorKind::Internal: return "internal";
  }
  return "internal";
}

}  // namespace cqg
