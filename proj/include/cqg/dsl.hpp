#pragma once

// Plain-text presentations.
//
//   name su_q_2
//   param q
//   generators:
//     gen a star a* weight 2
//     gen a* star a weight 2
//   relations:
//     g a -> q^-1 * a g
//   identities:                  (optional; what Delta is checked on)
//     u11 u11* + u12 u12* - 1
//   comultiplication:
//     a |-> a (x) a - q * g* (x) g
//   counit:
//     a |-> 1
//   antipode:
//     a |-> a*
//   coreps:
//     corep u 2
//       row a, -q * g*
//       row g, a*
//
// A `*` written directly after a generator name is the star of that
// generator ("g*"), a spaced `*` is multiplication. Juxtaposition also
// multiplies. `q` and `i` are reserved, and so is the token "(x)". Text
// from '#' to the end of a line is a comment.

#include <string>

#include "cqg/hopf.hpp"

namespace cqg::dsl {

/// Tables and presentation as written; load-time checks are not run.
CqgData parse_document(const std::string& text);

/// parse_document followed by CqgAlgebra::create. Errors from the load-time
/// checks keep their kind; syntax and name errors carry line:column.
AlgebraPtr parse(const std::string& text);
AlgebraPtr load_file(const std::string& path);

/// Canonical text: symbols in id order, rules in presentation order, one
/// table line per letter.
std::string serialize(const CqgAlgebra& alg);

/// Polynomial in the generators of `pres`, normalized.
NcPoly parse_polynomial(const PresentationPtr& pres, const std::string& text);

}  // namespace cqg::dsl
