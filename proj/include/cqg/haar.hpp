#pragma once

// The Haar functional as an exact table on normal monomials, solved from
// the left and right invariance equations, plus the checks built on it.

#include <map>
#include <string>
#include <vector>

#include "cqg/hopf.hpp"
#include "cqg/linalg.hpp"
#include "cqg/report.hpp"

namespace cqg {

struct HaarTable {
  int degree = 0;
  PresentationPtr pres;
  std::map<Word, Scalar> values;
  // dimension of the invariant functionals before normalization; 1 on success
  std::size_t solution_dimension = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;

  /// Throws HaarTableInsufficient for words longer than the table degree.
  Scalar eval(const NcPoly& x) const;
  Json to_json() const;
  static HaarTable from_json(const Json& j, PresentationPtr pres);
};

/// Throws DegreeClosureViolated when a comultiplication leg leaves the
/// degree range, NonUniqueSolution when the invariant functionals do not
/// form a single line, InconsistentSystem when only h = 0 is invariant.
HaarTable compute_haar(const CqgAlgebra& alg, int degree);

inline Scalar haar_eval(const NcPoly& x, const HaarTable& t) { return t.eval(x); }

/// (id (x) h)Delta(m) = h(m) 1 and (h (x) id)Delta(m) = h(m) 1 on every
/// monomial of the table.
Report haar_invariance_check(const CqgAlgebra& alg, const HaarTable& t);

/// h(m^* n) over monomials of degree <= d, positive definite at each q0.
Report gram_positivity(const CqgAlgebra& alg, const HaarTable& t, int d, const std::vector<double>& q_samples);

class IrrepRegistry;
struct Irrep;

/// h(u^a_pq) vanishes for every non-trivial registry entry and h(1) = 1.
Report haar_peter_weyl_check(const IrrepRegistry& reg, const HaarTable& t);

struct FMatrix {
  std::string label;
  ScalarMatrix f;
};

/// F from h(u_ip^* u_jq) = G_pq F_ij (G the Gram matrix of the irrep; the
/// identity for unitary ones). Consistency over all (p,q), the trace
/// identity sum_kl (G^-1)_lk h(u_ik^* u_jl) = n F_ij, positivity at the
/// samples and, for G = I, conj(u) (F (x) 1) u^t = F (x) 1 go into `report`.
/// Throws InconsistentOrthogonality when some (p,q) disagrees.
FMatrix f_matrix(const Irrep& irrep, const HaarTable& t, const std::vector<double>& q_samples = {1.0 / 3, 0.5, 0.9},
                 Report* report = nullptr);

/// h((u^b_ip)^* u^a_jq) = 0 for all registry pairs a != b.
Report orthogonality_check(const IrrepRegistry& reg, const HaarTable& t);

}  // namespace cqg
