#pragma once

// Finite-dimensional Hopf *-algebras given by structure constants: load-time
// checks, the Haar functional, GNS data, the regular multiplicative unitary
// and the Cesaro construction of the Haar state.

#include <map>
#include <string>
#include <vector>

#include "cqg/hopf.hpp"
#include "cqg/linalg.hpp"
#include "cqg/report.hpp"

namespace cqg {

using SparseVec = std::map<std::size_t, Scalar>;

/// Square sparse matrix stored by columns.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t n) : n_(n), cols_(n) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const ScalarMatrix& m);

  std::size_t size() const { return n_; }
  const SparseVec& col(std::size_t j) const { return cols_[j]; }
  void add(std::size_t i, std::size_t j, const Scalar& v);
  Scalar at(std::size_t i, std::size_t j) const;

  SparseMatrix adjoint() const;
  SparseMatrix kron(const SparseMatrix& o) const;
  /// Conjugation by a permutation of basis indices: P M P^-1 where
  /// P e_j = e_{perm[j]}.
  SparseMatrix permuted(const std::vector<std::size_t>& perm) const;
  ScalarMatrix to_dense() const;
  std::size_t nonzeros() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.n_ == b.n_ && a.cols_ == b.cols_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<SparseVec> cols_;
};

struct FiniteAlgebra {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::vector<std::vector<SparseVec>> mult;  // mult[a][b] = e_a e_b
  std::vector<SparseVec> star;               // e_a^*
  std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> delta;
  SparseVec unit;
  std::vector<Scalar> counit;
  std::vector<SparseVec> antipode;
  /// h(e_a); filled by finite_haar at construction time of presets.
  std::vector<Scalar> haar;

  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  SparseVec adjoint(const SparseVec& x) const;
  Scalar apply(const std::vector<Scalar>& functional, const SparseVec& x) const;
};

/// Associativity, unit, *-anti-multiplicativity and involution,
/// coassociativity, Delta multiplicative and *-preserving, counit and
/// antipode identities, all exact on basis elements.
Report check_finite_algebra(const FiniteAlgebra& fa);

/// Solves both invariance systems with h(1) = 1; throws NonUniqueSolution
/// when the solution space is not a single point.
std::vector<Scalar> finite_haar(const FiniteAlgebra& fa);

struct GnsData {
  ScalarMatrix gram;                    // gram(i, j) = h(e_i^* e_j)
  std::vector<ScalarMatrix> left_mult;  // (L_a)_{ij} = coefficient of e_i in e_a e_j
  SparseVec cyclic;                     // class of 1
};
/// Throws HaarNotFaithful when the Gram matrix is singular or not positive
/// definite at the sample point.
GnsData gns(const FiniteAlgebra& fa);

/// U(e_a (x) e_b) = Delta(e_a)(1 (x) e_b), or with the opposite
/// comultiplication when `opposite` is set.
SparseMatrix regular_unitary(const FiniteAlgebra& fa, bool opposite = false);

/// Unitarity of U for the inner product with Gram G (x) G.
Report check_regular_unitary(const FiniteAlgebra& fa, const GnsData& g, const SparseMatrix& u);
/// U23 U12 = U12 U13 U23 on H (x) H (x) H.
Report check_pentagon(const SparseMatrix& u, std::size_t n);
/// Delta(a) = U (a (x) 1) U^* for every basis element, and the slices
/// (omega (x) id)(U) span A.
Report check_implements(const FiniteAlgebra& fa, const GnsData& g, const SparseMatrix& u, bool opposite = false);

/// Finite algebra together with its presented (CqgAlgebra) view.
struct FiniteQuantumGroup {
  FiniteAlgebra fa;
  AlgebraPtr view;
  std::vector<NcPoly> basis_in_view;  // e_a as an element of the view

  NcPoly to_view(const SparseVec& x) const;
  /// c_ij = sum_k Delta(e_j)^{ik} e_k, the corepresentation carried by the
  /// regular representation.
  CorepSpec regular_corep() const;
};

struct CesaroLog {
  std::vector<std::size_t> steps;
  std::vector<double> defect;    // ||omega_n omega - omega_n||_1
  std::vector<double> distance;  // ||omega_n - h||_1
  std::vector<double> tail_distance;  // ||tail_n - h||_1, -1 where not formed
  std::vector<double> result;    // omega_n at the last step, or the tail mean when that converged
  std::size_t iterations = 0;
  bool converged = false;
  bool accelerated = false;      // convergence reached through the tail mean
};

/// Runs omega_n = (1/n)(omega + ... + omega^n) until ||omega_n - h||_1 <= tol
/// or max_steps. Norms are l1 over the basis (the exact dual norm for
/// function algebras in the delta basis). Throws NotAState.
/// With `accelerate`, at n = 2^k the tail mean (1/m)(omega^{m+1} + ... +
/// omega^{2m}), m = n/2, is also compared with h; it equals 2 omega_n -
/// omega_m, which cancels the 1/n term of the plain mean.
CesaroLog cesaro_haar(const FiniteAlgebra& fa, const std::vector<double>& omega, std::size_t max_steps, double tol,
                      bool accelerate = false);

}  // namespace cqg
