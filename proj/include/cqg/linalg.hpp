#pragma once

// Exact linear algebra over Q(i)(q) plus the small numeric helpers used by
// the floating paths (spectral splitting, unitarization, positivity checks).

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cqg/scalar.hpp"

namespace cqg {

using ComplexMatrix = Eigen::MatrixXcd;

class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ScalarMatrix identity(std::size_t n);
  static ScalarMatrix diagonal(const std::vector<Scalar>& d);
  static ScalarMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static ScalarMatrix from_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Scalar> column(std::size_t j) const;

  ScalarMatrix transpose() const;
  ScalarMatrix adjoint() const;  // conjugate transpose
  ScalarMatrix conj() const;
  ScalarMatrix kron(const ScalarMatrix& other) const;
  Scalar trace() const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;

  friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator*(const Scalar& s, const ScalarMatrix& a);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  ComplexMatrix eval(std::complex<double> q0) const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Sparse row: (column, value) pairs sorted by column, no zeros stored.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<SparseRow> rows;
  std::vector<Scalar> rhs;
  std::vector<std::string> labels;

  LinearSystem() = default;
  explicit LinearSystem(std::size_t n) : num_vars(n) {}
  LinearSystem(const ScalarMatrix& a, const std::vector<Scalar>& b);

  /// Appends a row; `terms` may repeat columns and contain zeros.
  void add_row(const std::vector<std::pair<std::size_t, Scalar>>& terms, Scalar rhs_value = Scalar());
};

struct AffineSolution {
  bool consistent = false;
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> null_basis;
  std::vector<std::size_t> pivot_columns;

  std::size_t nullity() const { return null_basis.size(); }
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Exact Gauss-Jordan elimination. Pivots are taken column by column, the
/// pivot row being the first remaining row (in input order) with a nonzero
/// entry, so null-space bases are reproducible. Inconsistent systems yield
/// consistent == false.
AffineSolution solve_exact(const LinearSystem& sys);

/// Same as solve_exact but throws InconsistentSystem instead of flagging.
AffineSolution solve_exact_or_throw(const LinearSystem& sys);

/// Basis of {x : A x = 0}.
std::vector<std::vector<Scalar>> null_space(const ScalarMatrix& a);
std::size_t rank(const ScalarMatrix& a);
std::optional<ScalarMatrix> inverse(const ScalarMatrix& a);

/// Residual A x - b, exact.
std::vector<Scalar> residual(const LinearSystem& sys, const std::vector<Scalar>& x);

// ---- numeric helpers

/// Hermitian square root of a positive definite matrix (and its inverse).
struct HermitianRoot {
  ComplexMatrix root;
  ComplexMatrix inverse_root;
  double min_eigenvalue = 0.0;
};
HermitianRoot hermitian_sqrt(const ComplexMatrix& m);
double min_hermitian_eigenvalue(const ComplexMatrix& m);

/// Continued-fraction rational approximation with bounded denominator;
/// nullopt when no candidate lies within tol.
std::optional<mpq_class> rationalize(double x, long max_den, double tol);

}  // namespace cqg
