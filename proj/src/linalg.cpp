#include "cqg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cqg/error.hpp"

namespace cqg {

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::diagonal(const std::vector<Scalar>& d) {
  ScalarMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ScalarMatrix ScalarMatrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  ScalarMatrix m(rows, cols);
  m(i, j) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::from_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t rows) {
  ScalarMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

std::vector<Scalar> ScalarMatrix::column(std::size_t j) const {
  std::vector<Scalar> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ScalarMatrix ScalarMatrix::adjoint() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

ScalarMatrix ScalarMatrix::conj() const {
  ScalarMatrix t(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = data_[k].conj();
  return t;
}

ScalarMatrix ScalarMatrix::kron(const ScalarMatrix& o) const {
  ScalarMatrix k(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (std::size_t r = 0; r < o.rows_; ++r)
        for (std::size_t s = 0; s < o.cols_; ++s) k(i * o.rows_ + r, j * o.cols_ + s) = a * o(r, s);
    }
  return k;
}

Scalar ScalarMatrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool ScalarMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool ScalarMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& v = (*this)(i, j);
      if (i == j ? !v.is_one() : !v.is_zero()) return false;
    }
  return true;
}

bool ScalarMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::Internal, "matrix shape mismatch");
  ScalarMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::Internal, "matrix shape mismatch");
  ScalarMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::Internal, "matrix shape mismatch");
  ScalarMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

ScalarMatrix operator*(const Scalar& s, const ScalarMatrix& a) {
  ScalarMatrix c = a;
  for (auto& v : c.data_) v *= s;
  return c;
}

ComplexMatrix ScalarMatrix::eval(std::complex<double> q0) const {
  ComplexMatrix m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).eval(q0);
  return m;
}

std::string ScalarMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).to_string();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---- linear systems

namespace {

void normalize_row(SparseRow& row) {
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, std::move(v));
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  row = std::move(out);
}

const Scalar* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// row -= f * pivot
void axpy(SparseRow& row, const Scalar& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(f * pivot[j].second));
      ++j;
    } else {
      Scalar v = row[i].second - f * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

}  // namespace

LinearSystem::LinearSystem(const ScalarMatrix& a, const std::vector<Scalar>& b) : num_vars(a.cols()) {
  if (b.size() != a.rows()) throw Error(ErrorKind::Internal, "rhs length mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<std::pair<std::size_t, Scalar>> terms;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) terms.emplace_back(j, a(i, j));
    add_row(terms, b[i]);
  }
}

void LinearSystem::add_row(const std::vector<std::pair<std::size_t, Scalar>>& terms, Scalar rhs_value) {
  SparseRow row(terms.begin(), terms.end());
  for (const auto& [c, v] : row)
    if (c >= num_vars) throw Error(ErrorKind::Internal, "column out of range");
  normalize_row(row);
  rows.push_back(std::move(row));
  rhs.push_back(std::move(rhs_value));
}

AffineSolution solve_exact(const LinearSystem& sys) {
  const std::size_t n = sys.num_vars;
  // Augmented rows: the right-hand side sits in column n.
  std::vector<SparseRow> rows = sys.rows;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!sys.rhs[r].is_zero()) rows[r].emplace_back(n, sys.rhs[r]);

  std::vector<bool> used(rows.size(), false);
  std::vector<std::size_t> pivot_row_of_col(n, SIZE_MAX);
  AffineSolution sol;

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = SIZE_MAX;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r].empty()) continue;
      if (rows[r].front().first == c) {
        p = r;
        break;
      }
    }
    if (p == SIZE_MAX) continue;
    used[p] = true;
    pivot_row_of_col[c] = p;
    sol.pivot_columns.push_back(c);

    Scalar inv = rows[p].front().second.inverse();
    for (auto& e : rows[p]) e.second *= inv;

    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == p) continue;
      const Scalar* v = find_entry(rows[r], c);
      if (!v) continue;
      Scalar f = *v;
      axpy(rows[r], f, rows[p]);
    }
  }

  sol.consistent = true;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!used[r] && !rows[r].empty()) {
      sol.consistent = false;
      return sol;
    }

  sol.particular.assign(n, Scalar());
  for (std::size_t c : sol.pivot_columns) {
    const Scalar* v = find_entry(rows[pivot_row_of_col[c]], n);
    if (v) sol.particular[c] = *v;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_row_of_col[f] != SIZE_MAX) continue;
    std::vector<Scalar> x(n);
    x[f] = Scalar(1);
    for (std::size_t c : sol.pivot_columns) {
      const Scalar* v = find_entry(rows[pivot_row_of_col[c]], f);
      if (v) x[c] = -*v;
    }
    sol.null_basis.push_back(std::move(x));
  }
  return sol;
}

AffineSolution solve_exact_or_throw(const LinearSystem& sys) {
  AffineSolution s = solve_exact(sys);
  if (!s.consistent) throw Error(ErrorKind::InconsistentSystem, "linear system is inconsistent");
  return s;
}

std::vector<std::vector<Scalar>> null_space(const ScalarMatrix& a) {
  return solve_exact(LinearSystem(a, std::vector<Scalar>(a.rows()))).null_basis;
}

std::size_t rank(const ScalarMatrix& a) {
  return solve_exact(LinearSystem(a, std::vector<Scalar>(a.rows()))).rank();
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  ScalarMatrix inv(n, n);
  // One elimination per column is wasteful but n stays tiny here.
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Scalar> e(n);
    e[j] = Scalar(1);
    AffineSolution s = solve_exact(LinearSystem(a, e));
    if (!s.consistent || s.nullity() != 0) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = s.particular[i];
  }
  return inv;
}

std::vector<Scalar> residual(const LinearSystem& sys, const std::vector<Scalar>& x) {
  std::vector<Scalar> r(sys.rows.size());
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    Scalar acc;
    for (const auto& [c, v] : sys.rows[i]) acc += v * x[c];
    r[i] = acc - sys.rhs[i];
  }
  return r;
}

// ---- numeric

HermitianRoot hermitian_sqrt(const ComplexMatrix& m) {
  ComplexMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const auto& ev = es.eigenvalues();
  HermitianRoot out;
  out.min_eigenvalue = ev.size() ? ev.minCoeff() : 0.0;
  if (out.min_eigenvalue <= 0.0) throw Error(ErrorKind::NotPositiveDefinite, "matrix is not positive definite");
  Eigen::VectorXd s = ev.array().sqrt();
  const ComplexMatrix& v = es.eigenvectors();
  out.root = v * s.cast<std::complex<double>>().asDiagonal() * v.adjoint();
  out.inverse_root = v * s.cwiseInverse().cast<std::complex<double>>().asDiagonal() * v.adjoint();
  return out;
}

double min_hermitian_eigenvalue(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  ComplexMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

std::optional<mpq_class> rationalize(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents of the continued fraction of x.
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(r);
    mpz_class ai(a);
    mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    mpq_class cand(h1, k1);
    cand.canonicalize();
    if (std::abs(cand.get_d() - x) <= tol) return cand;
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace cqg
