#include "cqg/finite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "cqg/error.hpp"

namespace cqg {

namespace {

void add_to(SparseVec& v, std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = v.try_emplace(i, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

using Tensor2 = std::map<std::pair<std::size_t, std::size_t>, Scalar>;
using Tensor3 = std::map<std::array<std::size_t, 3>, Scalar>;

void add_to(Tensor2& t, std::size_t i, std::size_t j, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = t.try_emplace({i, j}, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

void add_to(Tensor3& t, std::array<std::size_t, 3> k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = t.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

std::string vec_text(const FiniteAlgebra& fa, const SparseVec& v) {
  if (v.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, c] : v) {
    s += term_text(c, fa.basis_names[i], first);
    first = false;
  }
  return s;
}

std::string t2_text(const FiniteAlgebra& fa, const Tensor2& t) {
  if (t.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : t) {
    s += term_text(c, fa.basis_names[k.first] + " (x) " + fa.basis_names[k.second], first);
    first = false;
  }
  return s;
}

Tensor2 delta_of(const FiniteAlgebra& fa, const SparseVec& x, bool opposite = false) {
  Tensor2 out;
  for (const auto& [a, c] : x)
    for (const auto& [k, v] : fa.delta[a]) {
      if (opposite)
        add_to(out, k.second, k.first, c * v);
      else
        add_to(out, k.first, k.second, c * v);
    }
  return out;
}

SparseVec basis(std::size_t a) { return SparseVec{{a, Scalar(1)}}; }

}  // namespace

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace(i, Scalar(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const ScalarMatrix& d) {
  SparseMatrix m(d.rows());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!d(i, j).is_zero()) m.cols_[j].emplace(i, d(i, j));
  return m;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Scalar& v) { add_to(cols_[j], i, v); }

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  auto it = cols_[j].find(i);
  return it == cols_[j].end() ? Scalar() : it->second;
}

SparseMatrix SparseMatrix::adjoint() const {
  SparseMatrix m(n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (const auto& [i, v] : cols_[j]) m.cols_[i].emplace(j, v.conj());
  return m;
}

SparseMatrix SparseMatrix::kron(const SparseMatrix& o) const {
  SparseMatrix m(n_ * o.n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (const auto& [i, v] : cols_[j])
      for (std::size_t s = 0; s < o.n_; ++s)
        for (const auto& [r, w] : o.cols_[s]) m.cols_[j * o.n_ + s].emplace(i * o.n_ + r, v * w);
  return m;
}

SparseMatrix SparseMatrix::permuted(const std::vector<std::size_t>& perm) const {
  SparseMatrix m(n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (const auto& [i, v] : cols_[j]) m.cols_[perm[j]].emplace(perm[i], v);
  return m;
}

ScalarMatrix SparseMatrix::to_dense() const {
  ScalarMatrix d(n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (const auto& [i, v] : cols_[j]) d(i, j) = v;
  return d;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix m(a.n_);
  for (std::size_t j = 0; j < b.n_; ++j)
    for (const auto& [k, v] : b.cols_[j])
      for (const auto& [i, w] : a.cols_[k]) add_to(m.cols_[j], i, w * v);
  return m;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix m = a;
  for (std::size_t j = 0; j < b.n_; ++j)
    for (const auto& [i, v] : b.cols_[j]) add_to(m.cols_[j], i, v);
  return m;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix m = a;
  for (std::size_t j = 0; j < b.n_; ++j)
    for (const auto& [i, v] : b.cols_[j]) add_to(m.cols_[j], i, -v);
  return m;
}

// ---------------------------------------------------------------- FiniteAlgebra

SparseVec FiniteAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [a, c] : x)
    for (const auto& [b, d] : y)
      for (const auto& [k, v] : mult[a][b]) add_to(out, k, c * d * v);
  return out;
}

SparseVec FiniteAlgebra::adjoint(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [a, c] : x)
    for (const auto& [k, v] : star[a]) add_to(out, k, c.conj() * v);
  return out;
}

Scalar FiniteAlgebra::apply(const std::vector<Scalar>& f, const SparseVec& x) const {
  Scalar s;
  for (const auto& [a, c] : x) s += c * f[a];
  return s;
}

Report check_finite_algebra(const FiniteAlgebra& fa) {
  Report rep;
  rep.title = "finite algebra checks for " + fa.name;
  const std::size_t n = fa.dim;
  auto name = [&](std::size_t a) { return fa.basis_names[a]; };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      SparseVec ab = fa.mult[a][b];
      for (std::size_t c = 0; c < n; ++c) {
        SparseVec l = fa.multiply(ab, basis(c)), r = fa.multiply(basis(a), fa.mult[b][c]);
        rep.check("associativity", l == r, name(a) + " " + name(b) + " " + name(c),
                  [&] { return vec_text(fa, l) + " vs " + vec_text(fa, r); });
      }
      SparseVec s1 = fa.adjoint(ab), s2 = fa.multiply(fa.star[b], fa.star[a]);
      rep.check("star-antimultiplicative", s1 == s2, name(a) + " " + name(b),
                [&] { return vec_text(fa, s1) + " vs " + vec_text(fa, s2); });
    }

  for (std::size_t a = 0; a < n; ++a) {
    const SparseVec e = basis(a);
    SparseVec l = fa.multiply(fa.unit, e), r = fa.multiply(e, fa.unit);
    rep.check("unit", l == e && r == e, name(a), [&] { return vec_text(fa, l) + ", " + vec_text(fa, r); });
    SparseVec ss = fa.adjoint(fa.star[a]);
    rep.check("star-involution", ss == e, name(a), [&] { return vec_text(fa, ss); });

    const Tensor2& d = fa.delta[a];
    Tensor3 left, right;
    for (const auto& [k, c] : d) {
      for (const auto& [k2, c2] : fa.delta[k.first]) add_to(left, {k2.first, k2.second, k.second}, c * c2);
      for (const auto& [k2, c2] : fa.delta[k.second]) add_to(right, {k.first, k2.first, k2.second}, c * c2);
    }
    rep.check("coassociativity", left == right, name(a), [] { return std::string("triple tensors differ"); });

    SparseVec cl, cr, al, ar;
    for (const auto& [k, c] : d) {
      add_to(cl, k.second, c * fa.counit[k.first]);
      add_to(cr, k.first, c * fa.counit[k.second]);
      for (const auto& [i, v] : fa.multiply(fa.antipode[k.first], basis(k.second))) add_to(al, i, c * v);
      for (const auto& [i, v] : fa.multiply(basis(k.first), fa.antipode[k.second])) add_to(ar, i, c * v);
    }
    rep.check("counit-left", cl == e, name(a), [&] { return vec_text(fa, cl); });
    rep.check("counit-right", cr == e, name(a), [&] { return vec_text(fa, cr); });
    SparseVec eps;
    for (const auto& [i, v] : fa.unit) add_to(eps, i, v * fa.counit[a]);
    rep.check("antipode-left", al == eps, name(a), [&] { return vec_text(fa, al); });
    rep.check("antipode-right", ar == eps, name(a), [&] { return vec_text(fa, ar); });

    // Delta(e_a^*) = (* (x) *) Delta(e_a)
    Tensor2 ds = delta_of(fa, fa.star[a]), sd;
    for (const auto& [k, c] : d)
      for (const auto& [i, v] : fa.star[k.first])
        for (const auto& [j, w] : fa.star[k.second]) add_to(sd, i, j, c.conj() * v * w);
    rep.check("comultiplication-star", ds == sd, name(a), [&] { return t2_text(fa, ds) + " vs " + t2_text(fa, sd); });

    for (std::size_t b = 0; b < n; ++b) {
      Tensor2 lhs = delta_of(fa, fa.mult[a][b]), rhs;
      for (const auto& [k, c] : d)
        for (const auto& [k2, c2] : fa.delta[b])
          for (const auto& [i, v] : fa.mult[k.first][k2.first])
            for (const auto& [j, w] : fa.mult[k.second][k2.second]) add_to(rhs, i, j, c * c2 * v * w);
      rep.check("comultiplication-multiplicative", lhs == rhs, name(a) + " " + name(b),
                [&] { return t2_text(fa, lhs) + " vs " + t2_text(fa, rhs); });
    }
  }
  return rep;
}

std::vector<Scalar> finite_haar(const FiniteAlgebra& fa) {
  const std::size_t n = fa.dim;
  LinearSystem sys(n);
  for (std::size_t a = 0; a < n; ++a) {
    // left: sum_ij c_ij h_j e_i = h_a 1 ; right: sum_ij c_ij h_i e_j = h_a 1
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> left(n), right(n);
    for (const auto& [k, c] : fa.delta[a]) {
      left[k.first].emplace_back(k.second, c);
      right[k.second].emplace_back(k.first, c);
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto it = fa.unit.find(i);
      Scalar u = it == fa.unit.end() ? Scalar() : it->second;
      auto l = left[i], r = right[i];
      if (!u.is_zero()) {
        l.emplace_back(a, -u);
        r.emplace_back(a, -u);
      }
      sys.add_row(l);
      sys.add_row(r);
    }
  }
  std::vector<std::pair<std::size_t, Scalar>> norm;
  for (const auto& [i, v] : fa.unit) norm.emplace_back(i, v);
  sys.add_row(norm, Scalar(1));
  AffineSolution s = solve_exact(sys);
  if (!s.consistent) throw Error(ErrorKind::NonUniqueSolution, "no invariant functional on " + fa.name);
  if (s.nullity() != 0)
    throw Error(ErrorKind::NonUniqueSolution,
                "invariant functionals on " + fa.name + " form a space of dimension " + std::to_string(s.nullity() + 1));
  return s.particular;
}

GnsData gns(const FiniteAlgebra& fa) {
  const std::size_t n = fa.dim;
  GnsData g;
  g.gram = ScalarMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.gram(i, j) = fa.apply(fa.haar, fa.multiply(fa.star[i], basis(j)));
  if (rank(g.gram) != n) throw Error(ErrorKind::HaarNotFaithful, "Gram matrix of " + fa.name + " is singular");
  if (min_hermitian_eigenvalue(g.gram.eval(0.5)) <= 0.0)
    throw Error(ErrorKind::HaarNotFaithful, "Gram matrix of " + fa.name + " is not positive definite");
  for (std::size_t a = 0; a < n; ++a) {
    ScalarMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [i, v] : fa.mult[a][j]) l(i, j) = v;
    g.left_mult.push_back(std::move(l));
  }
  g.cyclic = fa.unit;
  return g;
}

SparseMatrix regular_unitary(const FiniteAlgebra& fa, bool opposite) {
  const std::size_t n = fa.dim;
  SparseMatrix u(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Tensor2 d = delta_of(fa, basis(a), opposite);
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [k, c] : d)
        for (const auto& [j, v] : fa.mult[k.second][b]) u.add(k.first * n + j, a * n + b, c * v);
  }
  return u;
}

namespace {

SparseMatrix gram_adjoint(const SparseMatrix& u, const SparseMatrix& m, const SparseMatrix& m_inv) {
  return m_inv * u.adjoint() * m;
}

SparseMatrix gram2(const GnsData& g, SparseMatrix* inverse_out) {
  SparseMatrix gs = SparseMatrix::from_dense(g.gram);
  auto inv = inverse(g.gram);
  if (!inv) throw Error(ErrorKind::HaarNotFaithful, "Gram matrix is singular");
  SparseMatrix gi = SparseMatrix::from_dense(*inv);
  if (inverse_out) *inverse_out = gi.kron(gi);
  return gs.kron(gs);
}

}  // namespace

Report check_regular_unitary(const FiniteAlgebra& fa, const GnsData& g, const SparseMatrix& u) {
  Report rep;
  rep.title = "regular unitary of " + fa.name;
  SparseMatrix mi;
  SparseMatrix m = gram2(g, &mi);
  SparseMatrix us = gram_adjoint(u, m, mi);
  const SparseMatrix id = SparseMatrix::identity(u.size());
  SparseMatrix a = us * u, b = u * us;
  rep.check("isometry", a == id, "U* U", [&] { return std::to_string((a - id).nonzeros()) + " nonzero residual entries"; });
  rep.check("coisometry", b == id, "U U*", [&] { return std::to_string((b - id).nonzeros()) + " nonzero residual entries"; });
  return rep;
}

Report check_pentagon(const SparseMatrix& u, std::size_t n) {
  Report rep;
  rep.title = "pentagon";
  const SparseMatrix id = SparseMatrix::identity(n);
  SparseMatrix u12 = u.kron(id), u23 = id.kron(u);
  std::vector<std::size_t> flip(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) flip[(i * n + j) * n + k] = (i * n + k) * n + j;
  SparseMatrix u13 = u12.permuted(flip);
  SparseMatrix lhs = u23 * u12, rhs = u12 * u13 * u23;
  rep.check("pentagon", lhs == rhs, "U23 U12 = U12 U13 U23",
            [&] { return std::to_string((lhs - rhs).nonzeros()) + " nonzero residual entries"; });
  return rep;
}

Report check_implements(const FiniteAlgebra& fa, const GnsData& g, const SparseMatrix& u, bool opposite) {
  Report rep;
  rep.title = "regular representation implements the comultiplication of " + fa.name;
  const std::size_t n = fa.dim;
  SparseMatrix mi;
  SparseMatrix m = gram2(g, &mi);
  SparseMatrix us = gram_adjoint(u, m, mi);
  std::vector<SparseMatrix> l;
  for (const auto& x : g.left_mult) l.push_back(SparseMatrix::from_dense(x));
  const SparseMatrix id = SparseMatrix::identity(n);
  for (std::size_t a = 0; a < n; ++a) {
    SparseMatrix lhs(n * n);
    for (const auto& [k, c] : delta_of(fa, basis(a), opposite)) {
      SparseMatrix t = l[k.first].kron(l[k.second]);
      for (std::size_t j = 0; j < n * n; ++j)
        for (const auto& [i, v] : t.col(j)) lhs.add(i, j, c * v);
    }
    SparseMatrix rhs = u * l[a].kron(id) * us;
    rep.check("implements", lhs == rhs, fa.basis_names[a],
              [&] { return std::to_string((lhs - rhs).nonzeros()) + " nonzero residual entries"; });
  }

  // slices: S_{(i,a)}[k][b] = U_{(i,k),(a,b)}
  std::vector<std::vector<Scalar>> vecs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Scalar> v(n * n);
      bool nz = false;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t b = 0; b < n; ++b) {
          v[k * n + b] = u.at(i * n + k, a * n + b);
          nz = nz || !v[k * n + b].is_zero();
        }
      if (nz) vecs.push_back(std::move(v));
    }
  ScalarMatrix sm = ScalarMatrix::from_columns(vecs, n * n);
  std::size_t rs = rank(sm);
  for (const auto& x : g.left_mult) {
    std::vector<Scalar> v(n * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t b = 0; b < n; ++b) v[k * n + b] = x(k, b);
    vecs.push_back(std::move(v));
  }
  std::size_t rj = rank(ScalarMatrix::from_columns(vecs, n * n));
  rep.check("slices-span", rs == n && rj == n, "span of slices",
            [&] { return "rank " + std::to_string(rs) + ", joint rank with A " + std::to_string(rj); });
  return rep;
}

// ---------------------------------------------------------------- views

NcPoly FiniteQuantumGroup::to_view(const SparseVec& x) const {
  NcPoly out(basis_in_view.at(0).presentation());
  for (const auto& [a, c] : x) out += basis_in_view[a].scaled(c);
  return out;
}

CorepSpec FiniteQuantumGroup::regular_corep() const {
  const std::size_t n = fa.dim;
  CorepSpec c;
  c.name = "regular";
  c.dim = n;
  c.entries.assign(n * n, NcPoly(basis_in_view.at(0).presentation()));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [k, v] : fa.delta[j]) c.entries[k.first * n + j] += basis_in_view[k.second].scaled(v);
  return c;
}

// ---------------------------------------------------------------- Cesaro

CesaroLog cesaro_haar(const FiniteAlgebra& fa, const std::vector<double>& omega, std::size_t max_steps, double tol,
                      bool accelerate) {
  using C = std::complex<double>;
  const std::size_t n = fa.dim;
  if (omega.size() != n) throw Error(ErrorKind::NotAState, "functional has wrong length");

  std::vector<C> w(omega.begin(), omega.end());
  // state check: w(1) = 1 and [w(e_a^* e_b)] positive semidefinite
  C at_one = 0;
  for (const auto& [i, v] : fa.unit) at_one += v.eval(0.5) * w[i];
  if (std::abs(at_one - 1.0) > 1e-12) throw Error(ErrorKind::NotAState, "functional is not unital");
  ComplexMatrix pm(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      C s = 0;
      for (const auto& [k, v] : fa.multiply(fa.star[a], basis(b))) s += v.eval(0.5) * w[k];
      pm(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = s;
    }
  if (min_hermitian_eigenvalue(pm) < -1e-12) throw Error(ErrorKind::NotAState, "functional is not positive");

  struct Entry {
    std::size_t i, j, a;
    C c;
  };
  std::vector<Entry> table;
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& [k, c] : fa.delta[a]) table.push_back({k.first, k.second, a, c.eval(0.5)});
  auto conv = [&](const std::vector<C>& x, const std::vector<C>& y) {
    std::vector<C> z(n);
    for (const auto& e : table) z[e.a] += e.c * x[e.i] * y[e.j];
    return z;
  };
  std::vector<C> h(n);
  for (std::size_t a = 0; a < n; ++a) h[a] = fa.haar[a].eval(0.5);
  auto l1 = [&](const std::vector<C>& x, const std::vector<C>& y) {
    double s = 0;
    for (std::size_t a = 0; a < n; ++a) s += std::abs(x[a] - y[a]);
    return s;
  };

  CesaroLog log;
  std::vector<C> power = w, sum = w, avg(n), half_sum(n), tail(n);
  std::size_t next_log = 1;
  for (std::size_t step = 1; step <= max_steps; ++step) {
    for (std::size_t a = 0; a < n; ++a) avg[a] = sum[a] / static_cast<double>(step);
    double dist = l1(avg, h);
    bool done = dist <= tol;
    double tail_dist = -1.0;
    if (accelerate && step == next_log && step >= 2) {
      const double m = static_cast<double>(step / 2);
      for (std::size_t a = 0; a < n; ++a) tail[a] = (sum[a] - half_sum[a]) / m;
      tail_dist = l1(tail, h);
      if (!done && tail_dist <= tol) {
        done = true;
        log.accelerated = true;
      }
    }
    if (step == next_log || done || step == max_steps) {
      log.steps.push_back(step);
      log.defect.push_back(l1(conv(avg, w), avg));
      log.distance.push_back(dist);
      log.tail_distance.push_back(tail_dist);
      if (step == next_log) {
        half_sum = sum;
        next_log *= 2;
      }
    }
    log.iterations = step;
    if (done) {
      log.converged = true;
      break;
    }
    power = conv(power, w);
    for (std::size_t a = 0; a < n; ++a) sum[a] += power[a];
  }
  for (const auto& v : log.accelerated ? tail : avg) log.result.push_back(v.real());
  return log;
}

}  // namespace cqg
