#include "cqg/corep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "cqg/error.hpp"

namespace cqg {

namespace {

std::string pos(std::size_t p, std::size_t q) { return "(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")"; }

NcPoly scalar_poly(const PresentationPtr& p, const Scalar& s) { return NcPoly(p, s); }

// Entries of G^-1 v^* G, the inverse of a G-unitary corep.
std::vector<NcPoly> g_inverse(const Corep& w) {
  const std::size_t n = w.dim;
  ScalarMatrix g = w.gram_or_identity();
  auto gi = inverse(g);
  if (!gi) throw Error(ErrorKind::SingularMatrix, "singular gram matrix for " + w.name);
  std::vector<NcPoly> out(n * n, NcPoly(w.pres()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a) {
        if ((*gi)(i, a).is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (g(b, k).is_zero()) continue;
          out[i * n + k] += w.at(b, a).star().scaled((*gi)(i, a) * g(b, k));
        }
      }
  return out;
}

// Sub-corep on the invariant subspace spanned by the columns of c.
Corep restrict_to(const Corep& v, const ScalarMatrix& c) {
  const ScalarMatrix g = v.gram_or_identity();
  const ScalarMatrix d = c.adjoint() * g * c;
  auto di = inverse(d);
  if (!di) throw Error(ErrorKind::Internal, "degenerate subspace basis");
  const ScalarMatrix p = *di * c.adjoint() * g;
  const std::size_t n = v.dim, r = c.cols();
  // v c as a matrix of polynomials
  std::vector<NcPoly> vc(n * r, NcPoly(v.pres()));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (!c(l, j).is_zero()) vc[k * r + j] += v.at(k, l).scaled(c(l, j));
  Corep w;
  w.dim = r;
  w.entries.assign(r * r, NcPoly(v.pres()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!p(i, k).is_zero()) w.at(i, j) += vc[k * r + j].scaled(p(i, k));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < r; ++j) {
      NcPoly cw(v.pres());
      for (std::size_t m = 0; m < r; ++m)
        if (!c(k, m).is_zero()) cw += w.at(m, j).scaled(c(k, m));
      if (!(cw == vc[k * r + j]))
        throw Error(ErrorKind::Internal, "subspace is not invariant under " + v.name);
    }
  w.gram = d;
  return w;
}

ScalarMatrix columns_of(const std::vector<ScalarMatrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  ScalarMatrix m(rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks)
    for (std::size_t j = 0; j < b.cols(); ++j, ++at)
      for (std::size_t i = 0; i < rows; ++i) m(i, at) = b(i, j);
  return m;
}

ScalarMatrix matrix_of_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t rows) {
  return ScalarMatrix::from_columns(cols, rows);
}

bool is_scalar_matrix(const ScalarMatrix& x) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (i == j ? !(x(i, j) == x(0, 0)) : !x(i, j).is_zero()) return false;
  return true;
}

struct Piece {
  std::string label;
  ScalarMatrix embedding;
};

// Kernel of X - lambda for some constant rational eigenvalue lambda, proper
// and nonzero; empty when none is found for this X.
std::vector<std::vector<Scalar>> constant_eigenspace(const ScalarMatrix& x, const DecomposeOptions& opt) {
  const std::size_t r = x.rows();
  ComplexMatrix x0, x1;
  try {
    x0 = x.eval(opt.q0);
    x1 = x.eval(opt.q1);
  } catch (const Error&) {
    return {};
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> e0(x0), e1(x1);
  for (Eigen::Index a = 0; a < e0.eigenvalues().size(); ++a) {
    std::complex<double> l0 = e0.eigenvalues()[a];
    bool matched = false;
    for (Eigen::Index b = 0; b < e1.eigenvalues().size(); ++b)
      if (std::abs(e1.eigenvalues()[b] - l0) < 1e-7) matched = true;
    if (!matched) continue;
    auto re = rationalize(l0.real(), 10000, 1e-8);
    auto im = rationalize(l0.imag(), 10000, 1e-8);
    if (!re || !im) continue;
    Scalar lambda(GaussRational(*re, *im));
    ScalarMatrix shifted = x - lambda * ScalarMatrix::identity(r);
    auto ker = null_space(shifted);
    if (!ker.empty() && ker.size() < r) return ker;
  }
  return {};
}

void decompose_into(const Corep& v, const ScalarMatrix& embed, IrrepRegistry& reg, const DecomposeOptions& opt,
                    bool top, std::vector<Piece>& out, std::vector<std::string>& fresh) {
  const CqgAlgebra& alg = reg.algebra();
  const std::size_t n = v.dim;
  const ScalarMatrix g = v.gram_or_identity();
  std::vector<ScalarMatrix> found;
  const std::size_t known = reg.size();
  for (std::size_t k = 0; k < known; ++k) {
    const Irrep& a = reg.at(k);
    if (a.corep.dim > n) continue;
    for (ScalarMatrix& x : intertwiners(alg, a.corep, v)) {
      out.push_back({a.label, embed * x});
      found.push_back(std::move(x));
    }
  }
  ScalarMatrix all = columns_of(found, n);
  if (all.cols() == n) return;
  if (all.cols() > n) throw Error(ErrorKind::Internal, "intertwiner images overlap in " + v.name);

  ScalarMatrix c;
  Corep w;
  if (all.cols() == 0) {
    c = ScalarMatrix::identity(n);
    w = v;
    w.gram = g;
  } else {
    c = matrix_of_columns(null_space(all.adjoint() * g), n);
    w = restrict_to(v, c);
  }
  const ScalarMatrix sub_embed = embed * c;
  const std::size_t r = w.dim;

  std::vector<ScalarMatrix> end = intertwiners(alg, w, w);
  if (end.size() == 1) {
    if (top && all.cols() == 0 && !opt.name.empty()) w.name = opt.name;
    std::string label = reg.add(w, opt.degree);
    fresh.push_back(label);
    out.push_back({label, sub_embed});
    return;
  }

  std::vector<ScalarMatrix> candidates;
  for (const auto& x : end)
    if (!is_scalar_matrix(x)) candidates.push_back(x);
  std::mt19937 rng(20240613u);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 8; ++t) {
    ScalarMatrix x(r, r);
    for (const auto& b : end) x = x + Scalar(static_cast<long>(coef(rng))) * b;
    candidates.push_back(x);
  }
  for (const auto& x : candidates) {
    if (is_scalar_matrix(x)) continue;
    auto ker = constant_eigenspace(x, opt);
    if (ker.empty()) continue;
    ScalarMatrix k = matrix_of_columns(ker, r);
    const ScalarMatrix d = w.gram_or_identity();
    ScalarMatrix kc = matrix_of_columns(null_space(k.adjoint() * d), r);
    Corep wk = restrict_to(w, k), wc = restrict_to(w, kc);
    wk.name = w.name;
    wc.name = w.name;
    decompose_into(wk, sub_embed * k, reg, opt, false, out, fresh);
    decompose_into(wc, sub_embed * kc, reg, opt, false, out, fresh);
    return;
  }
  throw Error(ErrorKind::SplittingFailed, "commutant of a " + std::to_string(r) + "-dimensional part of " + v.name +
                                              " has dimension " + std::to_string(end.size()) +
                                              " but no constant rational eigenvalue splits it");
}

double witness(const Corep& v, const std::vector<Summand>& summands, const IrrepRegistry& reg, double q0) {
  const std::size_t n = v.dim;
  const HermitianRoot groot = hermitian_sqrt(v.gram_or_identity().eval(q0));
  ComplexMatrix u(n, n);
  Eigen::Index col = 0;
  for (const auto& s : summands) {
    const Irrep* a = reg.find(s.label);
    const ScalarMatrix ga = a->corep.gram_or_identity();
    const std::size_t m = s.embeddings.size();
    ScalarMatrix c(m, m);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l)
        c(k, l) = (s.embeddings[k].adjoint() * v.gram_or_identity() * s.embeddings[l])(0, 0) / ga(0, 0);
    const HermitianRoot croot = hermitian_sqrt(c.eval(q0));
    const HermitianRoot aroot = hermitian_sqrt(ga.eval(q0));
    std::vector<ComplexMatrix> t;
    for (const auto& e : s.embeddings) t.push_back(e.eval(q0));
    for (std::size_t k = 0; k < m; ++k) {
      ComplexMatrix sk = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(ga.rows()));
      for (std::size_t l = 0; l < m; ++l)
        sk += t[l] * croot.inverse_root(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(k));
      sk = groot.root * sk * aroot.inverse_root;
      if (col + sk.cols() > static_cast<Eigen::Index>(n)) throw Error(ErrorKind::Internal, "too many summand columns");
      u.middleCols(col, sk.cols()) = sk;
      col += sk.cols();
    }
  }
  if (col != static_cast<Eigen::Index>(n)) throw Error(ErrorKind::Internal, "summands do not fill the space");
  ComplexMatrix defect = u.adjoint() * u - ComplexMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  return defect.cwiseAbs().maxCoeff();
}

}  // namespace

// ---- Corep

int Corep::degree() const {
  int d = 0;
  for (const auto& e : entries) d = std::max(d, e.degree());
  return d;
}

ScalarMatrix Corep::gram_or_identity() const { return gram ? *gram : ScalarMatrix::identity(dim); }

Corep Corep::from_spec(const CorepSpec& s) {
  Corep c;
  c.name = s.name;
  c.dim = s.dim;
  c.entries = s.entries;
  return c;
}

Corep Corep::trivial(const PresentationPtr& p) {
  Corep c;
  c.name = "1";
  c.dim = 1;
  c.entries = {NcPoly(p, Scalar(1))};
  c.gram = ScalarMatrix::identity(1);
  return c;
}

CorepCheck is_corep(const CqgAlgebra& alg, const Corep& v) {
  const std::size_t n = v.dim;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      TensorPoly want(alg.pres(), 2);
      for (std::size_t k = 0; k < n; ++k) want += TensorPoly::elementary({v.at(p, k), v.at(k, q)});
      TensorPoly d = alg.comultiply(v.at(p, q)) - want;
      if (!d.is_zero()) return {false, p, q, d.to_string()};
    }
  return {};
}

CorepCheck is_unitary(const CqgAlgebra& alg, const Corep& v) {
  const std::size_t n = v.dim;
  const ScalarMatrix g = v.gram_or_identity();
  auto gi = inverse(g);
  if (!gi) return {false, 0, 0, "singular gram matrix"};
  const auto& pres = alg.pres();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      NcPoly a(pres), b(pres);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (!g(k, l).is_zero()) a += (v.at(k, p).star() * v.at(l, q)).scaled(g(k, l));
          if (!(*gi)(k, l).is_zero()) b += (v.at(p, k) * v.at(q, l).star()).scaled((*gi)(k, l));
        }
      NcPoly da = a - scalar_poly(pres, g(p, q));
      if (!da.is_zero()) return {false, p, q, "v^* G v - G: " + da.to_string()};
      NcPoly db = b - scalar_poly(pres, (*gi)(p, q));
      if (!db.is_zero()) return {false, p, q, "v G^-1 v^* - G^-1: " + db.to_string()};
    }
  return {};
}

Corep tensor(const Corep& v, const Corep& w) {
  Corep t;
  t.name = v.name + " (x) " + w.name;
  t.dim = v.dim * w.dim;
  t.entries.assign(t.dim * t.dim, NcPoly(v.pres()));
  for (std::size_t p = 0; p < v.dim; ++p)
    for (std::size_t q = 0; q < w.dim; ++q)
      for (std::size_t r = 0; r < v.dim; ++r)
        for (std::size_t s = 0; s < w.dim; ++s) t.at(p * w.dim + q, r * w.dim + s) = v.at(p, r) * w.at(q, s);
  if (v.gram || w.gram) t.gram = v.gram_or_identity().kron(w.gram_or_identity());
  return t;
}

Corep direct_sum(const Corep& v, const Corep& w) {
  Corep t;
  t.name = v.name + " (+) " + w.name;
  t.dim = v.dim + w.dim;
  t.entries.assign(t.dim * t.dim, NcPoly(v.pres()));
  for (std::size_t p = 0; p < v.dim; ++p)
    for (std::size_t q = 0; q < v.dim; ++q) t.at(p, q) = v.at(p, q);
  for (std::size_t p = 0; p < w.dim; ++p)
    for (std::size_t q = 0; q < w.dim; ++q) t.at(v.dim + p, v.dim + q) = w.at(p, q);
  if (v.gram || w.gram) {
    ScalarMatrix g(t.dim, t.dim);
    ScalarMatrix gv = v.gram_or_identity(), gw = w.gram_or_identity();
    for (std::size_t p = 0; p < v.dim; ++p)
      for (std::size_t q = 0; q < v.dim; ++q) g(p, q) = gv(p, q);
    for (std::size_t p = 0; p < w.dim; ++p)
      for (std::size_t q = 0; q < w.dim; ++q) g(v.dim + p, v.dim + q) = gw(p, q);
    t.gram = g;
  }
  return t;
}

Corep adjoint(const Corep& v) {
  Corep t;
  t.name = v.name + "-bar";
  t.dim = v.dim;
  for (const auto& e : v.entries) t.entries.push_back(e.star());
  return t;
}

std::vector<ScalarMatrix> intertwiners(const CqgAlgebra& alg, const Corep& v, const Corep& w) {
  alg.require_certified(std::max({1, v.degree(), w.degree()}));
  const std::size_t dv = v.dim, dw = w.dim;
  LinearSystem sys(dw * dv);
  for (std::size_t i = 0; i < dw; ++i)
    for (std::size_t j = 0; j < dv; ++j) {
      std::map<Word, std::vector<std::pair<std::size_t, Scalar>>> rows;
      for (std::size_t k = 0; k < dv; ++k)
        for (const auto& [wd, c] : v.at(k, j).terms()) rows[wd].emplace_back(i * dv + k, c);
      for (std::size_t k = 0; k < dw; ++k)
        for (const auto& [wd, c] : w.at(i, k).terms()) rows[wd].emplace_back(k * dv + j, -c);
      for (const auto& [wd, row] : rows) sys.add_row(row);
    }
  AffineSolution sol = solve_exact(sys);
  std::vector<ScalarMatrix> out;
  for (const auto& b : sol.null_basis) {
    ScalarMatrix x(dw, dv);
    for (std::size_t i = 0; i < dw; ++i)
      for (std::size_t j = 0; j < dv; ++j) x(i, j) = b[i * dv + j];
    out.push_back(std::move(x));
  }
  return out;
}

ScalarMatrix averaged_intertwiner(const CqgAlgebra& alg, const Corep& v, const Corep& w, const ScalarMatrix& x,
                                  const HaarTable& h) {
  if (x.rows() != w.dim || x.cols() != v.dim)
    throw Error(ErrorKind::RegistryMismatch, "matrix size does not fit Mor(v, w)");
  const std::vector<NcPoly> winv = g_inverse(w);
  const std::size_t dv = v.dim, dw = w.dim;
  // (x (x) 1) v
  std::vector<NcPoly> xv(dw * dv, NcPoly(v.pres()));
  for (std::size_t k = 0; k < dw; ++k)
    for (std::size_t j = 0; j < dv; ++j)
      for (std::size_t l = 0; l < dv; ++l)
        if (!x(k, l).is_zero()) xv[k * dv + j] += v.at(l, j).scaled(x(k, l));
  ScalarMatrix y(dw, dv);
  for (std::size_t i = 0; i < dw; ++i)
    for (std::size_t j = 0; j < dv; ++j) {
      NcPoly s(v.pres());
      for (std::size_t k = 0; k < dw; ++k) s += winv[i * dw + k] * xv[k * dv + j];
      y(i, j) = h.eval(s);
    }
  auto mor = intertwiners(alg, v, w);
  // membership: y must be a combination of the basis
  std::vector<ScalarMatrix> span = mor;
  span.push_back(y);
  ScalarMatrix flat(dw * dv, span.size());
  for (std::size_t c = 0; c < span.size(); ++c)
    for (std::size_t i = 0; i < dw; ++i)
      for (std::size_t j = 0; j < dv; ++j) flat(i * dv + j, c) = span[c](i, j);
  if (rank(flat) != mor.size()) throw Error(ErrorKind::CheckFailed, "averaged matrix is not an intertwiner");
  return y;
}

Unitarized unitarize(const CqgAlgebra& alg, const Corep& v, const HaarTable& h, double q0) {
  (void)alg;
  const std::size_t n = v.dim;
  const auto& pres = v.pres();
  Unitarized u;
  u.y = ScalarMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      NcPoly s(pres);
      for (std::size_t k = 0; k < n; ++k) s += v.at(k, i).star() * v.at(k, j);
      u.y(i, j) = h.eval(s);
    }
  HermitianRoot r;
  try {
    r = hermitian_sqrt(u.y.eval(q0));
  } catch (const Error& e) {
    throw Error(ErrorKind::NotPositiveDefinite, "(id (x) h)(v^* v) is not positive definite: " + std::string(e.what()));
  }
  if (r.min_eigenvalue <= 1e-12) throw Error(ErrorKind::NotPositiveDefinite, "(id (x) h)(v^* v) is singular");
  u.root = r.root;
  u.inverse_root = r.inverse_root;
  auto yi = inverse(u.y);
  if (!yi) throw Error(ErrorKind::NotPositiveDefinite, "(id (x) h)(v^* v) is singular");

  // exact defects v^* y v - y and v y^-1 v^* - y^-1, coefficientwise
  std::map<Word, ScalarMatrix> z1, z2;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      NcPoly a(pres), b(pres);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (!u.y(k, l).is_zero()) a += (v.at(k, p).star() * v.at(l, q)).scaled(u.y(k, l));
          if (!(*yi)(k, l).is_zero()) b += (v.at(p, k) * v.at(q, l).star()).scaled((*yi)(k, l));
        }
      a -= NcPoly(pres, u.y(p, q));
      b -= NcPoly(pres, (*yi)(p, q));
      for (const auto& [w, c] : a.terms()) z1.try_emplace(w, n, n).first->second(p, q) = c;
      for (const auto& [w, c] : b.terms()) z2.try_emplace(w, n, n).first->second(p, q) = c;
    }
  for (const auto& [w, m] : z1)
    u.residual = std::max(u.residual, (u.inverse_root * m.eval(q0) * u.inverse_root).cwiseAbs().maxCoeff());
  for (const auto& [w, m] : z2)
    u.residual = std::max(u.residual, (u.root * m.eval(q0) * u.root).cwiseAbs().maxCoeff());
  u.corep = v;
  u.corep.gram = u.y;
  return u;
}

// ---- registry

IrrepRegistry::IrrepRegistry(AlgebraPtr alg, std::shared_ptr<const HaarTable> haar)
    : alg_(std::move(alg)), haar_(std::move(haar)) {}

std::shared_ptr<IrrepRegistry> IrrepRegistry::seeded(AlgebraPtr alg, std::shared_ptr<const HaarTable> haar) {
  auto reg = std::make_shared<IrrepRegistry>(alg, haar);
  reg->add(Corep::trivial(alg->pres()), 0);
  for (const auto& spec : alg->coreps()) {
    Corep c = Corep::from_spec(spec);
    CorepCheck cc = is_corep(*alg, c);
    if (!cc.ok)
      throw Error(ErrorKind::CheckFailed, "declared corep " + c.name + " fails at " + pos(cc.p, cc.q) + ": " + cc.residual);
    if (!is_unitary(*alg, c).ok) {
      if (!haar) throw Error(ErrorKind::HaarTableInsufficient, "unitarizing " + c.name + " needs a haar table");
      c = unitarize(*alg, c, *haar).corep;
      CorepCheck uc = is_unitary(*alg, c);
      if (!uc.ok) throw Error(ErrorKind::CheckFailed, "unitarized " + c.name + " fails: " + uc.residual);
    }
    DecomposeOptions opt;
    opt.degree = 1;
    opt.name = c.name;
    decompose(c, *reg, opt);
  }
  return reg;
}

std::size_t IrrepRegistry::size() const {
  std::shared_lock lock(mutex_);
  return irreps_.size();
}

const Irrep& IrrepRegistry::at(std::size_t k) const {
  std::shared_lock lock(mutex_);
  return irreps_.at(k);
}

const Irrep* IrrepRegistry::find(const std::string& label) const {
  std::shared_lock lock(mutex_);
  for (const auto& i : irreps_)
    if (i.label == label) return &i;
  return nullptr;
}

std::vector<std::string> IrrepRegistry::labels() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& i : irreps_) out.push_back(i.label);
  return out;
}

std::string IrrepRegistry::add(Corep c, int degree) {
  if (!c.gram) c.gram = ScalarMatrix::identity(c.dim);
  // scale so that tr G = dim; unitarity for G is scale invariant
  const Scalar tr = c.gram->trace();
  if (tr.is_zero()) throw Error(ErrorKind::NotPositiveDefinite, "gram matrix with zero trace");
  c.gram = (Scalar(static_cast<long>(c.dim)) / tr) * *c.gram;
  std::unique_lock lock(mutex_);
  std::size_t same = 0;
  for (const auto& i : irreps_)
    if (i.corep.dim == c.dim) ++same;
  std::string label = std::to_string(c.dim) + ":" + std::to_string(same + 1);
  if (c.name.empty() || c.name.find(" (x) ") != std::string::npos || c.name.find(" (+) ") != std::string::npos)
    c.name = "w" + label;
  irreps_.push_back({label, std::move(c), degree});
  return label;
}

// ---- decomposition

Json Decomposition::to_json() const {
  Json j;
  j["dim"] = dim;
  Json s = Json::array();
  for (const auto& x : summands) s.push_back({{"label", x.label}, {"multiplicity", x.multiplicity}});
  j["summands"] = s;
  j["new_labels"] = new_labels;
  j["witness_residual"] = witness_residual;
  return j;
}

Decomposition decompose(const Corep& v, IrrepRegistry& reg, const DecomposeOptions& options) {
  DecomposeOptions opt = options;
  if (opt.degree <= 0) opt.degree = std::max(1, v.degree());
  std::vector<Piece> pieces;
  Decomposition d;
  d.dim = v.dim;
  decompose_into(v, ScalarMatrix::identity(v.dim), reg, opt, true, pieces, d.new_labels);
  for (auto& p : pieces) {
    auto it = std::find_if(d.summands.begin(), d.summands.end(), [&](const Summand& s) { return s.label == p.label; });
    if (it == d.summands.end()) {
      d.summands.push_back({p.label, 0, {}});
      it = d.summands.end() - 1;
    }
    ++it->multiplicity;
    it->embeddings.push_back(std::move(p.embedding));
  }
  d.witness_residual = witness(v, d.summands, reg, opt.q0);
  if (!(d.witness_residual <= opt.tolerance))
    throw Error(ErrorKind::CheckFailed, "decomposition witness is not unitary: residual " + std::to_string(d.witness_residual));
  return d;
}

Json FusionTable::to_json() const {
  Json j;
  j["depth"] = depth;
  Json e = Json::array();
  for (const auto& f : entries) {
    Json s = Json::array();
    for (const auto& [l, m] : f.summands) s.push_back({{"label", l}, {"multiplicity", m}});
    e.push_back({{"left", f.left}, {"right", f.right}, {"summands", s}});
  }
  j["entries"] = e;
  return j;
}

const FusionEntry* FusionTable::find(const std::string& l, const std::string& r) const {
  for (const auto& e : entries)
    if (e.left == l && e.right == r) return &e;
  return nullptr;
}

FusionTable fusion_table(IrrepRegistry& reg, int depth, const DecomposeOptions& opt) {
  FusionTable ft;
  ft.depth = depth;
  std::set<std::pair<std::size_t, std::size_t>> done;
  bool progress = true;
  while (progress) {
    progress = false;
    const std::size_t n = reg.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Irrep& x = reg.at(a);
        const Irrep& y = reg.at(b);
        if (x.degree + y.degree > depth || done.count({a, b})) continue;
        done.insert({a, b});
        DecomposeOptions o = opt;
        o.degree = x.degree + y.degree;
        o.name.clear();
        Decomposition d = decompose(tensor(x.corep, y.corep), reg, o);
        FusionEntry e{x.label, y.label, {}};
        for (const auto& s : d.summands) e.summands.emplace_back(s.label, s.multiplicity);
        ft.entries.push_back(std::move(e));
      }
    if (reg.size() > n) progress = true;
  }
  return ft;
}

Report verify_wor1_axiom3(const CqgAlgebra& alg, const Corep& v) {
  Report r;
  r.title = "antipode on " + v.name;
  const std::size_t n = v.dim;
  std::vector<NcPoly> k;
  for (const auto& e : v.entries) k.push_back(alg.antipode(e));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      NcPoly a(alg.pres()), b(alg.pres());
      for (std::size_t m = 0; m < n; ++m) {
        a += k[p * n + m] * v.at(m, q);
        b += v.at(p, m) * k[m * n + q];
      }
      NcPoly want(alg.pres(), Scalar(p == q ? 1 : 0));
      NcPoly da = a - want, db = b - want;
      r.check("kappa(v) v", da.is_zero(), pos(p, q), [&] { return da.to_string(); });
      r.check("v kappa(v)", db.is_zero(), pos(p, q), [&] { return db.to_string(); });
    }
  return r;
}

std::size_t coefficient_rank(const IrrepRegistry& reg) {
  std::map<Word, std::size_t> cols;
  std::vector<const NcPoly*> rows;
  for (std::size_t k = 0; k < reg.size(); ++k)
    for (const auto& e : reg.at(k).corep.entries) {
      rows.push_back(&e);
      for (const auto& [w, c] : e.terms()) cols.try_emplace(w, cols.size());
    }
  ScalarMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [w, c] : rows[i]->terms()) m(i, cols.at(w)) = c;
  return rank(m);
}

}  // namespace cqg
