#include "cqg/dual.hpp"

#include "cqg/error.hpp"

namespace cqg {

namespace {

Json matrix_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
    rows.push_back(r);
  }
  return rows;
}

std::string where(const std::string& l, std::size_t p, std::size_t q) {
  return l + "[" + std::to_string(p + 1) + "," + std::to_string(q + 1) + "]";
}

}  // namespace

// ---- DualElement

bool DualElement::is_zero() const {
  for (const auto& [l, m] : blocks)
    if (!m.is_zero()) return false;
  return true;
}

bool operator==(const DualElement& a, const DualElement& b) {
  for (const auto& [l, m] : a.blocks) {
    auto it = b.blocks.find(l);
    if (it == b.blocks.end() ? !m.is_zero() : !(it->second == m)) return false;
  }
  for (const auto& [l, m] : b.blocks)
    if (!a.blocks.count(l) && !m.is_zero()) return false;
  return true;
}

DualElement& DualElement::operator+=(const DualElement& o) {
  for (const auto& [l, m] : o.blocks) {
    auto it = blocks.find(l);
    if (it == blocks.end())
      blocks.emplace(l, m);
    else
      it->second = it->second + m;
  }
  return *this;
}

DualElement DualElement::scaled(const Scalar& c) const {
  DualElement d;
  for (const auto& [l, m] : blocks) d.blocks.emplace(l, c * m);
  return d;
}

Json DualElement::to_json() const {
  Json j = Json::object();
  for (const auto& [l, m] : blocks) j[l] = matrix_json(m);
  return j;
}

// ---- DualContext

DualContext::DualContext(std::shared_ptr<const IrrepRegistry> reg, std::shared_ptr<const HaarTable> haar)
    : reg_(std::move(reg)), haar_(std::move(haar)) {
  for (std::size_t k = 0; k < reg_->size(); ++k) {
    const Irrep& a = reg_->at(k);
    labels_.push_back(a.label);
    irreps_[a.label] = &a;
    ScalarMatrix f = f_matrix(a, *haar_, {}).f;
    auto fi = inverse(f);
    if (!fi) throw Error(ErrorKind::SingularMatrix, "F matrix of " + a.label + " is singular");
    ScalarMatrix g = a.corep.gram_or_identity();
    auto gi = inverse(g);
    if (!gi) throw Error(ErrorKind::SingularMatrix, "gram matrix of " + a.label + " is singular");
    f_[a.label] = f;
    f_inv_[a.label] = *fi;
    gram_[a.label] = g;
    gram_inv_[a.label] = *gi;
  }
}

std::size_t DualContext::block_dim(const std::string& label) const { return corep(label).dim; }

const ScalarMatrix& DualContext::f(const std::string& label) const {
  auto it = f_.find(label);
  if (it == f_.end()) throw Error(ErrorKind::RegistryMismatch, "no block " + label + " in this dual context");
  return it->second;
}

const ScalarMatrix& DualContext::gram(const std::string& label) const {
  auto it = gram_.find(label);
  if (it == gram_.end()) throw Error(ErrorKind::RegistryMismatch, "no block " + label + " in this dual context");
  return it->second;
}

const Corep& DualContext::corep(const std::string& label) const {
  auto it = irreps_.find(label);
  if (it == irreps_.end()) throw Error(ErrorKind::RegistryMismatch, "no block " + label + " in this dual context");
  return it->second->corep;
}

void DualContext::require_block(const DualElement& w) const {
  for (const auto& [l, m] : w.blocks) {
    const std::size_t n = block_dim(l);
    if (m.rows() != n || m.cols() != n)
      throw Error(ErrorKind::RegistryMismatch, "block " + l + " has the wrong size");
  }
}

DualElement DualContext::basis(const std::string& label, std::size_t p, std::size_t q) const {
  const std::size_t n = block_dim(label);
  if (p >= n || q >= n) throw Error(ErrorKind::RegistryMismatch, "index outside block " + label);
  DualElement d;
  d.blocks.emplace(label, ScalarMatrix::unit(n, n, p, q));
  return d;
}

NcPoly DualContext::representing(const std::string& label, std::size_t p, std::size_t q) const {
  const Corep& u = corep(label);
  const ScalarMatrix& fi = f_inv_.at(label);
  const ScalarMatrix& gi = gram_inv_.at(label);
  NcPoly a(u.pres());
  for (std::size_t k = 0; k < u.dim; ++k) {
    if (fi(p, k).is_zero()) continue;
    for (std::size_t t = 0; t < u.dim; ++t)
      if (!gi(q, t).is_zero()) a += u.at(k, t).star().scaled(fi(p, k) * gi(q, t));
  }
  return a;
}

NcPoly DualContext::representing(const DualElement& w) const {
  require_block(w);
  NcPoly a(haar_->pres);
  for (const auto& [l, m] : w.blocks)
    for (std::size_t p = 0; p < m.rows(); ++p)
      for (std::size_t q = 0; q < m.cols(); ++q)
        if (!m(p, q).is_zero()) a += representing(l, p, q).scaled(m(p, q));
  return a;
}

Scalar DualContext::pair(const DualElement& w, const NcPoly& x) const {
  if (x.is_zero()) return Scalar();
  return haar_->eval(representing(w) * x);
}

Scalar DualContext::block_value(const DualElement& w, const std::string& label, std::size_t r, std::size_t s) const {
  auto it = w.blocks.find(label);
  if (it == w.blocks.end()) return Scalar();
  return it->second(r, s);
}

DualElement DualContext::convolve(const DualElement& a, const DualElement& b) const {
  require_block(a);
  require_block(b);
  DualElement d;
  for (const auto& [l, m] : a.blocks) {
    auto it = b.blocks.find(l);
    if (it != b.blocks.end()) d.blocks.emplace(l, m * it->second);
  }
  return d;
}

Scalar DualContext::convolve_by_definition(const DualElement& a, const DualElement& b, const NcPoly& x) const {
  const CqgAlgebra& alg = reg_->algebra();
  TensorPoly t = alg.comultiply(x);
  const NcPoly ra = representing(a), rb = representing(b);
  Scalar s;
  for (const auto& [legs, c] : t.terms())
    s += c * haar_->eval(ra * NcPoly::word(t.presentation(), legs[0])) *
         haar_->eval(rb * NcPoly::word(t.presentation(), legs[1]));
  return s;
}

DualElement DualContext::star(const DualElement& w) const {
  require_block(w);
  DualElement d;
  for (const auto& [l, m] : w.blocks) d.blocks.emplace(l, gram_inv_.at(l) * m.adjoint() * gram_.at(l));
  return d;
}

Scalar DualContext::star_by_definition(const DualElement& w, const NcPoly& x) const {
  return pair(w, reg_->algebra().antipode(x).star()).conj();
}

Scalar DualContext::comult_eval(const DualElement& w, const NcPoly& a, const NcPoly& b) const { return pair(w, a * b); }

std::string DualContext::conjugate_label(const std::string& label) const {
  const Corep adj = adjoint(corep(label));
  std::vector<std::string> hits;
  for (const auto& l : labels_) {
    const Corep& c = corep(l);
    if (c.dim != adj.dim) continue;
    if (!intertwiners(reg_->algebra(), c, adj).empty()) hits.push_back(l);
  }
  if (hits.empty())
    throw Error(ErrorKind::NotInRegistry, "conjugate of " + label + " is not in the registry; extend it first");
  if (hits.size() > 1) throw Error(ErrorKind::ConjugateUnresolved, "conjugate of " + label + " matches several entries");
  return hits.front();
}

KMatrix DualContext::k_matrix(const std::string& label) const {
  KMatrix out;
  out.label = label;
  out.conjugate = conjugate_label(label);
  const std::string& b = out.conjugate;
  out.k = f_.at(b).transpose() * gram_.at(b);
  auto ki = inverse(out.k);
  if (!ki) throw Error(ErrorKind::SingularMatrix, "K matrix of " + label + " is singular");
  out.report.title = "K matrix " + label;
  const CqgAlgebra& alg = reg_->algebra();
  const Corep& u = corep(b);
  const std::size_t n = u.dim;
  std::vector<NcPoly> k2;
  for (const auto& e : u.entries) k2.push_back(alg.antipode(alg.antipode(e)));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      DualElement w = basis(b, p, q);
      ScalarMatrix want = *ki * ScalarMatrix::unit(n, n, p, q) * out.k;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          Scalar got = pair(w, k2[r * n + s]);
          out.report.check("kappa-hat-squared", got == want(r, s), where(b, p, q) + " on u" + where(b, r, s),
                           [&] { return (got - want(r, s)).to_string(); });
        }
    }
  return out;
}

Report DualContext::verify() const {
  Report r;
  r.title = "dual";
  const CqgAlgebra& alg = reg_->algebra();
  struct B {
    std::string l;
    std::size_t p, q;
    NcPoly rep;
  };
  std::vector<B> basis_list;
  for (const auto& l : labels_)
    for (std::size_t p = 0; p < block_dim(l); ++p)
      for (std::size_t q = 0; q < block_dim(l); ++q) basis_list.push_back({l, p, q, representing(l, p, q)});

  // pairing matrix and the cache of basis values on normal words
  std::vector<std::map<Word, Scalar>> on_word(basis_list.size());
  auto value = [&](std::size_t k, const Word& w) -> const Scalar& {
    auto it = on_word[k].find(w);
    if (it != on_word[k].end()) return it->second;
    return on_word[k].emplace(w, haar_->eval(basis_list[k].rep * NcPoly::word(haar_->pres, w))).first->second;
  };
  auto pair_basis = [&](std::size_t k, const NcPoly& x) {
    Scalar s;
    for (const auto& [w, c] : x.terms()) s += c * value(k, w);
    return s;
  };
  for (std::size_t k = 0; k < basis_list.size(); ++k)
    for (const auto& t : basis_list) {
      Scalar v = pair_basis(k, corep(t.l).at(t.p, t.q));
      bool want = basis_list[k].l == t.l && basis_list[k].p == t.p && basis_list[k].q == t.q;
      r.check("pairing", v == Scalar(want ? 1 : 0), where(basis_list[k].l, basis_list[k].p, basis_list[k].q) + " on u" +
                                                         where(t.l, t.p, t.q),
              [&] { return v.to_string(); });
    }

  // convolution law against (w1 (x) w2) Delta on every coefficient
  for (const auto& t : basis_list) {
    const TensorPoly& d = alg.comultiply(corep(t.l).at(t.p, t.q));
    for (std::size_t a = 0; a < basis_list.size(); ++a)
      for (std::size_t b = 0; b < basis_list.size(); ++b) {
        if (basis_list[a].l != t.l || basis_list[b].l != t.l) continue;  // other blocks vanish by the pairing check
        Scalar s;
        for (const auto& [legs, c] : d.terms()) {
          const Scalar& x = value(a, legs[0]);
          if (x.is_zero()) continue;
          s += c * x * value(b, legs[1]);
        }
        DualElement prod = convolve(this->basis(basis_list[a].l, basis_list[a].p, basis_list[a].q),
                                    this->basis(basis_list[b].l, basis_list[b].p, basis_list[b].q));
        Scalar want = block_value(prod, t.l, t.p, t.q);
        r.check("convolution", s == want, where(basis_list[a].l, basis_list[a].p, basis_list[a].q) + " * " +
                                              where(basis_list[b].l, basis_list[b].p, basis_list[b].q) + " on u" +
                                              where(t.l, t.p, t.q),
                [&] { return (s - want).to_string(); });
      }
  }

  // star: block formula against conj(omega(kappa(x)^*)), and involution
  for (std::size_t k = 0; k < basis_list.size(); ++k) {
    const auto& e = basis_list[k];
    DualElement w = this->basis(e.l, e.p, e.q);
    DualElement ws = star(w);
    r.check("star-involution", star(ws) == w, where(e.l, e.p, e.q), [] { return "star twice differs"; });
    const Corep& u = corep(e.l);
    for (std::size_t p = 0; p < u.dim; ++p)
      for (std::size_t q = 0; q < u.dim; ++q) {
        Scalar direct = pair_basis(k, alg.antipode(u.at(p, q)).star()).conj();
        Scalar model = block_value(ws, e.l, p, q);
        r.check("star-definition", direct == model, where(e.l, e.p, e.q) + " on u" + where(e.l, p, q),
                [&] { return (direct - model).to_string(); });
      }
  }

  // dual comultiplication is multiplicative on coefficient pairs of each block
  for (const auto& l : labels_) {
    const Corep& u = corep(l);
    if (u.degree() > 1) continue;
    for (std::size_t p = 0; p < u.dim; ++p)
      for (std::size_t q = 0; q < u.dim; ++q) {
        const NcPoly& x = u.at(p, q);
        const NcPoly& y = u.at(q, p);
        TensorPoly dx = alg.comultiply(x), dy = alg.comultiply(y);
        for (std::size_t a = 0; a < basis_list.size(); ++a) {
          if (basis_list[a].l != l) continue;
          for (std::size_t b = 0; b < basis_list.size(); ++b) {
            if (basis_list[b].l != l) continue;
            DualElement prod = convolve(this->basis(l, basis_list[a].p, basis_list[a].q),
                                        this->basis(l, basis_list[b].p, basis_list[b].q));
            Scalar lhs = comult_eval(prod, x, y);
            Scalar rhs;
            for (const auto& [lx, cx] : dx.terms())
              for (const auto& [ly, cy] : dy.terms()) {
                NcPoly first = NcPoly::word(haar_->pres, lx[0]) * NcPoly::word(haar_->pres, ly[0]);
                Scalar v1 = pair_basis(a, first);
                if (v1.is_zero()) continue;
                NcPoly second = NcPoly::word(haar_->pres, lx[1]) * NcPoly::word(haar_->pres, ly[1]);
                rhs += cx * cy * v1 * pair_basis(b, second);
              }
            r.check("dual-comultiplication", lhs == rhs, l + " pair " + std::to_string(a) + "," + std::to_string(b),
                    [&] { return (lhs - rhs).to_string(); });
          }
        }
      }
  }

  for (const auto& l : labels_) {
    KMatrix k = k_matrix(l);
    r.merge(k.report);
  }
  return r;
}

Json DualContext::to_json() const {
  Json j;
  j["schema_version"] = 1;
  Json blocks = Json::object();
  Json ks = Json::object();
  Json conj = Json::object();
  for (const auto& l : labels_) {
    blocks[l] = {{"dim", block_dim(l)}, {"f", matrix_json(f_.at(l))}, {"gram", matrix_json(gram_.at(l))}};
    try {
      KMatrix k = k_matrix(l);
      ks[l] = {{"block", k.conjugate}, {"k", matrix_json(k.k)}, {"verified", k.report.passed()}};
      conj[l] = k.conjugate;
    } catch (const Error& e) {
      conj[l] = nullptr;
    }
  }
  j["blocks"] = blocks;
  j["k_matrices"] = ks;
  j["conjugation_map"] = conj;
  return j;
}

}  // namespace cqg
