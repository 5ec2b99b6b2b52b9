#include "cqg/hopf.hpp"

#include <algorithm>
#include <mutex>

#include "cqg/error.hpp"
#include "cqg/linalg.hpp"

namespace cqg {

namespace {

// Raw (unreduced) tensor expansion of a free polynomial under the letter
// table, legs normalized only at the end. This is what "the images satisfy
// the relations" means without leaning on confluence of partial products.
TensorPoly raw_image(const PresentationPtr& pres, const std::vector<TensorPoly>& table, const FreePoly& rel) {
  std::map<TensorPoly::Legs, Scalar> raw;
  for (const auto& [w, c] : rel) {
    std::map<TensorPoly::Legs, Scalar> acc{{TensorPoly::Legs(2), c}};
    for (Letter x : w) {
      std::map<TensorPoly::Legs, Scalar> next;
      for (const auto& [legs, v] : acc)
        for (const auto& [l2, v2] : table[x].terms()) {
          TensorPoly::Legs n{legs[0] + l2[0], legs[1] + l2[1]};
          Scalar s = v * v2;
          auto [it, ins] = next.try_emplace(n, s);
          if (!ins) it->second += s;
        }
      acc = std::move(next);
    }
    for (auto& [legs, v] : acc) {
      auto [it, ins] = raw.try_emplace(legs, v);
      if (!ins) it->second += v;
    }
  }
  TensorPoly out(pres, 2);
  for (const auto& [legs, v] : raw) {
    if (v.is_zero()) continue;
    out += TensorPoly::elementary({NcPoly::word(pres, legs[0]), NcPoly::word(pres, legs[1])}).scaled(v);
  }
  return out;
}

}  // namespace

AlgebraPtr CqgAlgebra::create(CqgData data, bool check_relations) {
  if (!data.pres) throw Error(ErrorKind::Internal, "algebra without presentation");
  std::shared_ptr<CqgAlgebra> a(new CqgAlgebra());
  a->name_ = data.name;
  a->pres_ = data.pres;
  const auto& syms = a->pres_->symbols();
  const std::size_t n = syms.size();
  data.delta.resize(n);
  data.counit.resize(n);
  data.antipode.resize(n);

  a->delta_.resize(n);
  a->counit_.resize(n);
  a->antipode_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Letter s = syms[x].star;
    if (data.delta[x]) {
      a->delta_[x] = *data.delta[x];
    } else if (data.delta[s]) {
      a->delta_[x] = data.delta[s]->star();
    } else {
      throw Error(ErrorKind::IncompleteTable, "comultiplication of '" + syms[x].name + "' is missing");
    }
    if (data.counit[x]) {
      a->counit_[x] = *data.counit[x];
    } else if (data.counit[s]) {
      a->counit_[x] = data.counit[s]->conj();
    } else {
      throw Error(ErrorKind::IncompleteTable, "counit of '" + syms[x].name + "' is missing");
    }
    if (!data.antipode[x])
      throw Error(ErrorKind::IncompleteTable, "antipode of '" + syms[x].name + "' is missing");
    a->antipode_[x] = *data.antipode[x];
  }
  // Delta and eps must be *-compatible across each star pair.
  for (std::size_t x = 0; x < n; ++x) {
    const Letter s = syms[x].star;
    if (!(a->delta_[s] == a->delta_[x].star()))
      throw Error(ErrorKind::CheckFailed,
                  "comultiplication of '" + syms[s].name + "' is not the adjoint of that of '" + syms[x].name + "'");
    if (!(a->counit_[s] == a->counit_[x].conj()))
      throw Error(ErrorKind::CheckFailed, "counit is not *-compatible on '" + syms[x].name + "'");
  }

  a->relations_ = std::move(data.relations);
  if (a->relations_.empty()) {
    for (const auto& r : a->pres_->rules()) {
      FreePoly rel{{r.lhs, Scalar(1)}};
      for (const auto& [w, c] : r.rhs) add_term(rel, w, -c);
      a->relations_.push_back(std::move(rel));
    }
  }
  a->coreps_ = std::move(data.coreps);
  if (check_relations) {
    for (std::size_t k = 0; k < a->relations_.size(); ++k) a->check_relation(a->relations_[k], std::to_string(k));
  }
  return a;
}

void CqgAlgebra::check_relation(const FreePoly& rel, const std::string& label) const {
  TensorPoly img = raw_image(pres_, delta_, rel);
  if (!img.is_zero()) {
    throw Error(ErrorKind::CheckFailed, "comultiplication does not respect relation " + label + ": image residual " +
                                            img.to_string());
  }
}

const CorepSpec* CqgAlgebra::find_corep(const std::string& name) const {
  for (const auto& c : coreps_)
    if (c.name == name) return &c;
  return nullptr;
}

NcPoly CqgAlgebra::gen(const std::string& name) const {
  int id = pres_->find(name);
  if (id < 0) throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'");
  return NcPoly::generator(pres_, static_cast<Letter>(id));
}

void CqgAlgebra::require_certified(int degree) const {
  int need = std::max(2 * pres_->max_rule_degree(), 2 * degree);
  if (!pres_->ensure_certified(need))
    throw Error(ErrorKind::DegreeExceedsCertificate,
                "presentation of " + name_ + " is not confluent up to degree " + std::to_string(need));
}

const TensorPoly& CqgAlgebra::comultiply_word(const Word& w) const {
  {
    std::shared_lock lock(memo_mutex_);
    auto it = delta_memo_.find(w);
    if (it != delta_memo_.end()) return *it->second;
  }
  TensorPoly t;
  if (w.empty()) {
    t = TensorPoly::one(pres_, 2);
  } else if (w.size() == 1) {
    t = delta_[w[0]];
  } else {
    const TensorPoly& head = comultiply_word(w.substr(0, w.size() - 1));
    t = head * delta_[w.back()];
  }
  std::unique_lock lock(memo_mutex_);
  auto [it, ins] = delta_memo_.try_emplace(w, std::make_unique<TensorPoly>(std::move(t)));
  return *it->second;
}

TensorPoly CqgAlgebra::comultiply(const NcPoly& x) const {
  require_certified(std::max(1, x.degree()));
  TensorPoly out(pres_, 2);
  for (const auto& [w, c] : x.terms()) out += comultiply_word(w).scaled(c);
  return out;
}

Scalar CqgAlgebra::counit_word(const Word& w) const {
  Scalar s(1);
  for (Letter x : w) {
    s *= counit_[x];
    if (s.is_zero()) break;
  }
  return s;
}

Scalar CqgAlgebra::counit(const NcPoly& x) const {
  Scalar s;
  for (const auto& [w, c] : x.terms()) s += c * counit_word(w);
  return s;
}

NcPoly CqgAlgebra::antipode_word(const Word& w) const {
  NcPoly out(pres_, Scalar(1));
  for (Letter x : w) out = antipode_[x] * out;
  return out;
}

NcPoly CqgAlgebra::antipode(const NcPoly& x) const {
  NcPoly out(pres_);
  for (const auto& [w, c] : x.terms()) out += antipode_word(w).scaled(c);
  return out;
}

TensorPoly CqgAlgebra::delta_left(const TensorPoly& t) const {
  TensorPoly out(pres_, 3);
  for (const auto& [legs, c] : t.terms())
    for (const auto& [l2, c2] : comultiply_word(legs[0]).terms()) out.add({l2[0], l2[1], legs[1]}, c * c2);
  return out;
}

TensorPoly CqgAlgebra::delta_right(const TensorPoly& t) const {
  TensorPoly out(pres_, 3);
  for (const auto& [legs, c] : t.terms())
    for (const auto& [l2, c2] : comultiply_word(legs[1]).terms()) out.add({legs[0], l2[0], l2[1]}, c * c2);
  return out;
}

bool CqgAlgebra::same_as(const CqgAlgebra& o) const {
  if (name_ != o.name_ || !pres_->same_as(*o.pres_)) return false;
  for (std::size_t x = 0; x < delta_.size(); ++x) {
    if (!(delta_[x].terms() == o.delta_[x].terms())) return false;
    if (!(counit_[x] == o.counit_[x])) return false;
    if (!(antipode_[x].terms() == o.antipode_[x].terms())) return false;
  }
  if (coreps_.size() != o.coreps_.size()) return false;
  for (std::size_t k = 0; k < coreps_.size(); ++k) {
    const auto &a = coreps_[k], &b = o.coreps_[k];
    if (a.name != b.name || a.dim != b.dim) return false;
    for (std::size_t e = 0; e < a.entries.size(); ++e)
      if (!(a.entries[e].terms() == b.entries[e].terms())) return false;
  }
  return true;
}

// ---------------------------------------------------------------- verification

Report verify_hopf(const CqgAlgebra& alg, int bound) {
  alg.require_certified(bound);
  const auto& pres = alg.pres();
  Report rep;
  rep.title = "hopf axioms for " + alg.name() + " up to degree " + std::to_string(bound);
  const auto monomials = pres->normal_monomials(bound);
  const NcPoly one = alg.one();

  for (const Word& m : monomials) {
    const std::string item = pres->word_text(m);
    const NcPoly x = alg.elem(m);
    const TensorPoly& d = alg.comultiply_word(m);

    TensorPoly l = alg.delta_left(d), r = alg.delta_right(d);
    rep.check("coassociativity", l == r, item, [&] { return (l - r).to_string(); });

    NcPoly cl(pres), cr(pres), sl(pres), sr(pres);
    for (const auto& [legs, c] : d.terms()) {
      Scalar e0 = alg.counit_word(legs[0]), e1 = alg.counit_word(legs[1]);
      if (!e0.is_zero()) cl += alg.elem(legs[1]).scaled(c * e0);
      if (!e1.is_zero()) cr += alg.elem(legs[0]).scaled(c * e1);
      sl += (alg.antipode_word(legs[0]) * alg.elem(legs[1])).scaled(c);
      sr += (alg.elem(legs[0]) * alg.antipode_word(legs[1])).scaled(c);
    }
    rep.check("counit-left", cl == x, item, [&] { return (cl - x).to_string(); });
    rep.check("counit-right", cr == x, item, [&] { return (cr - x).to_string(); });
    const NcPoly eps = one.scaled(alg.counit_word(m));
    rep.check("antipode-left", sl == eps, item, [&] { return (sl - eps).to_string(); });
    rep.check("antipode-right", sr == eps, item, [&] { return (sr - eps).to_string(); });

    NcPoly kk = alg.antipode(alg.antipode(x.star()).star());
    rep.check("antipode-star", kk == x, item, [&] { return (kk - x).to_string(); });

    TensorPoly ds = alg.comultiply(x.star()), sd = d.star();
    rep.check("comultiplication-star", ds == sd, item, [&] { return (ds - sd).to_string(); });

    Scalar ek = alg.counit(alg.antipode(x)), e = alg.counit_word(m);
    rep.check("counit-antipode", ek == e, item, [&] { return (ek - e).to_string(); });
  }

  for (const Word& a : monomials) {
    if (a.empty()) continue;
    for (const Word& b : monomials) {
      if (b.empty() || static_cast<int>(a.size() + b.size()) > bound) continue;
      const std::string item = pres->word_text(a) + " . " + pres->word_text(b);
      NcPoly xa = alg.elem(a), xb = alg.elem(b), ab = xa * xb;
      TensorPoly lhs = alg.comultiply(ab), rhs = alg.comultiply_word(a) * alg.comultiply_word(b);
      rep.check("comultiplication-multiplicative", lhs == rhs, item, [&] { return (lhs - rhs).to_string(); });
      Scalar el = alg.counit(ab), er = alg.counit_word(a) * alg.counit_word(b);
      rep.check("counit-multiplicative", el == er, item, [&] { return (el - er).to_string(); });
      NcPoly kl = alg.antipode(ab), kr = alg.antipode_word(b) * alg.antipode_word(a);
      rep.check("antipode-antimultiplicative", kl == kr, item, [&] { return (kl - kr).to_string(); });
    }
  }
  return rep;
}

TensorPoly galois_t1(const CqgAlgebra& alg, const TensorPoly& t) {
  TensorPoly out(alg.pres(), 2);
  for (const auto& [legs, c] : t.terms())
    for (const auto& [l2, c2] : alg.comultiply_word(legs[0]).terms()) out.add_product(l2, {Word(), legs[1]}, c * c2);
  return out;
}

TensorPoly galois_t2(const CqgAlgebra& alg, const TensorPoly& t) {
  TensorPoly out(alg.pres(), 2);
  for (const auto& [legs, c] : t.terms())
    for (const auto& [l2, c2] : alg.comultiply_word(legs[1]).terms()) out.add_product({legs[0], Word()}, l2, c * c2);
  return out;
}

Report galois_maps(const CqgAlgebra& alg, int bound) {
  alg.require_certified(bound);
  const auto& pres = alg.pres();
  Report rep;
  rep.title = "galois maps for " + alg.name() + " up to degree " + std::to_string(bound);
  const auto monomials = pres->normal_monomials(bound);

  for (int which = 1; which <= 2; ++which) {
    std::map<TensorPoly::Legs, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns;
    for (const Word& x : monomials)
      for (const Word& y : monomials) {
        TensorPoly basis(pres, 2);
        basis.add({x, y}, Scalar(1));
        TensorPoly img = which == 1 ? galois_t1(alg, basis) : galois_t2(alg, basis);
        std::vector<std::pair<std::size_t, Scalar>> col;
        for (const auto& [legs, c] : img.terms()) {
          auto [it, ins] = row_of.try_emplace(legs, row_of.size());
          col.emplace_back(it->second, c);
        }
        columns.push_back(std::move(col));
      }
    // rank of the image matrix = rank of its transpose; rows of the
    // transposed system are the columns computed above
    LinearSystem sys(row_of.size());
    for (const auto& col : columns) sys.add_row(col, Scalar());
    std::size_t rk = solve_exact(sys).rank();
    const std::string fam = which == 1 ? "t1-injective" : "t2-injective";
    rep.check(fam, rk == columns.size(), std::to_string(columns.size()) + " basis tensors",
              [&] { return "rank " + std::to_string(rk); });
  }

  // 1 (x) y is fixed by T1, x (x) 1 by T2
  for (const Word& y : monomials) {
    TensorPoly t(pres, 2);
    t.add({Word(), y}, Scalar(1));
    TensorPoly img = galois_t1(alg, t);
    rep.check("t1-unit", img == t, pres->word_text(y), [&] { return (img - t).to_string(); });
    TensorPoly t2(pres, 2);
    t2.add({y, Word()}, Scalar(1));
    TensorPoly img2 = galois_t2(alg, t2);
    rep.check("t2-unit", img2 == t2, pres->word_text(y), [&] { return (img2 - t2).to_string(); });
  }

  const NcPoly one = alg.one();
  for (const auto& v : alg.coreps()) {
    for (std::size_t p = 0; p < v.dim; ++p)
      for (std::size_t q = 0; q < v.dim; ++q) {
        TensorPoly w1(pres, 2), w2(pres, 2);
        for (std::size_t k = 0; k < v.dim; ++k) {
          w1 += galois_t1(alg, TensorPoly::elementary({v.at(p, k), alg.antipode(v.at(k, q))}));
          w2 += galois_t2(alg, TensorPoly::elementary({alg.antipode(v.at(p, k)), v.at(k, q)}));
        }
        TensorPoly e1 = TensorPoly::elementary({v.at(p, q), one});
        TensorPoly e2 = TensorPoly::elementary({one, v.at(p, q)});
        const std::string item = v.name + "[" + std::to_string(p + 1) + "," + std::to_string(q + 1) + "]";
        rep.check("t1-witness", w1 == e1, item, [&] { return (w1 - e1).to_string(); });
        rep.check("t2-witness", w2 == e2, item, [&] { return (w2 - e2).to_string(); });
      }
  }
  return rep;
}

}  // namespace cqg
