#include "cqg/haar.hpp"

#include <sstream>

#include "cqg/corep.hpp"
#include "cqg/error.hpp"

namespace cqg {

namespace {

Word parse_word(const Presentation& p, const std::string& text) {
  Word w;
  if (text == "1") return w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int id = p.find(tok);
    if (id < 0) throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + tok + "' in haar table");
    w.push_back(static_cast<Letter>(id));
  }
  return w;
}

std::string poly_text(const NcPoly& p) { return p.to_string(); }

}  // namespace

Scalar HaarTable::eval(const NcPoly& x) const {
  Scalar s;
  for (const auto& [w, c] : x.terms()) {
    if (static_cast<int>(w.size()) > degree)
      throw Error(ErrorKind::HaarTableInsufficient, "haar table of degree " + std::to_string(degree) +
                                                        " cannot evaluate " + pres->word_text(w));
    auto it = values.find(w);
    if (it == values.end())
      throw Error(ErrorKind::Internal, "haar table has no entry for " + pres->word_text(w));
    s += c * it->second;
  }
  return s;
}

Json HaarTable::to_json() const {
  Json j;
  j["schema_version"] = 1;
  j["degree"] = degree;
  j["solution_dimension"] = solution_dimension;
  j["unknowns"] = unknowns;
  j["equations"] = equations;
  Json v = Json::object();
  for (const auto& [w, s] : values) v[pres->word_text(w)] = s.to_string();
  j["values"] = v;
  return j;
}

HaarTable HaarTable::from_json(const Json& j, PresentationPtr p) {
  HaarTable t;
  t.pres = std::move(p);
  t.degree = j.at("degree").get<int>();
  t.solution_dimension = j.value("solution_dimension", std::size_t{1});
  t.unknowns = j.value("unknowns", std::size_t{0});
  t.equations = j.value("equations", std::size_t{0});
  for (const auto& [k, v] : j.at("values").items())
    t.values[parse_word(*t.pres, k)] = Scalar::parse(v.get<std::string>());
  for (const Word& w : t.pres->normal_monomials(t.degree))
    if (!t.values.count(w))
      throw Error(ErrorKind::IncompleteTable, "haar table lacks " + t.pres->word_text(w));
  return t;
}

HaarTable compute_haar(const CqgAlgebra& alg, int degree) {
  if (degree < 0) throw Error(ErrorKind::DegreeClosureViolated, "negative degree");
  alg.require_certified(degree);
  const auto& pres = alg.pres();
  std::vector<Word> mons = pres->normal_monomials(degree);
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < mons.size(); ++k) index[mons[k]] = k;
  auto idx = [&](const Word& w, const Word& from) {
    auto it = index.find(w);
    if (it == index.end())
      throw Error(ErrorKind::DegreeClosureViolated, "Delta(" + pres->word_text(from) + ") has leg " +
                                                        pres->word_text(w) + " beyond degree " +
                                                        std::to_string(degree));
    return it->second;
  };

  LinearSystem sys(mons.size());
  for (const Word& m : mons) {
    const TensorPoly& t = alg.comultiply_word(m);
    // (id (x) h): for each left leg b, sum_b' c h(b') = h(m) [b = 1]
    std::map<Word, std::vector<std::pair<std::size_t, Scalar>>> left, right;
    for (const auto& [legs, c] : t.terms()) {
      left[legs[0]].emplace_back(idx(legs[1], m), c);
      right[legs[1]].emplace_back(idx(legs[0], m), c);
    }
    for (auto* side : {&left, &right}) {
      if (!side->count(Word())) (*side)[Word()];
      for (auto& [b, row] : *side) {
        if (b.empty()) row.emplace_back(index.at(m), Scalar(-1));
        sys.add_row(row);
      }
    }
  }
  const std::size_t homogeneous = sys.rows.size();
  sys.add_row({{index.at(Word()), Scalar(1)}}, Scalar(1));

  AffineSolution sol = solve_exact(sys);
  if (!sol.consistent)
    throw Error(ErrorKind::InconsistentSystem, "no invariant functional with h(1) = 1 at degree " + std::to_string(degree));
  if (sol.nullity() > 0)
    throw Error(ErrorKind::NonUniqueSolution, "invariant functionals form a space of dimension " +
                                                  std::to_string(sol.nullity() + 1) + " at degree " +
                                                  std::to_string(degree));
  HaarTable h;
  h.degree = degree;
  h.pres = pres;
  h.unknowns = mons.size();
  h.equations = homogeneous;
  h.solution_dimension = 1;
  for (std::size_t k = 0; k < mons.size(); ++k) h.values[mons[k]] = sol.particular[k];
  return h;
}

Report haar_invariance_check(const CqgAlgebra& alg, const HaarTable& t) {
  Report r;
  r.title = "haar invariance";
  for (const auto& [m, hm] : t.values) {
    const TensorPoly& d = alg.comultiply_word(m);
    NcPoly left(t.pres), right(t.pres);
    for (const auto& [legs, c] : d.terms()) {
      left += NcPoly::word(t.pres, legs[0]).scaled(c * t.eval(NcPoly::word(t.pres, legs[1])));
      right += NcPoly::word(t.pres, legs[1]).scaled(c * t.eval(NcPoly::word(t.pres, legs[0])));
    }
    NcPoly target(t.pres, hm);
    NcPoly dl = left - target, dr = right - target;
    const std::string item = t.pres->word_text(m);
    r.check("left-invariance", dl.is_zero(), item, [&] { return poly_text(dl); });
    r.check("right-invariance", dr.is_zero(), item, [&] { return poly_text(dr); });
  }
  return r;
}

Report gram_positivity(const CqgAlgebra& alg, const HaarTable& t, int d, const std::vector<double>& q_samples) {
  if (2 * d > t.degree)
    throw Error(ErrorKind::HaarTableInsufficient, "gram positivity at degree " + std::to_string(d) +
                                                      " needs a haar table of degree " + std::to_string(2 * d));
  const auto& pres = alg.pres();
  std::vector<Word> mons = pres->normal_monomials(d);
  const std::size_t n = mons.size();
  ScalarMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      NcPoly x = NcPoly::word(pres, pres->star_word(mons[i])) * NcPoly::word(pres, mons[j]);
      g(i, j) = t.eval(x);
      if (i != j) g(j, i) = g(i, j).conj();
    }
  Report r;
  r.title = "gram positivity";
  for (double q0 : q_samples) {
    double ev = min_hermitian_eigenvalue(g.eval(q0));
    std::ostringstream item;
    item << "q=" << q0;
    r.notes.push_back(item.str() + " min eigenvalue " + std::to_string(ev));
    r.check("positive-definite", ev > 1e-9, item.str(), [&] { return "min eigenvalue " + std::to_string(ev); });
  }
  return r;
}

Report haar_peter_weyl_check(const IrrepRegistry& reg, const HaarTable& t) {
  Report r;
  r.title = "haar on matrix coefficients";
  r.check("normalization", t.eval(NcPoly(t.pres, Scalar(1))) == Scalar(1), "h(1)", [] { return "h(1) != 1"; });
  for (std::size_t k = 0; k < reg.size(); ++k) {
    const Irrep& a = reg.at(k);
    if (a.corep.dim == 1 && a.corep.at(0, 0) == NcPoly(t.pres, Scalar(1))) continue;
    for (std::size_t p = 0; p < a.corep.dim; ++p)
      for (std::size_t q = 0; q < a.corep.dim; ++q) {
        Scalar v = t.eval(a.corep.at(p, q));
        r.check("vanishing", v.is_zero(), a.label + "(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")",
                [&] { return v.to_string(); });
      }
  }
  return r;
}

FMatrix f_matrix(const Irrep& irrep, const HaarTable& t, const std::vector<double>& q_samples, Report* report) {
  const Corep& u = irrep.corep;
  const std::size_t n = u.dim;
  const ScalarMatrix g = u.gram_or_identity();
  auto gi = inverse(g);
  if (!gi) throw Error(ErrorKind::SingularMatrix, "singular gram matrix for " + irrep.label);
  // H(i,p,j,q) = h(u_ip^* u_jq)
  std::vector<Scalar> hv(n * n * n * n);
  auto H = [&](std::size_t i, std::size_t p, std::size_t j, std::size_t q) -> Scalar& {
    return hv[((i * n + p) * n + j) * n + q];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < n; ++q) H(i, p, j, q) = t.eval(u.at(i, p).star() * u.at(j, q));

  FMatrix out{irrep.label, ScalarMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.f(i, j) = H(i, 0, j, 0) / g(0, 0);

  Report local;
  local.title = "F matrix " + irrep.label;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < n; ++q) {
          if (H(i, p, j, q) == g(p, q) * out.f(i, j)) continue;
          throw Error(ErrorKind::InconsistentOrthogonality,
                      "h(u_" + std::to_string(i + 1) + std::to_string(p + 1) + "^* u_" + std::to_string(j + 1) +
                          std::to_string(q + 1) + ") = " + H(i, p, j, q).to_string() + " disagrees with G F for " +
                          irrep.label);
        }
  local.check("consistency", true, irrep.label, nullptr);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) s += (*gi)(l, k) * H(i, k, j, l);
      Scalar want = Scalar(static_cast<long>(n)) * out.f(i, j);
      local.check("trace-identity", s == want, std::to_string(i + 1) + "," + std::to_string(j + 1),
                  [&] { return (s - want).to_string(); });
    }
  for (double q0 : q_samples) {
    double ev = min_hermitian_eigenvalue(out.f.eval(q0));
    std::ostringstream item;
    item << "q=" << q0;
    local.check("positivity", ev > 1e-9, item.str(), [&] { return "min eigenvalue " + std::to_string(ev); });
  }
  if (g.is_identity()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        NcPoly s(t.pres);
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l)
            if (!out.f(k, l).is_zero()) s += (u.at(i, k).star() * u.at(j, l)).scaled(out.f(k, l));
        NcPoly d = s - NcPoly(t.pres, out.f(i, j));
        local.check("conjugate-intertwiner", d.is_zero(), std::to_string(i + 1) + "," + std::to_string(j + 1),
                    [&] { return d.to_string(); });
      }
  } else {
    local.notes.push_back("conjugate intertwiner identity skipped: non-identity gram matrix");
  }
  if (report) report->merge(local);
  return out;
}

Report orthogonality_check(const IrrepRegistry& reg, const HaarTable& t) {
  Report r;
  r.title = "orthogonality between irreps";
  for (std::size_t a = 0; a < reg.size(); ++a)
    for (std::size_t b = 0; b < reg.size(); ++b) {
      if (a == b) continue;
      const Corep& ua = reg.at(a).corep;
      const Corep& ub = reg.at(b).corep;
      for (std::size_t i = 0; i < ub.dim; ++i)
        for (std::size_t p = 0; p < ub.dim; ++p)
          for (std::size_t j = 0; j < ua.dim; ++j)
            for (std::size_t q = 0; q < ua.dim; ++q) {
              Scalar v = t.eval(ub.at(i, p).star() * ua.at(j, q));
              r.check("cross", v.is_zero(), reg.at(b).label + " vs " + reg.at(a).label,
                      [&] { return v.to_string(); });
            }
    }
  return r;
}

}  // namespace cqg
