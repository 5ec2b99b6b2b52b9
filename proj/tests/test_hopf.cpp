#include <complex>
#include <random>

#include "doctest.h"

#include "cqg/error.hpp"
#include "cqg/hopf.hpp"
#include "cqg/presets.hpp"

using namespace cqg;
using cd = std::complex<double>;

namespace {

// Classical point of SU(2): at q = 1 the algebra is commutative and
// a -> alpha, g -> gamma is a character.
struct Point {
  cd alpha, gamma;
  std::vector<cd> values() const { return {alpha, std::conj(alpha), gamma, std::conj(gamma)}; }
};

Point random_point(std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double v[4];
  double s = 0;
  for (double& x : v) {
    x = n(rng);
    s += x * x;
  }
  s = std::sqrt(s);
  return {cd(v[0] / s, v[1] / s), cd(v[2] / s, v[3] / s)};
}

Point product(const Point& u, const Point& v) {
  // [[a, -conj g], [g, conj a]] products
  return {u.alpha * v.alpha - std::conj(u.gamma) * v.gamma, u.gamma * v.alpha + std::conj(u.alpha) * v.gamma};
}

cd eval_word(const Word& w, const std::vector<cd>& val) {
  cd r = 1;
  for (Letter x : w) r *= val[x];
  return r;
}

cd eval(const NcPoly& x, const Point& p) {
  cd s = 0;
  auto v = p.values();
  for (const auto& [w, c] : x.terms()) s += c.eval(1.0) * eval_word(w, v);
  return s;
}

cd eval(const TensorPoly& t, const Point& p1, const Point& p2) {
  cd s = 0;
  auto v1 = p1.values(), v2 = p2.values();
  for (const auto& [legs, c] : t.terms()) s += c.eval(1.0) * eval_word(legs[0], v1) * eval_word(legs[1], v2);
  return s;
}

CqgData data_of(const CqgAlgebra& alg) {
  CqgData d;
  d.name = alg.name();
  d.pres = alg.pres();
  for (const auto& t : alg.delta_table()) d.delta.emplace_back(t);
  for (const auto& c : alg.counit_table()) d.counit.emplace_back(c);
  for (const auto& k : alg.antipode_table()) d.antipode.emplace_back(k);
  d.coreps = alg.coreps();
  return d;
}

}  // namespace

TEST_CASE("comultiplication examples") {
  auto alg = load_preset("su_q_2");
  NcPoly a = alg->gen("a"), g = alg->gen("g"), gs = alg->gen("g*"), one = alg->one();
  CHECK(alg->comultiply(a) ==
        TensorPoly::elementary({a, a}) - TensorPoly::elementary({gs, g}).scaled(Scalar::q()));
  CHECK(alg->comultiply(a).to_string() == "-q * g* (x) g + a (x) a");
  CHECK(alg->comultiply(one) == TensorPoly::one(alg->pres(), 2));
  CHECK(alg->comultiply(gs * g) == alg->comultiply(g).star() * alg->comultiply(g));
}

TEST_CASE("counit and antipode examples") {
  auto alg = load_preset("su_q_2");
  NcPoly a = alg->gen("a"), as = alg->gen("a*"), g = alg->gen("g"), gs = alg->gen("g*"), one = alg->one();
  CHECK(alg->counit(a) == Scalar(1));
  CHECK(alg->counit(g) == Scalar(0));
  CHECK(alg->counit(gs) == Scalar(0));
  CHECK(alg->counit(one) == Scalar(1));
  CHECK(alg->counit(as * g + one.scaled(Scalar(3))) == Scalar(3));
  CHECK(alg->antipode(a) == as);
  CHECK(alg->antipode(one) == one);
  CHECK(alg->antipode(g * gs) == alg->antipode(gs) * alg->antipode(g));
  CHECK(alg->antipode(g * gs) == g * gs);
}

TEST_CASE("classical limit oracle") {
  auto alg = load_preset("su_q_2");
  std::mt19937 rng(7);
  auto mons = alg->pres()->normal_monomials(3);
  for (int trial = 0; trial < 5; ++trial) {
    Point u = random_point(rng), v = random_point(rng), uv = product(u, v);
    Point id{1.0, 0.0}, inv{std::conj(u.alpha), -u.gamma};
    for (const Word& w : mons) {
      NcPoly x = alg->elem(w);
      CHECK(std::abs(eval(alg->comultiply(x), u, v) - eval(x, uv)) < 1e-12);
      CHECK(std::abs(alg->counit(x).eval(1.0) - eval(x, id)) < 1e-12);
      CHECK(std::abs(eval(alg->antipode(x), u) - eval(x, inv)) < 1e-12);
    }
  }
}

TEST_CASE("verify_hopf on SU_q(2)") {
  auto alg = load_preset("su_q_2");
  Report r = verify_hopf(*alg, 4);
  CHECK(r.passed());
  CHECK(r.total_checks() > 1000);
  auto j = r.to_json();
  CHECK(j["failures"].empty());
}

TEST_CASE("verify_hopf on the trivial algebra") {
  CqgData d;
  d.name = "trivial";
  d.pres = Presentation::create({}, {});
  auto alg = CqgAlgebra::create(d);
  Report r = verify_hopf(*alg, 3);
  CHECK(r.passed());
  CHECK(r.total_checks() > 0);
}

TEST_CASE("corrupted antipode is caught on g") {
  auto alg = load_preset("su_q_2");
  CqgData d = data_of(*alg);
  const int g = alg->pres()->find("g");
  d.antipode[g] = alg->gen("g").scaled(Scalar::q());
  auto bad = CqgAlgebra::create(d);
  Report r = verify_hopf(*bad, 2);
  CHECK_FALSE(r.passed());
  bool on_g = false;
  for (const auto& f : r.failures)
    if (f.axiom.rfind("antipode", 0) == 0 && f.monomial == "g") {
      on_g = true;
      CHECK_FALSE(f.residual.empty());
    }
  CHECK(on_g);
}

TEST_CASE("comultiplication must respect the relations") {
  auto alg = load_preset("su_q_2");
  CqgData d = data_of(*alg);
  const int g = alg->pres()->find("g");
  d.delta[g] = TensorPoly::elementary({alg->gen("g"), alg->gen("a")});
  d.delta[alg->pres()->find("g*")].reset();
  try {
    CqgAlgebra::create(d);
    FAIL("expected the relation check to fail");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CheckFailed);
  }
  CqgData m = data_of(*alg);
  m.antipode[g].reset();
  CHECK_THROWS_AS(CqgAlgebra::create(m), Error);
}

TEST_CASE("galois maps") {
  auto alg = load_preset("su_q_2");
  Report r = galois_maps(*alg, 2);
  CHECK(r.passed());
  // a (x) 1 = sum_k Delta(u_1k)(1 (x) kappa(u_k1))
  const CorepSpec* u = alg->find_corep("u");
  REQUIRE(u);
  TensorPoly w(alg->pres(), 2);
  for (std::size_t k = 0; k < 2; ++k)
    w += alg->comultiply(u->at(0, k)) * TensorPoly::elementary({alg->one(), alg->antipode(u->at(k, 0))});
  CHECK(w == TensorPoly::elementary({alg->gen("a"), alg->one()}));
  TensorPoly t(alg->pres(), 2);
  t.add({Word(), Word{2, 3}}, Scalar(1));
  CHECK(galois_t1(*alg, t) == t);
}

TEST_CASE("galois map of C(Z2) is a permutation") {
  auto fq = load_finite_preset("c_z2");
  SparseMatrix t1 = regular_unitary(fq.fa);
  std::vector<int> hit(4, 0);
  for (std::size_t j = 0; j < 4; ++j) {
    REQUIRE(t1.col(j).size() == 1);
    CHECK(t1.col(j).begin()->second == Scalar(1));
    ++hit[t1.col(j).begin()->first];
  }
  for (int h : hit) CHECK(h == 1);
  CHECK(galois_maps(*fq.view, 2).passed());
}

TEST_CASE("non-confluent presets refuse certified operations") {
  auto alg = load_preset("su_q_3");
  try {
    verify_hopf(*alg, 2);
    FAIL("expected certificate error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeExceedsCertificate);
  }
}
