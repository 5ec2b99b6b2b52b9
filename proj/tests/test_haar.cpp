#include <cmath>

#include "doctest.h"

#include "cqg/corep.hpp"
#include "cqg/dsl.hpp"
#include "cqg/error.hpp"
#include "cqg/haar.hpp"
#include "cqg/presets.hpp"

using namespace cqg;

namespace {

const HaarTable& table6() {
  static const HaarTable t = compute_haar(*load_preset("su_q_2"), 6);
  return t;
}

NcPoly poly(const std::string& text) { return dsl::parse_polynomial(load_preset("su_q_2")->pres(), text); }

// 1 + q^2 + ... + q^2k
Scalar q_number(int k) {
  Scalar s;
  for (int j = 0; j <= k; ++j) s += Scalar::q_power(2 * j);
  return s;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

// x primitive: no invariant state exists
const char* kLine = R"(name line
param q
generators:
  gen x star x
relations:
comultiplication:
  x |-> x (x) 1 + 1 (x) x
counit:
  x |-> 0
antipode:
  x |-> -x
coreps:
)";

// b is skew-primitive over the group-like a a, so Delta raises word length
const char* kSkew = R"(name skew
param q
generators:
  gen a star a*
  gen a* star a
  gen b star b
relations:
  a a* -> 1
  a* a -> 1
  a a a -> a*
  a* a* -> a a
  b a -> a b
  b a* -> a* b
comultiplication:
  a |-> a (x) a
  b |-> b (x) a a + 1 (x) b
counit:
  a |-> 1
  b |-> 0
antipode:
  a |-> a*
  a* |-> a
  b |-> -b a a
coreps:
)";

}  // namespace

TEST_CASE("moments of |gamma|^2 are inverse q-numbers") {
  const HaarTable& t = table6();
  CHECK(t.solution_dimension == 1);
  std::string w;
  for (int k = 0; k <= 3; ++k) {
    CHECK(t.eval(poly(w.empty() ? "1" : w)) == q_number(k).inverse());
    w = "g " + w + " g*";
  }
  CHECK(t.eval(poly("a a*")) == Scalar::parse("1/(1 + q^2)"));
  CHECK(t.eval(poly("a* a")) == Scalar::parse("q^2/(1 + q^2)"));
}

TEST_CASE("haar vanishes off the torus-balanced monomials") {
  const HaarTable& t = table6();
  auto pres = load_preset("su_q_2")->pres();
  for (const auto& [w, s] : t.values) {
    int c[4] = {0, 0, 0, 0};
    for (Letter x : w) ++c[x];
    if (c[0] != c[1] || c[2] != c[3]) CHECK_MESSAGE(s.is_zero(), pres->word_text(w));
  }
}

TEST_CASE("classical limit reproduces SU(2) moments") {
  // E |alpha|^2j |gamma|^2k = j! k! / (j + k + 1)!
  const HaarTable& t = table6();
  for (int j = 0; j <= 2; ++j)
    for (int k = 0; j + k <= 3; ++k) {
      std::string w = "1";
      for (int r = 0; r < j; ++r) w += " a a*";
      for (int r = 0; r < k; ++r) w += " g g*";
      double expect = factorial(j) * factorial(k) / factorial(j + k + 1);
      CHECK(std::abs(t.eval(poly(w)).eval(1.0) - expect) < 1e-12);
    }
}

TEST_CASE("invariance and json round trip") {
  auto alg = load_preset("su_q_2");
  const HaarTable& t = table6();
  CHECK(haar_invariance_check(*alg, t).passed());
  HaarTable back = HaarTable::from_json(Json::parse(t.to_json().dump()), alg->pres());
  CHECK(back.values == t.values);
  CHECK(back.degree == 6);
  CHECK(back.to_json().dump() == t.to_json().dump());
}

TEST_CASE("uncertified presentations are refused") {
  CHECK(kind_of([] { compute_haar(*load_preset("a_u_2"), 2); }) == ErrorKind::DegreeExceedsCertificate);
  CHECK(kind_of([] { compute_haar(*load_preset("su_q_3"), 4); }) == ErrorKind::DegreeExceedsCertificate);
}

TEST_CASE("haar error kinds") {
  CHECK(kind_of([] { compute_haar(*dsl::parse(kLine), 2); }) == ErrorKind::InconsistentSystem);
  CHECK(kind_of([] { compute_haar(*dsl::parse(kSkew), 1); }) == ErrorKind::DegreeClosureViolated);
  CHECK(kind_of([] { table6().eval(poly("g g g g g* g* g* g*")); }) == ErrorKind::HaarTableInsufficient);
  auto alg = load_preset("su_q_2");
  HaarTable t4 = compute_haar(*alg, 4);
  CHECK(kind_of([&] { gram_positivity(*alg, t4, 3, {0.5}); }) == ErrorKind::HaarTableInsufficient);
}

TEST_CASE("gram matrices of the haar state are positive") {
  auto alg = load_preset("su_q_2");
  Report r = gram_positivity(*alg, table6(), 3, {1.0 / 3, 0.5, 0.9});
  CHECK(r.passed());
}

TEST_CASE("F matrices of SU_q(2)") {
  auto alg = load_preset("su_q_2");
  auto h = std::make_shared<HaarTable>(table6());
  auto reg = IrrepRegistry::seeded(alg, h);
  fusion_table(*reg, 3);
  REQUIRE(reg->size() == 4);

  Report rep;
  FMatrix fu = f_matrix(*reg->find("2:1"), *h, {1.0 / 3, 0.5, 0.9}, &rep);
  Scalar q2 = Scalar::q_power(2);
  CHECK(fu.f == q_number(1).inverse() * ScalarMatrix::diagonal({q2, Scalar(1)}));
  CHECK(rep.passed());

  // direct: h(u_i1^* u_j1) = F_ij for the unitary fundamental corep
  const Corep& u = reg->find("2:1")->corep;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(h->eval(u.at(i, 0).star() * u.at(j, 0)) == fu.f(i, j));

  // at q = 1 every block obeys classical Schur orthogonality: F = G^-T / n
  for (std::size_t k = 0; k < reg->size(); ++k) {
    const Irrep& a = reg->at(k);
    FMatrix f = f_matrix(a, *h);
    auto gi = inverse(a.corep.gram_or_identity());
    REQUIRE(gi);
    ComplexMatrix diff = f.f.eval(1.0) - gi->transpose().eval(1.0) / static_cast<double>(a.corep.dim);
    CHECK_MESSAGE(diff.norm() < 1e-12, a.label);
    CHECK(f.f.eval(0.5).trace().real() > 0);
  }
  CHECK(haar_peter_weyl_check(*reg, *h).passed());
  CHECK(orthogonality_check(*reg, *h).passed());
}

TEST_CASE("finite presets: haar is the counting or delta functional") {
  auto fq = load_finite_preset("c_s3");
  HaarTable t = compute_haar(*fq.view, 2);
  for (const NcPoly& e : fq.basis_in_view) CHECK(t.eval(e) == Scalar(1, 6));
  auto cg = load_finite_preset("cg_s3");
  HaarTable tg = compute_haar(*cg.view, 2);
  CHECK(tg.eval(cg.basis_in_view[0]) == Scalar(1));
  for (std::size_t k = 1; k < cg.basis_in_view.size(); ++k) CHECK(tg.eval(cg.basis_in_view[k]).is_zero());
}
