#include "doctest.h"

#include "cqg/error.hpp"
#include "cqg/presets.hpp"

using namespace cqg;

namespace {

// Maps an element of su_q_n(2) to su_q_2 through u11 = a, u12 = -q g*,
// u21 = g, u22 = a*.
NcPoly to_su2(const FreePoly& x, const AlgebraPtr& su2) {
  const Scalar q = Scalar::q();
  std::vector<NcPoly> img{su2->gen("a"), su2->gen("g*").scaled(-q), su2->gen("g"), su2->gen("a*")};
  for (int k = 0; k < 4; ++k) img.push_back(img[k].star());
  NcPoly out(su2->pres());
  for (const auto& [w, c] : x) {
    NcPoly t = su2->one();
    for (Letter l : w) t = t * img[l];
    out += t.scaled(c);
  }
  return out;
}

}  // namespace

TEST_CASE("quantum determinant coefficients") {
  CHECK(quantum_determinant_coefficient({1, 2, 3}) == Scalar(1));
  CHECK(quantum_determinant_coefficient({1, 2}) == Scalar(1));
  CHECK(quantum_determinant_coefficient({2, 1}) == -Scalar::q());
  CHECK(quantum_determinant_coefficient({3, 2, 1}) == -Scalar::q().pow(3));
  CHECK(quantum_determinant_coefficient({1, 1}) == Scalar(0));
}

TEST_CASE("su_q_n(2) agrees with su_q_2") {
  auto s = su_q_n(2);
  auto su2 = load_preset("su_q_2");
  auto u = [&](const char* n) { return s->gen(n); };
  const Scalar q = Scalar::q();
  CHECK(u("u11") * u("u22") - (u("u12") * u("u21")).scaled(q) == s->one());
  CHECK((u("u12") + u("u21*").scaled(q)).is_zero());
  CHECK((u("u22") - u("u11*")).is_zero());
  CHECK(s->pres()->check_confluence(6).confluent());
  for (const auto& r : s->pres()->rules()) {
    FreePoly rel{{r.lhs, Scalar(1)}};
    for (const auto& [w, c] : r.rhs) add_term(rel, w, -c);
    CHECK(to_su2(rel, su2).is_zero());
  }
  // same normal-form dimensions
  for (int d = 0; d <= 4; ++d)
    CHECK(s->pres()->normal_monomials_of_degree(d).size() == su2->pres()->normal_monomials_of_degree(d).size());
  CHECK(verify_hopf(*s, 3).passed());
}

TEST_CASE("su_q_2 fundamental corep and counit") {
  auto s = load_preset("su_q_2");
  const CorepSpec* u = s->find_corep("u");
  REQUIRE(u);
  CHECK(s->counit(s->gen("g*")) == Scalar(0));
  // u u^* = 1 and u^* u = 1
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      NcPoly a(s->pres()), b(s->pres());
      for (std::size_t k = 0; k < 2; ++k) {
        a += u->at(i, k) * u->at(j, k).star();
        b += u->at(k, i).star() * u->at(k, j);
      }
      CHECK(a == s->one().scaled(Scalar(i == j ? 1 : 0)));
      CHECK(b == s->one().scaled(Scalar(i == j ? 1 : 0)));
    }
}

TEST_CASE("A_u(I) relations") {
  auto s = load_preset("a_u_2");
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      NcPoly t(s->pres());
      for (int k = 1; k <= 2; ++k)
        t += s->gen("u" + std::to_string(k) + std::to_string(i)) * s->gen("u" + std::to_string(k) + std::to_string(j) + "*");
      CHECK(t == s->one().scaled(Scalar(i == j ? 1 : 0)));
    }
  ScalarMatrix sing(2, 2);
  sing(0, 0) = Scalar(1);
  try {
    a_u(sing);
    FAIL("expected singular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
  }
  // a non-identity Q still loads
  auto qd = a_u(ScalarMatrix::diagonal({Scalar(1), Scalar(2)}));
  CHECK(qd->pres()->rules().size() > 0);
}

TEST_CASE("finite groups") {
  for (const auto& n : finite_group_names()) {
    MatrixGroup mg = finite_group(n);
    const std::size_t order = mg.group.names.size();
    std::size_t expect = n == "z2" ? 2 : n == "z4" ? 4 : n == "s3" ? 6 : 8;
    CHECK(order == expect);
    CayleyTable back = parse_cayley_csv(cayley_to_csv(mg.group));
    CHECK(back.names == mg.group.names);
    CHECK(back.table == mg.group.table);
  }
  CHECK_THROWS_AS(parse_cayley_csv("*,e,a\ne,e,a\na,a,a\n"), Error);
  try {
    make_group({"e", "a"}, {{0, 1}, {1, 1}});
    FAIL("expected not a group");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGroup);
  }
  CHECK_THROWS_AS(parse_cayley_csv("*,e,a\ne,e,b\na,a,e\n"), Error);
}

TEST_CASE("C(Z2) and group algebras") {
  auto fq = load_finite_preset("c_z2");
  auto v = fq.view;
  NcPoly d0 = v->gen("d_e"), d1 = fq.basis_in_view[1];
  CHECK(v->comultiply(d0) == TensorPoly::elementary({d0, d0}) + TensorPoly::elementary({d1, d1}));
  for (const auto& g : finite_group_names()) {
    auto cg = load_finite_preset("cg_" + g);
    for (const auto& c : cg.fa.counit) CHECK(c == Scalar(1));
    for (const auto& x : cg.basis_in_view) CHECK(cg.view->counit(x) == Scalar(1));
  }
}

TEST_CASE("finite presets pass load checks, verify_hopf and have unique Haar functionals") {
  for (const auto& name : preset_names()) {
    if (!is_finite_preset(name)) continue;
    CAPTURE(name);
    auto fq = load_finite_preset(name);
    CHECK(check_finite_algebra(fq.fa).passed());
    CHECK(finite_haar(fq.fa) == fq.fa.haar);
    CHECK(verify_hopf(*fq.view, 3).passed());
    // normal monomials of the view span exactly |G| dimensions
    CHECK(fq.view->pres()->normal_monomials(3).size() == fq.fa.dim);
    const Scalar inv_order = Scalar(1) / Scalar(static_cast<long>(fq.fa.dim));
    if (name.rfind("c_", 0) == 0)
      for (const auto& h : fq.fa.haar) CHECK(h == inv_order);
  }
}

TEST_CASE("unknown preset") {
  try {
    load_preset("nope");
    FAIL("expected registry error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInRegistry);
  }
}
