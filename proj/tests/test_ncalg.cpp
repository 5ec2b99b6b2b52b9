#include "doctest.h"

#include "cqg/error.hpp"
#include "cqg/ncalg.hpp"
#include "cqg/presets.hpp"

using namespace cqg;

namespace {

struct Su2 {
  AlgebraPtr alg = load_preset("su_q_2");
  PresentationPtr p = alg->pres();
  NcPoly a = alg->gen("a"), as = alg->gen("a*"), g = alg->gen("g"), gs = alg->gen("g*");
  Scalar q = Scalar::q();
};

// All words over n letters of length exactly d.
std::vector<Word> all_words(std::size_t n, int d) {
  std::vector<Word> out{Word()};
  for (int k = 0; k < d; ++k) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (std::size_t x = 0; x < n; ++x) next.push_back(w + static_cast<Letter>(x));
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("normal forms in SU_q(2)") {
  Su2 s;
  CHECK(s.g * s.a == (s.a * s.g).scaled(Scalar::q_power(-1)));
  CHECK((s.g * s.a).to_string() == "q^-1 * a g");
  // a* a = 1 - g* g, and g* g is itself rewritten to g g*
  CHECK(s.as * s.a == s.alg->one() - s.gs * s.g);
  CHECK((s.as * s.a).to_string() == "1 - g g*");
  CHECK(NcPoly::word(s.p, Word()) == s.alg->one());
  CHECK(NcPoly::word(s.p, Word()).to_string() == "1");
  CHECK((s.a * s.as).to_string() == "1 - q^2 * g g*");
}

TEST_CASE("mul and star") {
  Su2 s;
  CHECK((s.a * s.g).star() == s.gs * s.as);
  CHECK((s.g * s.gs).to_string() == "g g*");
  NcPoly x = s.a + s.g.scaled(Scalar::i());
  CHECK(x.star().star() == x);
  CHECK(x.star() == s.as + s.gs.scaled(-Scalar::i()));
  CHECK_THROWS_WITH_AS(s.alg->gen("b"), doctest::Contains("unknown"), Error);

  auto other = load_preset("c_z2");
  try {
    (void)(s.a * other->gen("d_e"));
    FAIL("expected a mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PresentationMismatch);
  }
}

TEST_CASE("SU_q(2) normal monomials per degree") {
  Su2 s;
  for (int d = 0; d <= 6; ++d) {
    auto m = s.p->normal_monomials_of_degree(d);
    CHECK(m.size() == static_cast<std::size_t>((d + 1) * (d + 2) / 2 + d * (d + 1) / 2));
    // independent description: a^x g^y g*^z, or a*^x g^y g*^z with x >= 1
    for (const Word& w : m) {
      std::size_t k = 0;
      Letter head = w.empty() ? 0 : w[0];
      while (k < w.size() && w[k] == head && (head == 0 || head == 1)) ++k;
      while (k < w.size() && w[k] == 2) ++k;
      while (k < w.size() && w[k] == 3) ++k;
      CHECK(k == w.size());
    }
  }
}

TEST_CASE("normal form properties up to degree 4") {
  Su2 s;
  for (int d = 0; d <= 4; ++d)
    for (const Word& w : all_words(4, d)) {
      NcPoly x = NcPoly::word(s.p, w);
      // idempotent
      CHECK(NcPoly::from_free(s.p, x.terms()) == x);
      // star commutes with normalization
      CHECK(x.star() == NcPoly::word(s.p, s.p->star_word(w)));
    }
  auto mons = s.p->normal_monomials(2);
  for (const Word& x : mons)
    for (const Word& y : mons)
      for (const Word& z : mons) {
        NcPoly a = NcPoly::word(s.p, x), b = NcPoly::word(s.p, y), c = NcPoly::word(s.p, z);
        CHECK((a * b) * c == a * (b * c));
      }
}

TEST_CASE("confluence") {
  Su2 s;
  auto rep = s.p->check_confluence(6);
  CHECK(rep.confluent());
  CHECK(rep.ambiguities_checked > 0);

  std::vector<Symbol> xy{{"x", 1, 1}, {"y", 0, 1}};
  FreePoly one{{Word(), Scalar(1)}};
  auto p1 = Presentation::create(xy, {{Word{0, 1}, one}, {Word{1, 0}, one}});
  CHECK(p1->check_confluence(4).confluent());

  // x y -> 1 alone; y is the star of x, so the star rule y* x* = y x must
  // also follow, which it does not: use a self-adjoint pair instead
  std::vector<Symbol> free2{{"x", 0, 1}, {"y", 1, 1}};
  auto p2 = Presentation::create(free2, {{Word{0, 1}, one}});
  CHECK(p2->check_confluence(4).failures.size() == 1);  // star image y x
  std::vector<Symbol> pair{{"x", 1, 1}, {"y", 0, 1}};
  auto p3 = Presentation::create(pair, {{Word{0, 1}, one}});
  CHECK(p3->check_confluence(4).confluent());

  FreePoly qq{{Word(), Scalar::q()}};
  auto p4 = Presentation::create(pair, {{Word{0, 1}, one}, {Word{1, 0}, qq}});
  auto r4 = p4->check_confluence(4);
  CHECK_FALSE(r4.confluent());
  bool saw_xyx = false;
  for (const auto& f : r4.failures) saw_xyx = saw_xyx || f.overlap == Word{0, 1, 0};
  CHECK(saw_xyx);
  CHECK_FALSE(p4->ensure_certified(4));
}

TEST_CASE("orientation is enforced") {
  std::vector<Symbol> xy{{"x", 1, 1}, {"y", 0, 1}};
  FreePoly up{{Word{0, 1, 1}, Scalar(1)}};
  try {
    Presentation::create(xy, {{Word{1, 0}, up}});
    FAIL("expected orientation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrientationViolation);
  }
}

TEST_CASE("tensor operations") {
  Su2 s;
  NcPoly one = s.alg->one();
  auto t1 = TensorPoly::elementary({s.a, s.g}) * TensorPoly::elementary({one, s.gs});
  CHECK(t1 == TensorPoly::elementary({s.a, s.g * s.gs}));
  CHECK(TensorPoly::elementary({s.a, s.g}).star() == TensorPoly::elementary({s.as, s.gs}));
  auto t2 = TensorPoly::elementary({s.g, s.a}) * TensorPoly::elementary({s.a, one});
  CHECK(t2 == TensorPoly::elementary({s.a * s.g, s.a}).scaled(Scalar::q_power(-1)));
  CHECK(t2.to_string() == "q^-1 * a g (x) a");
  auto t3 = TensorPoly::elementary({s.a, s.g, s.gs});
  CHECK(t3.star().star() == t3);
}
