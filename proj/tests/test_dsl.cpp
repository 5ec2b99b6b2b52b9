#include "doctest.h"

#include "cqg/dsl.hpp"
#include "cqg/error.hpp"
#include "cqg/finite.hpp"
#include "cqg/presets.hpp"

using namespace cqg;

namespace {

const std::string kBase = R"(name su_q_2
param q
generators:
  gen a star a* weight 2
  gen a* star a weight 2
  gen g star g*
  gen g* star g
relations:
  g a -> q^-1 * a g
  g* a -> q^-1 * a g*
  g a* -> q * a* g
  g* a* -> q * a* g*
  g* g -> g g*
  a* a -> 1 - g g*
  a a* -> 1 - q^2 * g g*
comultiplication:
  a |-> a (x) a - q * g* (x) g
  g |-> g (x) a + a* (x) g
counit:
  a |-> 1
  g |-> 0
antipode:
  a |-> a*
  a* |-> a
  g |-> -q * g
  g* |-> -q^-1 * g*
coreps:
  corep u 2
    row a, -q * g*
    row g, a*
)";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto p = s.find(from);
  REQUIRE(p != std::string::npos);
  return s.replace(p, from.size(), to);
}

struct Caught {
  ErrorKind kind = ErrorKind::Internal;
  int line = 0, col = 0;
};

Caught parse_error(const std::string& text) {
  Caught c;
  try {
    dsl::parse(text);
  } catch (const ParseError& e) {
    c = {e.kind(), e.line(), e.column()};
  } catch (const Error& e) {
    c.kind = e.kind();
  }
  return c;
}

}  // namespace

TEST_CASE("the hand-written file matches the preset") {
  auto file = dsl::load_file(std::string(CQG_DATA_DIR) + "/su_q_2.cqg");
  CHECK(file->same_as(*load_preset("su_q_2")));
  CHECK(dsl::parse(kBase)->same_as(*load_preset("su_q_2")));
}

TEST_CASE("every preset survives a round trip") {
  for (const auto& name : preset_names()) {
    AlgebraPtr a = is_finite_preset(name) ? load_finite_preset(name).view : load_preset(name);
    std::string text = dsl::serialize(*a);
    AlgebraPtr b = dsl::parse(text);
    CHECK_MESSAGE(b->same_as(*a), name);
    CHECK_MESSAGE(dsl::serialize(*b) == text, name);
  }
}

TEST_CASE("polynomials normalize through the presentation") {
  auto pres = load_preset("su_q_2")->pres();
  CHECK(dsl::parse_polynomial(pres, "g a").to_string() == "q^-1 * a g");
  CHECK(dsl::parse_polynomial(pres, "a* a + g g*").to_string() == "1");
  CHECK(dsl::parse_polynomial(pres, "g * a").to_string() == "q^-1 * a g");
  CHECK(dsl::parse_polynomial(pres, "(1 + i) * g*").to_string() == dsl::parse_polynomial(pres, "g* + i g*").to_string());
  CHECK(dsl::parse_polynomial(pres, "g^2 g*^2") == dsl::parse_polynomial(pres, "g g g* g*"));
  CHECK(dsl::parse_polynomial(pres, "g a - q^-1 * a g").is_zero());
  CHECK(dsl::parse_polynomial(pres, "1/(1 + q^2) * g").to_string() == "1/(1 + q^2) * g");
}

TEST_CASE("a generator named i shadows the imaginary unit") {
  auto q8 = load_finite_preset("cg_q8").view;
  auto p = q8->pres();
  NcPoly x = dsl::parse_polynomial(p, "i i");
  CHECK(x.degree() == 1);  // i^2 = -1 in Q8, a group element
  CHECK(dsl::parse_polynomial(p, "i").to_string() == "i");
}

TEST_CASE("error positions") {
  // undeclared generator in a relation
  Caught c = parse_error(replace(kBase, "g a -> q^-1 * a g", "g a -> q^-1 * a h"));
  CHECK(c.kind == ErrorKind::UndeclaredGenerator);
  CHECK(c.line == 9);
  CHECK(c.col == 19);

  // left side smaller than the right side
  c = parse_error(replace(kBase, "g a -> q^-1 * a g", "a g -> q * g a"));
  CHECK(c.kind == ErrorKind::OrientationViolation);
  CHECK(c.line == 9);

  // stray character
  c = parse_error(replace(kBase, "  a |-> 1\n", "  a |-> 1 $\n"));
  CHECK(c.kind == ErrorKind::Syntax);
  CHECK(c.line == 20);
  CHECK(c.col == 11);

  // missing antipode entry
  c = parse_error(replace(kBase, "  g* |-> -q^-1 * g*\n", ""));
  CHECK(c.kind == ErrorKind::IncompleteTable);

  // tensor where a polynomial is expected
  c = parse_error(replace(kBase, "  a |-> a*\n", "  a |-> a* (x) 1\n"));
  CHECK(c.kind == ErrorKind::Syntax);
  CHECK(c.line == 23);

  // table entry for an unknown name
  c = parse_error(replace(kBase, "  g |-> 0\n", "  g |-> 0\n  z |-> 0\n"));
  CHECK(c.kind == ErrorKind::UndeclaredGenerator);
  CHECK(c.line == 22);
  CHECK(c.col == 3);

  // wrong row length
  c = parse_error(replace(kBase, "row g, a*", "row g, a*, a"));
  CHECK(c.kind == ErrorKind::Syntax);
  CHECK(c.line == 30);

  c = parse_error(replace(kBase, "name su_q_2\n", ""));
  CHECK(c.kind == ErrorKind::Syntax);
}

TEST_CASE("tables that break the relations are rejected") {
  // g |-> g (x) g is multiplicative on nothing here
  auto c = parse_error(replace(kBase, "g |-> g (x) a + a* (x) g", "g |-> g (x) g"));
  CHECK(c.kind == ErrorKind::CheckFailed);
}

TEST_CASE("comments and blank lines are ignored") {
  std::string t = "# leading comment\n\n" + replace(kBase, "param q\n", "param q   # the deformation\n\n");
  CHECK(dsl::parse(t)->same_as(*load_preset("su_q_2")));
}
