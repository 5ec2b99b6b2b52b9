#include <random>

#include "doctest.h"

#include "cqg/corep.hpp"
#include "cqg/dual.hpp"
#include "cqg/error.hpp"
#include "cqg/haar.hpp"
#include "cqg/presets.hpp"

using namespace cqg;

namespace {

struct Setup {
  AlgebraPtr alg;
  std::shared_ptr<HaarTable> h;
  std::shared_ptr<IrrepRegistry> reg;
  std::unique_ptr<DualContext> dc;
};

Setup quantum(int depth) {
  Setup s;
  s.alg = load_preset("su_q_2");
  s.h = std::make_shared<HaarTable>(compute_haar(*s.alg, std::max(2, 2 * depth)));
  s.reg = IrrepRegistry::seeded(s.alg, s.h);
  if (depth > 1) fusion_table(*s.reg, depth);
  s.dc = std::make_unique<DualContext>(s.reg, s.h);
  return s;
}

Setup finite(const std::string& name) {
  Setup s;
  auto fq = load_finite_preset(name);
  s.alg = fq.view;
  s.h = std::make_shared<HaarTable>(compute_haar(*s.alg, 2));
  s.reg = IrrepRegistry::seeded(s.alg, s.h);
  fusion_table(*s.reg, 2 * static_cast<int>(fq.fa.dim));
  s.dc = std::make_unique<DualContext>(s.reg, s.h);
  return s;
}

DualElement random_element(const DualContext& dc, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  DualElement w;
  for (const auto& l : dc.labels()) {
    const std::size_t n = dc.block_dim(l);
    ScalarMatrix m(n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t r = 0; r < n; ++r) m(p, r) = Scalar(c(rng)) + Scalar(c(rng)) * Scalar::i();
    w.blocks[l] = m;
  }
  return w;
}

// block a of w read off through the pairing
ScalarMatrix values(const DualContext& dc, const DualElement& w, const std::string& a) {
  const Corep& u = dc.corep(a);
  ScalarMatrix m(u.dim, u.dim);
  for (std::size_t r = 0; r < u.dim; ++r)
    for (std::size_t s = 0; s < u.dim; ++s) m(r, s) = dc.pair(w, u.at(r, s));
  return m;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("basis elements pair to matrix units") {
  Setup s = quantum(3);
  const DualContext& dc = *s.dc;
  for (const auto& a : dc.labels())
    for (std::size_t p = 0; p < dc.block_dim(a); ++p)
      for (std::size_t q = 0; q < dc.block_dim(a); ++q) {
        DualElement w = dc.basis(a, p, q);
        for (const auto& b : dc.labels()) {
          ScalarMatrix expect = a == b ? ScalarMatrix::unit(dc.block_dim(b), dc.block_dim(b), p, q)
                                       : ScalarMatrix(dc.block_dim(b), dc.block_dim(b));
          CHECK(values(dc, w, b) == expect);
        }
      }
}

TEST_CASE("convolution is blockwise matrix multiplication") {
  Setup s = quantum(2);
  const DualContext& dc = *s.dc;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    DualElement a = random_element(dc, rng), b = random_element(dc, rng);
    DualElement c = dc.convolve(a, b);
    for (const auto& l : dc.labels()) {
      // (a (x) b) Delta(u_rs) = sum_k a(u_rk) b(u_ks)
      CHECK(values(dc, c, l) == values(dc, a, l) * values(dc, b, l));
      const Corep& u = dc.corep(l);
      CHECK(dc.convolve_by_definition(a, b, u.at(0, u.dim - 1)) == c.blocks.at(l)(0, u.dim - 1));
    }
  }
}

TEST_CASE("star is an involution matching its definition") {
  Setup s = quantum(2);
  const DualContext& dc = *s.dc;
  std::mt19937 rng(11);
  DualElement w = random_element(dc, rng);
  CHECK(dc.star(dc.star(w)) == w);
  for (const auto& l : dc.labels()) {
    const Corep& u = dc.corep(l);
    for (std::size_t r = 0; r < u.dim; ++r)
      for (std::size_t t = 0; t < u.dim; ++t) {
        // w*(x) = conj(w(kappa(x)^*)), with kappa computed here from the tables
        Scalar direct = dc.pair(w, s.alg->antipode(u.at(r, t)).star()).conj();
        CHECK(dc.pair(dc.star(w), u.at(r, t)) == direct);
      }
  }
  // convolution reverses under star
  DualElement v = random_element(dc, rng);
  CHECK(dc.star(dc.convolve(w, v)) == dc.convolve(dc.star(v), dc.star(w)));
}

TEST_CASE("K matrix of the fundamental block") {
  Setup s = quantum(2);
  const DualContext& dc = *s.dc;
  CHECK(dc.conjugate_label("2:1") == "2:1");
  KMatrix k = dc.k_matrix("2:1");
  const Scalar q2 = Scalar::q_power(2);
  CHECK(k.k == (Scalar(1) + q2).inverse() * ScalarMatrix::diagonal({q2, Scalar(1)}));
  CHECK(k.report.passed());
  // kappa^2 computed from the antipode table
  auto ki = inverse(k.k);
  REQUIRE(ki);
  const Corep& u = dc.corep("2:1");
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) {
      ScalarMatrix e = ScalarMatrix::unit(2, 2, p, q);
      ScalarMatrix expect = *ki * e * k.k;
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t t = 0; t < 2; ++t)
          CHECK(dc.pair(dc.basis("2:1", p, q), s.alg->antipode(s.alg->antipode(u.at(r, t)))) == expect(r, t));
    }
  CHECK(dc.verify().passed());
}

TEST_CASE("C(Z4): conjugate characters") {
  Setup s = finite("c_z4");
  const DualContext& dc = *s.dc;
  REQUIRE(dc.labels().size() == 4);
  for (const auto& l : dc.labels()) {
    // conj(u^a) is the entrywise star, so the conjugate block carries chi^*
    std::string c = dc.conjugate_label(l);
    CHECK(dc.corep(c).at(0, 0) == dc.corep(l).at(0, 0).star());
    CHECK(dc.conjugate_label(c) == l);
    CHECK(dc.k_matrix(l).k == ScalarMatrix::identity(1));
  }
  // chi^3 = chi^* for every character: multiply three times
  for (const auto& l : dc.labels()) {
    const NcPoly& chi = dc.corep(l).at(0, 0);
    CHECK(chi * chi * chi == chi.star());
  }
  CHECK(dc.verify().passed());
}

TEST_CASE("finite duals pass every family") {
  for (const std::string name : {"c_s3", "cg_s3", "c_q8"}) {
    Setup s = finite(name);
    std::size_t dim = 0;
    for (const auto& l : s.dc->labels()) dim += s.dc->block_dim(l) * s.dc->block_dim(l);
    CHECK_MESSAGE(dim == load_finite_preset(name).fa.dim, name);
    CHECK_MESSAGE(s.dc->verify().passed(), name);
  }
}

TEST_CASE("the unit blocks of a snapshot do not make a counit") {
  // sum of identity blocks over labels 1 and 2 pairs to the counit there,
  // but vanishes on the spin-one coefficients found later
  Setup small = quantum(1);
  DualElement e;
  for (const auto& l : small.dc->labels()) e.blocks[l] = ScalarMatrix::identity(small.dc->block_dim(l));
  for (const auto& l : small.dc->labels()) {
    const Corep& u = small.dc->corep(l);
    for (std::size_t r = 0; r < u.dim; ++r) CHECK(small.dc->pair(e, u.at(r, r)) == small.alg->counit(u.at(r, r)));
  }
  Setup big = quantum(2);
  const Corep& w = big.dc->corep("3:1");
  NcPoly x = w.at(0, 0);
  CHECK(big.alg->counit(x) == Scalar(1));
  DualElement e2 = e;
  CHECK(big.dc->pair(e2, x).is_zero());
  CHECK(kind_of([&] { small.dc->block_dim("3:1"); }) == ErrorKind::RegistryMismatch);
}
