#include <cmath>
#include <random>

#include "doctest.h"

#include "cqg/error.hpp"
#include "cqg/finite.hpp"
#include "cqg/presets.hpp"

using namespace cqg;

namespace {

FiniteQuantumGroup trivial() { return c_of_group(make_group({"e"}, {{0}}), nullptr, "trivial"); }

std::vector<std::string> finite_presets() {
  std::vector<std::string> v;
  for (const auto& n : preset_names())
    if (is_finite_preset(n)) v.push_back(n);
  return v;
}

}  // namespace

TEST_CASE("gns Gram matrices") {
  CHECK(gns(load_finite_preset("c_z2").fa).gram == Scalar(1, 2) * ScalarMatrix::identity(2));
  CHECK(gns(load_finite_preset("c_s3").fa).gram == Scalar(1, 6) * ScalarMatrix::identity(6));
  CHECK(gns(trivial().fa).gram == ScalarMatrix::identity(1));
  // group algebra: h(g^* h) = [g = h]
  CHECK(gns(load_finite_preset("cg_s3").fa).gram == ScalarMatrix::identity(6));
  auto g = gns(load_finite_preset("c_z4").fa);
  CHECK(g.cyclic.size() == 4);
}

TEST_CASE("a non-faithful functional is rejected") {
  FiniteAlgebra fa = load_finite_preset("c_z2").fa;
  fa.haar = {Scalar(1), Scalar(0)};
  try {
    gns(fa);
    FAIL("expected haar-not-faithful");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HaarNotFaithful);
  }
}

TEST_CASE("regular unitary of C(Z2) follows the group law") {
  auto fq = load_finite_preset("c_z2");
  SparseMatrix u = regular_unitary(fq.fa);
  // U(d_a (x) d_b) = d_{ab^-1} (x) d_b
  const auto& t = finite_group("z2").group;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      std::size_t x = static_cast<std::size_t>(t.table[a][t.inverse[b]]);
      CHECK(u.at(x * 2 + b, a * 2 + b) == Scalar(1));
      CHECK(u.col(a * 2 + b).size() == 1);
    }
  CHECK(regular_unitary(trivial().fa) == SparseMatrix::identity(1));
}

TEST_CASE("regular unitary of the group algebra of Z2") {
  auto fq = load_finite_preset("cg_z2");
  SparseMatrix u = regular_unitary(fq.fa);
  // U(g (x) h) = g (x) gh
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t h = 0; h < 2; ++h) {
      std::size_t gh = static_cast<std::size_t>(finite_group("z2").group.table[g][h]);
      CHECK(u.at(g * 2 + gh, g * 2 + h) == Scalar(1));
    }
}

TEST_CASE("unitarity, pentagon and implementation for every finite preset") {
  auto names = finite_presets();
  names.push_back("trivial");
  for (const auto& name : names) {
    CAPTURE(name);
    FiniteQuantumGroup fq = name == "trivial" ? trivial() : load_finite_preset(name);
    GnsData g = gns(fq.fa);
    for (bool opposite : {false, true}) {
      CAPTURE(opposite);
      SparseMatrix u = regular_unitary(fq.fa, opposite);
      CHECK(check_regular_unitary(fq.fa, g, u).passed());
      CHECK(check_pentagon(u, fq.fa.dim).passed());
      Report imp = check_implements(fq.fa, g, u, opposite);
      CHECK(imp.passed());
    }
  }
}

TEST_CASE("a broken unitary fails the pentagon") {
  auto fq = load_finite_preset("c_z4");
  SparseMatrix u = regular_unitary(fq.fa);
  SparseMatrix bad = u;
  bad.add(0, 0, Scalar(1));
  CHECK_FALSE(check_pentagon(bad, 4).passed());
  CHECK_FALSE(check_regular_unitary(fq.fa, gns(fq.fa), bad).passed());
}

TEST_CASE("cesaro means on C(Z2)") {
  auto fq = load_finite_preset("c_z2");
  // the Cesaro mean approaches h like 1/n, so tolerances stay modest
  CesaroLog log = cesaro_haar(fq.fa, {0.9, 0.1}, 1000000, 1e-4);
  REQUIRE(log.converged);
  CHECK(std::abs(log.result[0] - 0.5) < 1e-4);
  CHECK(std::abs(log.result[1] - 0.5) < 1e-4);
  for (std::size_t k = 0; k < log.steps.size(); ++k)
    CHECK(log.defect[k] <= 2.0 / static_cast<double>(log.steps[k]) + 1e-12);

  // explicit oracle: omega^n = (1/2)(1 + 0.8^n, 1 - 0.8^n)
  CesaroLog five = cesaro_haar(fq.fa, {0.9, 0.1}, 5, 0.0);
  double s = 0;
  for (int n = 1; n <= 5; ++n) s += 0.5 * (1 + std::pow(0.8, n));
  CHECK(std::abs(five.result[0] - s / 5) < 1e-14);

  CesaroLog fixed = cesaro_haar(fq.fa, {0.5, 0.5}, 10, 1e-15);
  CHECK(fixed.converged);
  CHECK(fixed.iterations == 1);
}

TEST_CASE("cesaro rejects non-states") {
  auto fq = load_finite_preset("c_z2");
  CHECK_THROWS_AS(cesaro_haar(fq.fa, {0.7, 0.7}, 10, 1e-9), Error);
  CHECK_THROWS_AS(cesaro_haar(fq.fa, {1.5, -0.5}, 10, 1e-9), Error);
  try {
    cesaro_haar(fq.fa, {1.5, -0.5}, 10, 1e-9);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAState);
  }
}

TEST_CASE("cesaro on S3 and D4") {
  for (const char* name : {"c_s3", "c_d4"}) {
    auto fq = load_finite_preset(name);
    std::vector<double> w(fq.fa.dim, 0.0);
    w[0] = 0.5;  // identity
    w[1] = 0.25;
    w[2] = 0.25;
    CesaroLog log = cesaro_haar(fq.fa, w, 1000000, 1e-3);
    CHECK(log.converged);
    for (std::size_t k = 0; k < log.steps.size(); ++k)
      CHECK(log.defect[k] <= 2.0 / static_cast<double>(log.steps[k]) + 1e-12);
  }
}

TEST_CASE("tail means converge past the 1/n floor") {
  auto fq = load_finite_preset("c_z2");
  CesaroLog log = cesaro_haar(fq.fa, {0.9, 0.1}, 1000000, 1e-9, true);
  REQUIRE(log.converged);
  CHECK(log.accelerated);
  CHECK(log.iterations < 1000);
  CHECK(std::abs(log.result[0] - 0.5) < 1e-9);
  // omega^k = (1/2)(1 + 0.8^k, 1 - 0.8^k): the tail mean over k = m+1..2m
  // sits at l1 distance (1/m) sum 0.8^k from h
  for (std::size_t k = 0; k < log.steps.size(); ++k) {
    const std::size_t n = log.steps[k];
    if (log.tail_distance[k] < 0) continue;
    REQUIRE((n & (n - 1)) == 0);
    const std::size_t m = n / 2;
    double s = 0;
    for (std::size_t j = m + 1; j <= 2 * m; ++j) s += std::pow(0.8, static_cast<double>(j));
    CHECK(std::abs(log.tail_distance[k] - s / static_cast<double>(m)) < 1e-12);
  }
  // the plain mean would need about 8 / 1e-9 steps
  CesaroLog plain = cesaro_haar(fq.fa, {0.9, 0.1}, 4096, 1e-9);
  CHECK_FALSE(plain.converged);
}

TEST_CASE("seeded random state on S3 reaches 1e-6") {
  auto fq = load_finite_preset("c_s3");
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(fq.fa.dim);
  double s = 0;
  for (double& x : w) s += (x = u(rng));
  for (double& x : w) x /= s;
  CesaroLog log = cesaro_haar(fq.fa, w, 1000000, 1e-6, true);
  REQUIRE(log.converged);
  double dist = 0;
  for (double x : log.result) dist += std::abs(x - 1.0 / 6);
  CHECK(dist <= 1e-6);
  for (std::size_t k = 0; k < log.steps.size(); ++k)
    CHECK(log.defect[k] <= 2.0 / static_cast<double>(log.steps[k]) + 1e-12);
}
