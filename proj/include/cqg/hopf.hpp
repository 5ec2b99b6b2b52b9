#pragma once

// Hopf *-algebra structure on a presented algebra: generator tables for the
// comultiplication, counit and antipode, extended to all of A0.

#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "cqg/ncalg.hpp"
#include "cqg/report.hpp"

namespace cqg {

/// Square matrix of algebra elements declared alongside an algebra.
struct CorepSpec {
  std::string name;
  std::size_t dim = 0;
  std::vector<NcPoly> entries;  // row-major
  const NcPoly& at(std::size_t p, std::size_t q) const { return entries[p * dim + q]; }
};

/// Input tables. Missing comultiplication/counit entries for a star partner
/// are derived (Delta(x*) = Delta(x)*, eps(x*) = conj eps(x)); the antipode
/// must be given for every letter.
struct CqgData {
  std::string name;
  PresentationPtr pres;
  std::vector<std::optional<TensorPoly>> delta;
  std::vector<std::optional<Scalar>> counit;
  std::vector<std::optional<NcPoly>> antipode;
  /// Identities Delta must respect; when empty the rewrite rules are used.
  std::vector<FreePoly> relations;
  std::vector<CorepSpec> coreps;
};

class CqgAlgebra;
using AlgebraPtr = std::shared_ptr<const CqgAlgebra>;

class CqgAlgebra {
 public:
  /// Completes the tables and checks that Delta respects every defining
  /// relation (throws CheckFailed otherwise, or IncompleteTable when a
  /// table is missing an entry). `check_relations` exists for tests that
  /// deliberately build broken algebras.
  static AlgebraPtr create(CqgData data, bool check_relations = true);

  const std::string& name() const { return name_; }
  const PresentationPtr& pres() const { return pres_; }
  const std::vector<TensorPoly>& delta_table() const { return delta_; }
  const std::vector<Scalar>& counit_table() const { return counit_; }
  const std::vector<NcPoly>& antipode_table() const { return antipode_; }
  const std::vector<FreePoly>& relations() const { return relations_; }
  const std::vector<CorepSpec>& coreps() const { return coreps_; }
  const CorepSpec* find_corep(const std::string& name) const;

  NcPoly one() const { return NcPoly(pres_, Scalar(1)); }
  NcPoly gen(const std::string& name) const;
  NcPoly elem(const Word& w) const { return NcPoly::word(pres_, w); }

  /// Throws DegreeExceedsCertificate when confluence cannot be certified
  /// at the bound needed for elements of this degree.
  void require_certified(int degree) const;

  TensorPoly comultiply(const NcPoly& x) const;
  const TensorPoly& comultiply_word(const Word& w) const;
  Scalar counit(const NcPoly& x) const;
  Scalar counit_word(const Word& w) const;
  NcPoly antipode(const NcPoly& x) const;
  NcPoly antipode_word(const Word& w) const;

  /// (Delta (x) id) and (id (x) Delta) applied to a two-leg tensor.
  TensorPoly delta_left(const TensorPoly& t) const;
  TensorPoly delta_right(const TensorPoly& t) const;

  /// Same presentation, tables and declared coreps.
  bool same_as(const CqgAlgebra& other) const;

 private:
  CqgAlgebra() = default;
  void check_relation(const FreePoly& rel, const std::string& label) const;

  std::string name_;
  PresentationPtr pres_;
  std::vector<TensorPoly> delta_;
  std::vector<Scalar> counit_;
  std::vector<NcPoly> antipode_;
  std::vector<FreePoly> relations_;
  std::vector<CorepSpec> coreps_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<Word, std::unique_ptr<TensorPoly>> delta_memo_;
};

/// Exhaustive check of the Hopf axioms on all normal monomials of degree
/// <= bound: coassociativity, counit, antipode, kappa(kappa(a*)*) = a,
/// Delta(a*) = Delta(a)*, and multiplicativity on monomial pairs.
Report verify_hopf(const CqgAlgebra& alg, int bound);

/// Injectivity of T1(x (x) y) = Delta(x)(1 (x) y) and T2(x (x) y) =
/// (x (x) 1)Delta(y) on the degree-filtered tensor space, plus explicit
/// witnesses v_pq (x) 1 = sum_k Delta(v_pk)(1 (x) kappa(v_kq)) and
/// 1 (x) v_pq = sum_k (kappa(v_pk) (x) 1)Delta(v_kq) for declared coreps.
Report galois_maps(const CqgAlgebra& alg, int bound);

/// T1 applied to a single tensor.
TensorPoly galois_t1(const CqgAlgebra& alg, const TensorPoly& t);
TensorPoly galois_t2(const CqgAlgebra& alg, const TensorPoly& t);

}  // namespace cqg
