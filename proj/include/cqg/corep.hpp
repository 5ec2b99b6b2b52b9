#pragma once

// Finite-dimensional corepresentations: checks, tensor products, sums,
// adjoints, intertwiners, unitarization, decomposition and fusion.

#include <deque>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "cqg/haar.hpp"
#include "cqg/hopf.hpp"
#include "cqg/linalg.hpp"
#include "cqg/report.hpp"

namespace cqg {

/// Square matrix over A0. When `gram` is set the corep is unitary for the
/// inner product it defines: v^* G v = G and v G^-1 v^* = G^-1. Without it
/// the identity is meant.
struct Corep {
  std::string name;
  std::size_t dim = 0;
  std::vector<NcPoly> entries;  // row-major
  std::optional<ScalarMatrix> gram;

  const NcPoly& at(std::size_t p, std::size_t q) const { return entries[p * dim + q]; }
  NcPoly& at(std::size_t p, std::size_t q) { return entries[p * dim + q]; }
  const PresentationPtr& pres() const { return entries.at(0).presentation(); }
  int degree() const;
  ScalarMatrix gram_or_identity() const;

  static Corep from_spec(const CorepSpec& s);
  static Corep trivial(const PresentationPtr& p);
};

/// Result of an exact check; (p, q) locate the first failing entry.
struct CorepCheck {
  bool ok = true;
  std::size_t p = 0, q = 0;
  std::string residual;
};

CorepCheck is_corep(const CqgAlgebra& alg, const Corep& v);
CorepCheck is_unitary(const CqgAlgebra& alg, const Corep& v);

/// Entry ((p,q),(r,s)) is v_pr w_qs; the Gram matrix is G_v (x) G_w.
Corep tensor(const Corep& v, const Corep& w);
Corep direct_sum(const Corep& v, const Corep& w);
/// Entrywise star; no Gram matrix is attached.
Corep adjoint(const Corep& v);

/// Basis of Mor(v, w) = {x : (x (x) 1) v = w (x (x) 1)}, x of size
/// dim w x dim v.
std::vector<ScalarMatrix> intertwiners(const CqgAlgebra& alg, const Corep& v, const Corep& w);

/// y = (id (x) h)(w^-1 (x (x) 1) v) with w^-1 = G^-1 w^* G; for unitary w
/// this is (id (x) h)(w^* (x (x) 1) v). The result is checked to lie in
/// Mor(v, w).
ScalarMatrix averaged_intertwiner(const CqgAlgebra& alg, const Corep& v, const Corep& w, const ScalarMatrix& x,
                                  const HaarTable& h);

struct Unitarized {
  ScalarMatrix y;                // (id (x) h)(v^* v), exact
  ComplexMatrix root;            // y^{1/2} at q0
  ComplexMatrix inverse_root;    // y^{-1/2} at q0
  double residual = 0.0;         // unitarity defect of y^{1/2} v y^{-1/2} at q0
  Corep corep;                   // v with Gram matrix y
};
/// Throws NotPositiveDefinite when y is not positive definite at q0.
Unitarized unitarize(const CqgAlgebra& alg, const Corep& v, const HaarTable& h, double q0 = 0.5);

struct Irrep {
  std::string label;  // "dim:index"
  Corep corep;        // gram always set
  int degree = 0;     // tensor degree at discovery
};

/// Inequivalent irreducible coreps, labelled by dimension and discovery
/// order. Single writer, many readers; references stay valid.
class IrrepRegistry {
 public:
  IrrepRegistry(AlgebraPtr alg, std::shared_ptr<const HaarTable> haar);

  /// Trivial corep, then every declared corep of the algebra decomposed in
  /// order (non-unitary ones are given the Gram matrix from unitarize).
  static std::shared_ptr<IrrepRegistry> seeded(AlgebraPtr alg, std::shared_ptr<const HaarTable> haar);

  const CqgAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const HaarTable* haar() const { return haar_.get(); }

  std::size_t size() const;
  const Irrep& at(std::size_t k) const;
  const Irrep* find(const std::string& label) const;
  std::vector<std::string> labels() const;

  /// Registers an irreducible corep (Gram matrix required) and returns its
  /// label.
  std::string add(Corep c, int degree);

 private:
  AlgebraPtr alg_;
  std::shared_ptr<const HaarTable> haar_;
  mutable std::shared_mutex mutex_;
  std::deque<Irrep> irreps_;
};

struct Summand {
  std::string label;
  std::size_t multiplicity = 0;
  std::vector<ScalarMatrix> embeddings;  // T with v T = T u^label, exact
};

struct Decomposition {
  std::vector<Summand> summands;
  std::vector<std::string> new_labels;
  /// || U^* U - I || of the assembled isometries at q0.
  double witness_residual = 0.0;
  std::size_t dim = 0;
  Json to_json() const;
};

struct DecomposeOptions {
  double q0 = 0.5;
  double q1 = 2.0 / 3.0;       // second point used to recognise constant eigenvalues
  double tolerance = 1e-9;
  int degree = 0;              // tensor degree recorded for new irreps; 0 means v.degree()
  std::string name;            // name for a newly registered irreducible v
};

/// v must be a corep unitary for its Gram matrix. Throws SplittingFailed
/// when the commutant cannot be split with constant rational eigenvalues.
Decomposition decompose(const Corep& v, IrrepRegistry& reg, const DecomposeOptions& opt = {});

struct FusionEntry {
  std::string left, right;
  std::vector<std::pair<std::string, std::size_t>> summands;
};
struct FusionTable {
  int depth = 0;
  std::vector<FusionEntry> entries;
  Json to_json() const;
  const FusionEntry* find(const std::string& l, const std::string& r) const;
};

/// Decomposes u^a (x) u^b for registry pairs with degree(a) + degree(b) <=
/// depth, registering new irreps, until nothing new appears.
FusionTable fusion_table(IrrepRegistry& reg, int depth, const DecomposeOptions& opt = {});

/// sum_k kappa(v_pk) v_kq = delta_pq 1 and sum_k v_pk kappa(v_kq) = delta_pq 1.
Report verify_wor1_axiom3(const CqgAlgebra& alg, const Corep& v);

/// Rank of the span of all registry matrix coefficients inside the normal
/// monomials of degree <= max_degree.
std::size_t coefficient_rank(const IrrepRegistry& reg);

}  // namespace cqg
