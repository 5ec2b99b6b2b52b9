#pragma once

// The dual B0 = (+)_a M_n(a) over a fixed registry snapshot. Functionals
// are represented by elements a of A0 through x -> h(a x).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cqg/corep.hpp"
#include "cqg/haar.hpp"
#include "cqg/report.hpp"

namespace cqg {

/// Finitely supported block matrix; omega(u^a_rs) = blocks[a](r, s).
struct DualElement {
  std::map<std::string, ScalarMatrix> blocks;

  bool is_zero() const;
  friend bool operator==(const DualElement& a, const DualElement& b);
  DualElement& operator+=(const DualElement& o);
  DualElement scaled(const Scalar& c) const;
  Json to_json() const;
};

struct KMatrix {
  std::string label;      // a
  std::string conjugate;  // the block carrying K_a
  ScalarMatrix k;         // (F^conj)^T G^conj; F^T when G = I
  Report report;
};

class DualContext {
 public:
  /// Snapshots the registry and computes every F matrix (which must be
  /// covered by the table).
  DualContext(std::shared_ptr<const IrrepRegistry> reg, std::shared_ptr<const HaarTable> haar);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t block_dim(const std::string& label) const;
  const ScalarMatrix& f(const std::string& label) const;
  const ScalarMatrix& gram(const std::string& label) const;
  const Corep& corep(const std::string& label) const;

  /// omega^a_pq: the unit matrix e_pq in block a.
  DualElement basis(const std::string& label, std::size_t p, std::size_t q) const;
  /// a = sum_kt (F^-1)_pk (G^-1)_qt (u_kt)^*, so that h(a u^b_rs) = delta.
  NcPoly representing(const std::string& label, std::size_t p, std::size_t q) const;
  NcPoly representing(const DualElement& w) const;

  /// h(a_omega x).
  Scalar pair(const DualElement& w, const NcPoly& x) const;
  /// Value of the block model on x, for x in the span of registry coefficients
  /// given as explicit coefficients; the direct route is pair().
  Scalar block_value(const DualElement& w, const std::string& label, std::size_t r, std::size_t s) const;

  DualElement convolve(const DualElement& a, const DualElement& b) const;
  /// (a (x) b) Delta(x) through the pairing.
  Scalar convolve_by_definition(const DualElement& a, const DualElement& b, const NcPoly& x) const;

  /// Blockwise G^-1 X^H G (the conjugate transpose when G = I).
  DualElement star(const DualElement& w) const;
  /// conj(omega(kappa(x)^*)).
  Scalar star_by_definition(const DualElement& w, const NcPoly& x) const;

  /// omega(ab).
  Scalar comult_eval(const DualElement& w, const NcPoly& a, const NcPoly& b) const;

  /// Label b with u^b equivalent to conj(u^a). Throws NotInRegistry when no
  /// entry matches, ConjugateUnresolved when the answer is ambiguous.
  std::string conjugate_label(const std::string& label) const;
  KMatrix k_matrix(const std::string& label) const;

  /// Pairing matrix, basis convolution law, star and its defining formula,
  /// dual comultiplication on matrix-coefficient pairs, K matrices.
  Report verify() const;

  Json to_json() const;

 private:
  void require_block(const DualElement& w) const;

  std::shared_ptr<const IrrepRegistry> reg_;
  std::shared_ptr<const HaarTable> haar_;
  std::vector<std::string> labels_;
  std::map<std::string, const Irrep*> irreps_;
  std::map<std::string, ScalarMatrix> f_, f_inv_, gram_, gram_inv_;
};

}  // namespace cqg
