#pragma once

// Free *-algebra on involutive generator pairs modulo an oriented rewriting
// system. Words are strings of letter ids; normal forms are computed by
// leftmost-innermost rewriting and memoized per presentation.

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "cqg/scalar.hpp"

namespace cqg {

using Letter = char16_t;
using Word = std::u16string;
/// Linear combination of words, not necessarily reduced.
using FreePoly = std::map<Word, Scalar>;

void add_term(FreePoly& p, const Word& w, const Scalar& c);

struct Symbol {
  std::string name;
  Letter star = 0;  // partner letter; equal to own id when self-adjoint
  int weight = 1;
};

struct Rule {
  Word lhs;
  FreePoly rhs;
};

struct ConfluenceFailure {
  Word overlap;
  FreePoly left;
  FreePoly right;
};

struct ConfluenceReport {
  int degree_bound = 0;
  std::size_t ambiguities_checked = 0;
  std::vector<ConfluenceFailure> failures;
  bool confluent() const { return failures.empty(); }
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

class Presentation {
 public:
  /// Validates rule orientation (lhs strictly above every rhs word) and
  /// throws OrientationViolation otherwise.
  static PresentationPtr create(std::vector<Symbol> symbols, std::vector<Rule> rules);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t num_symbols() const { return symbols_.size(); }
  /// Letter id by name; -1 when unknown.
  int find(const std::string& name) const;
  Letter star(Letter x) const { return symbols_[x].star; }
  int max_rule_degree() const;

  /// Monomial order: length, then total weight, then lexicographic on ids.
  bool less(const Word& a, const Word& b) const;
  int weight(const Word& w) const;

  Word star_word(const Word& w) const;
  std::string word_text(const Word& w) const;

  /// Normal form of a single word (memoized).
  FreePoly reduce(const Word& w) const;
  FreePoly normalize(const FreePoly& p) const;
  bool is_irreducible(const Word& w) const;

  /// Normal-form monomials of length <= max_degree, in monomial order.
  std::vector<Word> normal_monomials(int max_degree) const;
  std::vector<Word> normal_monomials_of_degree(int degree) const;

  ConfluenceReport check_confluence(int degree_bound) const;
  /// Largest bound at which confluence has been confirmed (0 if never).
  int certified_degree() const { return certified_.load(); }
  /// Runs check_confluence at `degree` unless already certified there.
  /// Returns whether the presentation is confluent to that bound.
  bool ensure_certified(int degree) const;

  /// Same symbols and rules (rhs compared after normalization).
  bool same_as(const Presentation& other) const;

 private:
  Presentation() = default;
  // One rewrite step at the leftmost redex; false when w is irreducible.
  bool rewrite_once(const Word& w, FreePoly& out) const;
  FreePoly apply_rule_at(const Word& w, std::size_t pos, const Rule& r) const;

  std::vector<Symbol> symbols_;
  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> rules_by_first_;  // by first letter, shortest first
  std::unordered_map<std::string, int> by_name_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<Word, FreePoly> memo_;
  mutable std::mutex cert_mutex_;
  mutable std::atomic<int> certified_{0};
  mutable std::atomic<int> failed_at_{0};
};

class NcPoly {
 public:
  NcPoly() = default;
  explicit NcPoly(PresentationPtr p) : pres_(std::move(p)) {}
  NcPoly(PresentationPtr p, const Scalar& c);

  static NcPoly word(PresentationPtr p, const Word& w);
  static NcPoly generator(PresentationPtr p, Letter x) { return word(std::move(p), Word(1, x)); }
  static NcPoly from_free(PresentationPtr p, const FreePoly& f);
  /// Wraps terms already known to be reduced.
  static NcPoly from_normal(PresentationPtr p, FreePoly f);

  const PresentationPtr& presentation() const { return pres_; }
  const FreePoly& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for zero.
  int degree() const;
  Scalar coeff(const Word& w) const;
  /// Coefficient of the empty word.
  Scalar constant_term() const { return coeff(Word()); }

  NcPoly star() const;
  NcPoly scaled(const Scalar& c) const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const Scalar& c, const NcPoly& a) { return a.scaled(c); }
  NcPoly operator-() const { return scaled(Scalar(-1)); }
  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

  /// Terms in monomial order, e.g. "q^-1 * a g".
  std::string to_string() const;

 private:
  const PresentationPtr& common(const NcPoly& o) const;
  PresentationPtr pres_;
  FreePoly terms_;
};

/// Element of A (x) A or A (x) A (x) A with reduced legs.
class TensorPoly {
 public:
  using Legs = std::vector<Word>;
  using Terms = std::map<Legs, Scalar>;

  TensorPoly() = default;
  TensorPoly(PresentationPtr p, int arity) : pres_(std::move(p)), arity_(arity) {}

  /// Elementary tensor of normalized legs.
  static TensorPoly elementary(const std::vector<NcPoly>& legs);
  static TensorPoly one(PresentationPtr p, int arity);

  const PresentationPtr& presentation() const { return pres_; }
  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Legs& legs, const Scalar& c);
  /// Adds c * (product of the given reduced words per leg).
  void add_product(const Legs& a, const Legs& b, const Scalar& c);

  TensorPoly star() const;
  TensorPoly scaled(const Scalar& c) const;
  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Leg j as a polynomial after applying a linear functional to the others
  /// is done by callers; this returns the term list for iteration.
  std::string to_string() const;

 private:
  PresentationPtr pres_;
  int arity_ = 2;
  Terms terms_;
};

/// Text of c * w in the canonical style, sign handled by the caller when
/// `leading` is false.
std::string term_text(const Scalar& c, const std::string& body, bool leading);

}  // namespace cqg
