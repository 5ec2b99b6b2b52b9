#include "cqg/ncalg.hpp"

#include <algorithm>
#include <climits>

#include "cqg/error.hpp"

namespace cqg {

void add_term(FreePoly& p, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// ---------------------------------------------------------------- Presentation

PresentationPtr Presentation::create(std::vector<Symbol> symbols, std::vector<Rule> rules) {
  std::shared_ptr<Presentation> p(new Presentation());
  p->symbols_ = std::move(symbols);
  for (std::size_t k = 0; k < p->symbols_.size(); ++k) {
    const Symbol& s = p->symbols_[k];
    if (s.star >= p->symbols_.size() || p->symbols_[s.star].star != k)
      throw Error(ErrorKind::Internal, "star pairing of '" + s.name + "' is not an involution");
    if (!p->by_name_.emplace(s.name, static_cast<int>(k)).second)
      throw Error(ErrorKind::Internal, "duplicate generator '" + s.name + "'");
  }
  p->rules_ = std::move(rules);
  p->rules_by_first_.assign(p->symbols_.size(), {});
  for (std::size_t r = 0; r < p->rules_.size(); ++r) {
    const Rule& rule = p->rules_[r];
    if (rule.lhs.empty()) throw Error(ErrorKind::OrientationViolation, "rule with empty left-hand side");
    for (const auto& [w, c] : rule.rhs) {
      if (!p->less(w, rule.lhs))
        throw Error(ErrorKind::OrientationViolation,
                    "rule " + p->word_text(rule.lhs) + " -> ... has right-hand word " + p->word_text(w) +
                        " not below its left-hand side");
    }
    p->rules_by_first_[rule.lhs[0]].push_back(r);
  }
  for (auto& bucket : p->rules_by_first_)
    std::stable_sort(bucket.begin(), bucket.end(), [&](std::size_t a, std::size_t b) {
      return p->rules_[a].lhs.size() < p->rules_[b].lhs.size();
    });
  return p;
}

int Presentation::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int Presentation::max_rule_degree() const {
  int m = 0;
  for (const auto& r : rules_) m = std::max(m, static_cast<int>(r.lhs.size()));
  return m;
}

int Presentation::weight(const Word& w) const {
  int s = 0;
  for (Letter x : w) s += symbols_[x].weight;
  return s;
}

bool Presentation::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return a < b;
}

Word Presentation::star_word(const Word& w) const {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = symbols_[x].star;
  return out;
}

std::string Presentation::word_text(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += symbols_[w[k]].name;
  }
  return s;
}

FreePoly Presentation::apply_rule_at(const Word& w, std::size_t pos, const Rule& r) const {
  FreePoly out;
  const Word pre = w.substr(0, pos), post = w.substr(pos + r.lhs.size());
  for (const auto& [m, c] : r.rhs) add_term(out, pre + m + post, c);
  return out;
}

bool Presentation::rewrite_once(const Word& w, FreePoly& out) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t r : rules_by_first_[w[i]]) {
      const Word& lhs = rules_[r].lhs;
      if (lhs.size() <= w.size() - i && w.compare(i, lhs.size(), lhs) == 0) {
        out = apply_rule_at(w, i, rules_[r]);
        return true;
      }
    }
  }
  return false;
}

bool Presentation::is_irreducible(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t r : rules_by_first_[w[i]]) {
      const Word& lhs = rules_[r].lhs;
      if (lhs.size() <= w.size() - i && w.compare(i, lhs.size(), lhs) == 0) return false;
    }
  return true;
}

FreePoly Presentation::reduce(const Word& w) const {
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  FreePoly step, result;
  if (!rewrite_once(w, step)) {
    result.emplace(w, Scalar(1));
  } else {
    for (const auto& [m, c] : step) {
      FreePoly sub = reduce(m);
      for (const auto& [m2, c2] : sub) add_term(result, m2, c * c2);
    }
  }
  std::unique_lock lock(memo_mutex_);
  memo_.emplace(w, result);
  return result;
}

FreePoly Presentation::normalize(const FreePoly& p) const {
  FreePoly out;
  for (const auto& [w, c] : p) {
    if (is_irreducible(w)) {
      add_term(out, w, c);
      continue;
    }
    for (const auto& [m, c2] : reduce(w)) add_term(out, m, c * c2);
  }
  return out;
}

std::vector<Word> Presentation::normal_monomials_of_degree(int degree) const {
  std::vector<Word> level{Word()};
  for (int d = 1; d <= degree; ++d) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (std::size_t x = 0; x < symbols_.size(); ++x) {
        Word v = w + static_cast<Letter>(x);
        // prefix is irreducible, so only suffix matches can appear
        bool ok = true;
        for (const auto& r : rules_) {
          if (r.lhs.size() <= v.size() && v.compare(v.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
            ok = false;
            break;
          }
        }
        if (ok) next.push_back(std::move(v));
      }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), [&](const Word& a, const Word& b) { return less(a, b); });
  return level;
}

std::vector<Word> Presentation::normal_monomials(int max_degree) const {
  std::vector<Word> all;
  for (int d = 0; d <= max_degree; ++d) {
    auto lvl = normal_monomials_of_degree(d);
    all.insert(all.end(), lvl.begin(), lvl.end());
  }
  return all;
}

ConfluenceReport Presentation::check_confluence(int degree_bound) const {
  ConfluenceReport rep;
  rep.degree_bound = degree_bound;
  auto resolve = [&](const Word& w, const FreePoly& a, const FreePoly& b) {
    ++rep.ambiguities_checked;
    FreePoly na = normalize(a), nb = normalize(b);
    if (na != nb) rep.failures.push_back({w, std::move(na), std::move(nb)});
  };
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Word& l1 = rules_[i].lhs;
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      const Word& l2 = rules_[j].lhs;
      // overlap: proper suffix of l1 equals proper prefix of l2
      for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
        if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
        Word w = l1 + l2.substr(k);
        if (static_cast<int>(w.size()) > degree_bound) continue;
        resolve(w, apply_rule_at(w, 0, rules_[i]), apply_rule_at(w, l1.size() - k, rules_[j]));
      }
      // inclusion: l2 inside l1
      if (i != j && l2.size() <= l1.size() && static_cast<int>(l1.size()) <= degree_bound) {
        for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p)
          if (l1.compare(p, l2.size(), l2) == 0)
            resolve(l1, rules_[i].rhs, apply_rule_at(l1, p, rules_[j]));
      }
    }
    // star closure: *(lhs) and *(rhs) must have equal normal forms
    if (static_cast<int>(l1.size()) <= degree_bound) {
      FreePoly sr;
      for (const auto& [w, c] : rules_[i].rhs) add_term(sr, star_word(w), c.conj());
      resolve(star_word(l1), FreePoly{{star_word(l1), Scalar(1)}}, sr);
    }
  }
  return rep;
}

bool Presentation::ensure_certified(int degree) const {
  if (certified_.load() >= degree) return true;
  int f = failed_at_.load();
  if (f != 0 && f <= degree) return false;
  std::lock_guard lock(cert_mutex_);
  if (certified_.load() >= degree) return true;
  ConfluenceReport rep = check_confluence(degree);
  if (rep.confluent()) {
    // every ambiguity has length < 2 * max rule degree
    certified_.store(degree >= 2 * max_rule_degree() ? INT_MAX : degree);
    return true;
  }
  f = failed_at_.load();
  if (f == 0 || degree < f) failed_at_.store(degree);
  return false;
}

bool Presentation::same_as(const Presentation& o) const {
  if (symbols_.size() != o.symbols_.size() || rules_.size() != o.rules_.size()) return false;
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    const auto &a = symbols_[k], &b = o.symbols_[k];
    if (a.name != b.name || a.star != b.star || a.weight != b.weight) return false;
  }
  for (std::size_t k = 0; k < rules_.size(); ++k)
    if (rules_[k].lhs != o.rules_[k].lhs || rules_[k].rhs != o.rules_[k].rhs) return false;
  return true;
}

// ---------------------------------------------------------------- text helpers

namespace {

// True when the canonical scalar text is a sum (top-level + or - after the
// first character).
bool is_sum_text(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char ch = s[k];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && k > 0 && (ch == '+' || ch == '-') && s[k - 1] == ' ') return true;
  }
  return false;
}

}  // namespace

std::string term_text(const Scalar& c, const std::string& body, bool leading) {
  std::string ct = c.to_string();
  bool negative = !is_sum_text(ct) && !ct.empty() && ct[0] == '-';
  std::string mag = negative ? (-c).to_string() : ct;
  std::string core;
  if (body.empty()) {
    core = is_sum_text(mag) && !leading ? "(" + mag + ")" : mag;
  } else if (mag == "1") {
    core = body;
  } else {
    core = (is_sum_text(mag) ? "(" + mag + ")" : mag) + " * " + body;
  }
  if (leading) return negative ? "-" + core : core;
  return (negative ? " - " : " + ") + core;
}

// ---------------------------------------------------------------- NcPoly

NcPoly::NcPoly(PresentationPtr p, const Scalar& c) : pres_(std::move(p)) {
  if (!c.is_zero()) terms_.emplace(Word(), c);
}

NcPoly NcPoly::word(PresentationPtr p, const Word& w) {
  NcPoly out(p);
  out.terms_ = p->reduce(w);
  return out;
}

NcPoly NcPoly::from_free(PresentationPtr p, const FreePoly& f) {
  NcPoly out(p);
  out.terms_ = p->normalize(f);
  return out;
}

NcPoly NcPoly::from_normal(PresentationPtr p, FreePoly f) {
  NcPoly out(std::move(p));
  out.terms_ = std::move(f);
  return out;
}

int NcPoly::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

const PresentationPtr& NcPoly::common(const NcPoly& o) const {
  if (pres_ && o.pres_ && pres_ != o.pres_ && !pres_->same_as(*o.pres_))
    throw Error(ErrorKind::PresentationMismatch, "operands belong to different presentations");
  return pres_ ? pres_ : o.pres_;
}

NcPoly NcPoly::star() const {
  NcPoly out(pres_);
  if (!pres_) return out;
  FreePoly f;
  for (const auto& [w, c] : terms_) add_term(f, pres_->star_word(w), c.conj());
  out.terms_ = pres_->normalize(f);
  return out;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
  NcPoly out(pres_);
  if (c.is_zero()) return out;
  for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  pres_ = common(o);
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  pres_ = common(o);
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, -c);
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  PresentationPtr p = a.common(b);
  NcPoly out(p);
  for (const auto& [w1, c1] : a.terms_)
    for (const auto& [w2, c2] : b.terms_) {
      Scalar c = c1 * c2;
      if (w1.empty() || w2.empty()) {
        Word w = w1 + w2;
        add_term(out.terms_, w, c);
        continue;
      }
      for (const auto& [m, c3] : p->reduce(w1 + w2)) add_term(out.terms_, m, c * c3);
    }
  return out;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Word, Scalar>*> items;
  for (const auto& t : terms_) items.push_back(&t);
  std::sort(items.begin(), items.end(), [&](auto* x, auto* y) { return pres_->less(x->first, y->first); });
  std::string s;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Word& w = items[k]->first;
    s += term_text(items[k]->second, w.empty() ? "" : pres_->word_text(w), k == 0);
  }
  return s;
}

// ---------------------------------------------------------------- TensorPoly

TensorPoly TensorPoly::elementary(const std::vector<NcPoly>& legs) {
  if (legs.empty()) throw Error(ErrorKind::Internal, "tensor with no legs");
  PresentationPtr p;
  for (const auto& l : legs)
    if (l.presentation()) p = l.presentation();
  TensorPoly out(p, static_cast<int>(legs.size()));
  std::vector<std::pair<Legs, Scalar>> acc{{Legs{}, Scalar(1)}};
  for (const auto& leg : legs) {
    std::vector<std::pair<Legs, Scalar>> next;
    for (const auto& [ls, c] : acc)
      for (const auto& [w, c2] : leg.terms()) {
        Legs l2 = ls;
        l2.push_back(w);
        next.emplace_back(std::move(l2), c * c2);
      }
    acc = std::move(next);
  }
  for (const auto& [ls, c] : acc) out.add(ls, c);
  return out;
}

TensorPoly TensorPoly::one(PresentationPtr p, int arity) {
  TensorPoly t(std::move(p), arity);
  t.terms_.emplace(Legs(static_cast<std::size_t>(arity)), Scalar(1));
  return t;
}

void TensorPoly::add(const Legs& legs, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(legs, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorPoly::add_product(const Legs& a, const Legs& b, const Scalar& c) {
  std::vector<std::pair<Legs, Scalar>> acc{{Legs{}, c}};
  for (std::size_t j = 0; j < a.size(); ++j) {
    FreePoly leg;
    if (a[j].empty() || b[j].empty())
      leg.emplace(a[j] + b[j], Scalar(1));
    else
      leg = pres_->reduce(a[j] + b[j]);
    std::vector<std::pair<Legs, Scalar>> next;
    next.reserve(acc.size() * leg.size());
    for (const auto& [ls, v] : acc)
      for (const auto& [w, c2] : leg) {
        Legs l2 = ls;
        l2.push_back(w);
        next.emplace_back(std::move(l2), v * c2);
      }
    acc = std::move(next);
  }
  for (const auto& [ls, v] : acc) add(ls, v);
}

TensorPoly TensorPoly::star() const {
  TensorPoly out(pres_, arity_);
  for (const auto& [legs, c] : terms_) {
    std::vector<NcPoly> ls;
    for (const auto& w : legs) ls.push_back(NcPoly::word(pres_, pres_->star_word(w)));
    out += elementary(ls).scaled(c.conj());
  }
  return out;
}

TensorPoly TensorPoly::scaled(const Scalar& c) const {
  TensorPoly out(pres_, arity_);
  if (c.is_zero()) return out;
  for (const auto& [l, v] : terms_) out.terms_.emplace(l, v * c);
  return out;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  if (!pres_) pres_ = o.pres_;
  if (o.arity_ != arity_ && !o.terms_.empty()) throw Error(ErrorKind::Internal, "tensor arity mismatch");
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  if (!pres_) pres_ = o.pres_;
  if (o.arity_ != arity_ && !o.terms_.empty()) throw Error(ErrorKind::Internal, "tensor arity mismatch");
  for (const auto& [l, c] : o.terms_) add(l, -c);
  return *this;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
  if (a.arity_ != b.arity_) throw Error(ErrorKind::Internal, "tensor arity mismatch");
  TensorPoly out(a.pres_ ? a.pres_ : b.pres_, a.arity_);
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) out.add_product(la, lb, ca * cb);
  return out;
}

std::string TensorPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Legs, Scalar>*> items;
  for (const auto& t : terms_) items.push_back(&t);
  std::sort(items.begin(), items.end(), [&](auto* x, auto* y) {
    for (std::size_t j = 0; j < x->first.size(); ++j) {
      if (pres_->less(x->first[j], y->first[j])) return true;
      if (pres_->less(y->first[j], x->first[j])) return false;
    }
    return false;
  });
  std::string s;
  for (std::size_t k = 0; k < items.size(); ++k) {
    std::string body;
    for (std::size_t j = 0; j < items[k]->first.size(); ++j) {
      if (j) body += " (x) ";
      body += pres_->word_text(items[k]->first[j]);
    }
    s += term_text(items[k]->second, body, k == 0);
  }
  return s;
}

}  // namespace cqg
