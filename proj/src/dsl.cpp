#include "cqg/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "cqg/error.hpp"

namespace cqg::dsl {

namespace {

enum class Tok { Number, Name, Plus, Minus, Times, Divide, Caret, LParen, RParen, Tensor, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int col;  // 1-based
};

// Multi-leg polynomial; arity 1 is an ordinary polynomial.
struct Value {
  int arity = 1;
  std::map<std::vector<Word>, Scalar> terms;

  static Value scalar(const Scalar& s) {
    Value v;
    if (!s.is_zero()) v.terms[{Word()}] = s;
    return v;
  }
  bool is_scalar() const {
    if (arity != 1) return false;
    for (const auto& [l, c] : terms)
      if (!l[0].empty()) return false;
    return true;
  }
  Scalar scalar_value() const {
    auto it = terms.find({Word()});
    return it == terms.end() ? Scalar() : it->second;
  }
  void add(const std::vector<Word>& l, const Scalar& c) {
    auto [it, fresh] = terms.emplace(l, c);
    if (!fresh) it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
};

class LineParser {
 public:
  LineParser(const std::string& text, int line, int col0, const std::map<std::string, Letter>* names,
             const std::vector<Symbol>* symbols)
      : line_(line), names_(names), symbols_(symbols) {
    lex(text, col0);
  }

  [[noreturn]] void fail(ErrorKind k, const std::string& what, int col) const { throw ParseError(k, what, line_, col); }
  [[noreturn]] void fail(const std::string& what) const { fail(ErrorKind::Syntax, what, peek().col); }

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }

  Value sum() {
    Value acc;
    bool first = true;
    while (true) {
      bool neg = false;
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        neg = peek().kind == Tok::Minus;
        ++pos_;
      } else if (!first) {
        break;
      }
      const int col = peek().col;
      Value t = tensor();
      if (!first && t.arity != acc.arity) fail(ErrorKind::Syntax, "terms with different numbers of tensor legs", col);
      if (first) acc.arity = t.arity;
      for (const auto& [l, c] : t.terms) acc.add(l, neg ? -c : c);
      first = false;
    }
    return acc;
  }

  void expect_end() const {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }

 private:
  void lex(const std::string& s, int col0) {
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      const int col = col0 + static_cast<int>(i);
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        toks_.push_back({Tok::Number, s.substr(i, j - i), col});
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        std::string name = s.substr(i, j - i);
        const bool reserved = (name == "q" || name == "i") && !(names_ && names_->count(name));
        if (!reserved && j < s.size() && s[j] == '*') name += s[j++];
        toks_.push_back({Tok::Name, name, col});
        i = j;
        continue;
      }
      if (s.compare(i, 3, "(x)") == 0) {
        toks_.push_back({Tok::Tensor, "(x)", col});
        i += 3;
        continue;
      }
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Times; break;
        case '/': k = Tok::Divide; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ',': k = Tok::Comma; break;
        default: throw ParseError(ErrorKind::Syntax, std::string("unexpected character '") + c + "'", line_, col);
      }
      toks_.push_back({k, std::string(1, c), col});
      ++i;
    }
    toks_.push_back({Tok::End, "end of line", col0 + static_cast<int>(s.size())});
  }

  Value tensor() {
    Value v = product();
    while (peek().kind == Tok::Tensor) {
      ++pos_;
      Value w = product();
      Value out;
      out.arity = v.arity + w.arity;
      for (const auto& [l1, c1] : v.terms)
        for (const auto& [l2, c2] : w.terms) {
          std::vector<Word> l = l1;
          l.insert(l.end(), l2.begin(), l2.end());
          out.add(l, c1 * c2);
        }
      v = std::move(out);
    }
    return v;
  }

  bool starts_atom() const {
    Tok k = peek().kind;
    return k == Tok::Number || k == Tok::Name || k == Tok::LParen;
  }

  Value multiply(const Value& a, const Value& b, int col) const {
    if (a.is_scalar() || b.is_scalar()) {
      const Value& s = a.is_scalar() ? a : b;
      const Value& o = a.is_scalar() ? b : a;
      Value out;
      out.arity = o.arity;
      Scalar c = s.scalar_value();
      for (const auto& [l, x] : o.terms) out.add(l, c * x);
      return out;
    }
    if (a.arity != 1 || b.arity != 1) fail(ErrorKind::Syntax, "product of tensors", col);
    Value out;
    for (const auto& [l1, c1] : a.terms)
      for (const auto& [l2, c2] : b.terms) out.add({l1[0] + l2[0]}, c1 * c2);
    return out;
  }

  Value product() {
    Value v = unary();
    while (true) {
      const int col = peek().col;
      if (peek().kind == Tok::Times) {
        ++pos_;
        v = multiply(v, unary(), col);
      } else if (peek().kind == Tok::Divide) {
        ++pos_;
        Value d = unary();
        if (!d.is_scalar()) fail(ErrorKind::Syntax, "division by a non-scalar", col);
        if (d.scalar_value().is_zero()) fail(ErrorKind::DivisionByZero, "division by zero", col);
        v = multiply(v, Value::scalar(d.scalar_value().inverse()), col);
      } else if (starts_atom()) {
        v = multiply(v, unary(), col);
      } else {
        break;
      }
    }
    return v;
  }

  Value unary() {
    if (peek().kind == Tok::Minus) {
      ++pos_;
      Value v = unary();
      for (auto& [l, c] : v.terms) c = -c;
      return v;
    }
    Value base = atom();
    if (peek().kind == Tok::Caret) {
      const int col = peek().col;
      ++pos_;
      bool neg = false;
      if (peek().kind == Tok::Minus) {
        neg = true;
        ++pos_;
      }
      if (peek().kind != Tok::Number) fail("expected an integer exponent");
      long e = std::stol(peek().text);
      ++pos_;
      if (base.is_scalar()) return Value::scalar(base.scalar_value().pow(neg ? -e : e));
      if (neg) fail(ErrorKind::Syntax, "negative power of a non-scalar", col);
      Value r = Value::scalar(Scalar(1));
      for (long k = 0; k < e; ++k) r = multiply(r, base, col);
      return r;
    }
    return base;
  }

  Value atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number:
        ++pos_;
        return Value::scalar(Scalar(mpq_class(t.text)));
      case Tok::LParen: {
        ++pos_;
        Value v = sum();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        ++pos_;
        return v;
      }
      case Tok::Name: {
        ++pos_;
        if (names_ && names_->count(t.text)) {
          Value v;
          v.terms[{Word(1, names_->at(t.text))}] = Scalar(1);
          return v;
        }
        if (t.text == "q") return Value::scalar(Scalar::q());
        if (t.text == "i") return Value::scalar(Scalar::i());
        if (t.text.back() == '*' && names_) {
          auto it = names_->find(t.text.substr(0, t.text.size() - 1));
          if (it != names_->end()) {
            Value v;
            v.terms[{Word(1, (*symbols_)[it->second].star)}] = Scalar(1);
            return v;
          }
        }
        fail(ErrorKind::UndeclaredGenerator, "undeclared generator '" + t.text + "'", t.col);
      }
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  int line_;
  const std::map<std::string, Letter>* names_;
  const std::vector<Symbol>* symbols_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct Line {
  int number;
  int indent;  // 0-based offset of the first non-blank character
  std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::size_t b = raw.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = raw.find_last_not_of(" \t");
    out.push_back({n, static_cast<int>(b), raw.substr(b, e - b + 1)});
  }
  return out;
}

std::vector<std::string> words_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> w;
  std::string x;
  while (in >> x) w.push_back(x);
  return w;
}

// Splits "x SEP rest"; returns the column (1-based) where rest starts.
bool split_at(const std::string& s, const std::string& sep, std::string& left, std::string& right, int& right_off) {
  std::size_t k = s.find(sep);
  if (k == std::string::npos) return false;
  left = s.substr(0, k);
  right = s.substr(k + sep.size());
  right_off = static_cast<int>(k + sep.size());
  while (!left.empty() && left.back() == ' ') left.pop_back();
  return true;
}

FreePoly to_free(const Value& v) {
  FreePoly f;
  for (const auto& [l, c] : v.terms) add_term(f, l[0], c);
  return f;
}

const char* kSections[] = {"generators", "relations", "identities", "comultiplication", "counit", "antipode", "coreps"};

}  // namespace

CqgData parse_document(const std::string& text) {
  CqgData d;
  std::vector<Symbol> symbols;
  std::map<std::string, Letter> names;
  std::vector<std::pair<std::string, std::string>> star_of;  // declared partners
  std::vector<int> gen_lines;
  std::vector<Rule> rules;
  std::vector<int> rule_lines;
  PresentationPtr bare, pres;
  std::map<Letter, std::pair<Value, int>> delta_src, counit_src, antipode_src;
  struct RawCorep {
    std::string name;
    std::size_t dim;
    int line;
    std::vector<std::pair<Value, int>> entries;
  };
  std::vector<RawCorep> coreps;
  std::vector<std::pair<Value, int>> identities;
  std::map<std::string, int> section_line;

  std::string section;
  bool named = false;
  auto finish_generators = [&](int line) {
    if (bare) return;
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      auto it = names.find(star_of[k].second);
      if (it == names.end())
        throw ParseError(ErrorKind::UndeclaredGenerator, "star partner '" + star_of[k].second + "' is not declared",
                         gen_lines[k], 1);
      symbols[k].star = it->second;
    }
    for (std::size_t k = 0; k < symbols.size(); ++k)
      if (symbols[symbols[k].star].star != static_cast<Letter>(k))
        throw ParseError(ErrorKind::Syntax, "star of '" + symbols[k].name + "' is not an involution", gen_lines[k], 1);
    bare = Presentation::create(symbols, {});
    (void)line;
  };
  auto finish_relations = [&] {
    if (pres) return;
    finish_generators(0);
    try {
      pres = Presentation::create(symbols, rules);
    } catch (const Error& e) {
      throw ParseError(e.kind(), e.what(), rule_lines.empty() ? 1 : rule_lines.back(), 1);
    }
  };
  auto value_of = [&](const Line& ln, const std::string& s, int off) {
    LineParser p(s, ln.number, ln.indent + off + 1, &names, &symbols);
    Value v = p.sum();
    p.expect_end();
    return v;
  };

  for (const Line& ln : split_lines(text)) {
    const std::string& t = ln.text;
    if (t.back() == ':') {
      std::string s = t.substr(0, t.size() - 1);
      if (std::find(std::begin(kSections), std::end(kSections), s) == std::end(kSections))
        throw ParseError(ErrorKind::Syntax, "unknown section '" + s + "'", ln.number, ln.indent + 1);
      if (section_line.count(s)) throw ParseError(ErrorKind::Syntax, "section '" + s + "' repeated", ln.number, ln.indent + 1);
      if (s != "generators") finish_generators(ln.number);
      if (s != "generators" && s != "relations") finish_relations();
      section = s;
      section_line[s] = ln.number;
      continue;
    }
    auto w = words_of(t);
    if (section.empty()) {
      if (w[0] == "name" && w.size() == 2) {
        d.name = w[1];
        named = true;
      } else if (w[0] == "param") {
        if (w.size() != 2 || w[1] != "q")
          throw ParseError(ErrorKind::Syntax, "the only parameter is q", ln.number, ln.indent + 1);
      } else {
        throw ParseError(ErrorKind::Syntax, "expected 'name', 'param' or a section", ln.number, ln.indent + 1);
      }
      continue;
    }
    if (section == "generators") {
      // gen NAME star NAME [weight N]
      if (!(w.size() == 4 || w.size() == 6) || w[0] != "gen" || w[2] != "star" || (w.size() == 6 && w[4] != "weight"))
        throw ParseError(ErrorKind::Syntax, "expected 'gen NAME star NAME [weight N]'", ln.number, ln.indent + 1);
      const std::string& n = w[1];
      bool ok = std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_';
      for (std::size_t k = 1; k < n.size(); ++k)
        ok = ok && (std::isalnum(static_cast<unsigned char>(n[k])) || n[k] == '_' || (n[k] == '*' && k + 1 == n.size()));
      if (!ok || n == "q") throw ParseError(ErrorKind::Syntax, "bad generator name '" + n + "'", ln.number, ln.indent + 5);
      if (names.count(n)) throw ParseError(ErrorKind::Syntax, "generator '" + n + "' declared twice", ln.number, ln.indent + 5);
      Symbol s;
      s.name = n;
      if (w.size() == 6) {
        try {
          s.weight = std::stoi(w[5]);
        } catch (const std::exception&) {
          throw ParseError(ErrorKind::Syntax, "bad weight", ln.number, ln.indent + 1);
        }
        if (s.weight < 1) throw ParseError(ErrorKind::Syntax, "weights are positive", ln.number, ln.indent + 1);
      }
      names[n] = static_cast<Letter>(symbols.size());
      symbols.push_back(s);
      star_of.emplace_back(n, w[3]);
      gen_lines.push_back(ln.number);
      continue;
    }
    if (section == "relations") {
      finish_generators(ln.number);
      std::string l, r;
      int off;
      if (!split_at(t, "->", l, r, off)) throw ParseError(ErrorKind::Syntax, "expected 'word -> polynomial'", ln.number, ln.indent + 1);
      Value lv = value_of(ln, l, 0);
      if (lv.terms.size() != 1 || lv.terms.begin()->first[0].empty() || !(lv.terms.begin()->second == Scalar(1)))
        throw ParseError(ErrorKind::Syntax, "left-hand side must be a single word", ln.number, ln.indent + 1);
      Value rv = value_of(ln, r, off);
      if (rv.arity != 1) throw ParseError(ErrorKind::Syntax, "tensor on a right-hand side", ln.number, ln.indent + off + 1);
      Rule rule{lv.terms.begin()->first[0], to_free(rv)};
      for (const auto& [word, c] : rule.rhs)
        if (!bare->less(word, rule.lhs))
          throw ParseError(ErrorKind::OrientationViolation,
                           "right-hand word '" + bare->word_text(word) + "' is not below '" + bare->word_text(rule.lhs) + "'",
                           ln.number, ln.indent + off - 1);
      rules.push_back(std::move(rule));
      rule_lines.push_back(ln.number);
      continue;
    }
    if (section == "identities") {
      Value v = value_of(ln, t, 0);
      if (v.arity != 1) throw ParseError(ErrorKind::Syntax, "tensor in an identity", ln.number, ln.indent + 1);
      identities.emplace_back(std::move(v), ln.number);
      continue;
    }
    if (section == "comultiplication" || section == "counit" || section == "antipode") {
      std::string l, r;
      int off;
      if (!split_at(t, "|->", l, r, off)) throw ParseError(ErrorKind::Syntax, "expected 'name |-> value'", ln.number, ln.indent + 1);
      auto it = names.find(l);
      if (it == names.end())
        throw ParseError(ErrorKind::UndeclaredGenerator, "undeclared generator '" + l + "'", ln.number, ln.indent + 1);
      auto& table = section == "comultiplication" ? delta_src : section == "counit" ? counit_src : antipode_src;
      if (table.count(it->second))
        throw ParseError(ErrorKind::Syntax, "second entry for '" + l + "'", ln.number, ln.indent + 1);
      Value v = value_of(ln, r, off);
      const int want = section == "comultiplication" ? 2 : 1;
      if (v.arity != want && !v.terms.empty())
        throw ParseError(ErrorKind::Syntax, "expected " + std::string(want == 2 ? "a two-leg tensor" : "a polynomial"),
                         ln.number, ln.indent + off + 1);
      if (section == "counit" && !v.is_scalar())
        throw ParseError(ErrorKind::Syntax, "counit values are scalars", ln.number, ln.indent + off + 1);
      v.arity = want;
      table.emplace(it->second, std::make_pair(std::move(v), ln.number));
      continue;
    }
    if (section == "coreps") {
      if (w[0] == "corep") {
        if (w.size() != 3) throw ParseError(ErrorKind::Syntax, "expected 'corep NAME DIM'", ln.number, ln.indent + 1);
        std::size_t dim = 0;
        try {
          dim = std::stoul(w[2]);
        } catch (const std::exception&) {
        }
        if (dim == 0) throw ParseError(ErrorKind::Syntax, "bad dimension", ln.number, ln.indent + 1);
        coreps.push_back({w[1], dim, ln.number, {}});
        continue;
      }
      if (w[0] != "row" || coreps.empty())
        throw ParseError(ErrorKind::Syntax, "expected 'corep' or 'row'", ln.number, ln.indent + 1);
      RawCorep& c = coreps.back();
      std::string rest = t.substr(3);
      int start = 3;
      std::size_t cells = 0;
      // split on commas at depth 0
      int depth = 0;
      std::size_t b = 0;
      for (std::size_t k = 0; k <= rest.size(); ++k) {
        if (k < rest.size() && rest[k] == '(') ++depth;
        if (k < rest.size() && rest[k] == ')') --depth;
        if (k == rest.size() || (rest[k] == ',' && depth == 0)) {
          Value v = value_of(ln, rest.substr(b, k - b), start + static_cast<int>(b));
          if (v.arity != 1) throw ParseError(ErrorKind::Syntax, "tensor in a corep entry", ln.number, ln.indent + 1);
          c.entries.emplace_back(std::move(v), ln.number);
          ++cells;
          b = k + 1;
        }
      }
      if (cells != c.dim)
        throw ParseError(ErrorKind::Syntax, "row has " + std::to_string(cells) + " entries, expected " + std::to_string(c.dim),
                         ln.number, ln.indent + 1);
      if (c.entries.size() > c.dim * c.dim) throw ParseError(ErrorKind::Syntax, "too many rows", ln.number, ln.indent + 1);
      continue;
    }
  }
  if (!named) throw ParseError(ErrorKind::Syntax, "missing 'name' line", 1, 1);
  finish_generators(0);
  finish_relations();

  const int n = static_cast<int>(symbols.size());
  d.pres = pres;
  d.delta.assign(n, std::nullopt);
  d.counit.assign(n, std::nullopt);
  d.antipode.assign(n, std::nullopt);
  for (const auto& [x, src] : delta_src) {
    TensorPoly t(pres, 2);
    for (const auto& [legs, c] : src.first.terms)
      t += TensorPoly::elementary({NcPoly::word(pres, legs[0]), NcPoly::word(pres, legs[1])}).scaled(c);
    d.delta[x] = t;
  }
  for (const auto& [x, src] : counit_src) d.counit[x] = src.first.scalar_value();
  for (const auto& [x, src] : antipode_src) d.antipode[x] = NcPoly::from_free(pres, to_free(src.first));
  auto last_line = [&](const char* s) { return section_line.count(s) ? section_line.at(s) : 1; };
  for (int x = 0; x < n; ++x) {
    const Letter s = symbols[x].star;
    if (!d.delta[x] && !d.delta[s])
      throw ParseError(ErrorKind::IncompleteTable, "no comultiplication for '" + symbols[x].name + "'",
                       last_line("comultiplication"), 1);
    if (!d.counit[x] && !d.counit[s])
      throw ParseError(ErrorKind::IncompleteTable, "no counit for '" + symbols[x].name + "'", last_line("counit"), 1);
    if (!d.antipode[x])
      throw ParseError(ErrorKind::IncompleteTable, "no antipode for '" + symbols[x].name + "'", last_line("antipode"), 1);
  }
  for (const auto& [v, line] : identities) d.relations.push_back(to_free(v));
  for (const auto& rc : coreps) {
    if (rc.entries.size() != rc.dim * rc.dim)
      throw ParseError(ErrorKind::IncompleteTable, "corep " + rc.name + " has missing rows", rc.line, 1);
    CorepSpec cs;
    cs.name = rc.name;
    cs.dim = rc.dim;
    for (const auto& [v, line] : rc.entries) cs.entries.push_back(NcPoly::from_free(pres, to_free(v)));
    d.coreps.push_back(std::move(cs));
  }
  return d;
}

AlgebraPtr parse(const std::string& text) { return CqgAlgebra::create(parse_document(text)); }

AlgebraPtr load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Syntax, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return parse(s.str());
}

NcPoly parse_polynomial(const PresentationPtr& pres, const std::string& text) {
  std::map<std::string, Letter> names;
  for (std::size_t k = 0; k < pres->num_symbols(); ++k) names[pres->symbols()[k].name] = static_cast<Letter>(k);
  LineParser p(text, 1, 1, &names, &pres->symbols());
  Value v = p.sum();
  p.expect_end();
  if (v.arity != 1) throw ParseError(ErrorKind::Syntax, "expected a polynomial, not a tensor", 1, 1);
  return NcPoly::from_free(pres, to_free(v));
}

std::string serialize(const CqgAlgebra& alg) {
  const auto& pres = alg.pres();
  const auto& sy = pres->symbols();
  std::ostringstream o;
  o << "name " << alg.name() << "\nparam q\n";
  o << "generators:\n";
  for (const auto& s : sy) {
    o << "  gen " << s.name << " star " << sy[s.star].name;
    if (s.weight != 1) o << " weight " << s.weight;
    o << "\n";
  }
  o << "relations:\n";
  std::vector<FreePoly> from_rules;
  for (const auto& r : pres->rules()) {
    o << "  " << pres->word_text(r.lhs) << " -> " << NcPoly::from_normal(pres, r.rhs).to_string() << "\n";
    FreePoly rel{{r.lhs, Scalar(1)}};
    for (const auto& [w, c] : r.rhs) add_term(rel, w, -c);
    from_rules.push_back(std::move(rel));
  }
  if (alg.relations() != from_rules) {
    o << "identities:\n";
    for (const auto& rel : alg.relations()) o << "  " << NcPoly::from_normal(pres, rel).to_string() << "\n";
  }
  o << "comultiplication:\n";
  for (std::size_t x = 0; x < sy.size(); ++x) o << "  " << sy[x].name << " |-> " << alg.delta_table()[x].to_string() << "\n";
  o << "counit:\n";
  for (std::size_t x = 0; x < sy.size(); ++x) o << "  " << sy[x].name << " |-> " << alg.counit_table()[x].to_string() << "\n";
  o << "antipode:\n";
  for (std::size_t x = 0; x < sy.size(); ++x) o << "  " << sy[x].name << " |-> " << alg.antipode_table()[x].to_string() << "\n";
  o << "coreps:\n";
  for (const auto& c : alg.coreps()) {
    o << "  corep " << c.name << " " << c.dim << "\n";
    for (std::size_t p = 0; p < c.dim; ++p) {
      o << "    row ";
      for (std::size_t q = 0; q < c.dim; ++q) o << (q ? ", " : "") << c.at(p, q).to_string();
      o << "\n";
    }
  }
  return o.str();
}

}  // namespace cqg::dsl
