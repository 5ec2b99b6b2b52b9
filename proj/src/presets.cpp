#include "cqg/presets.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "cqg/error.hpp"

namespace cqg {

namespace {

FreePoly star_image(const std::vector<Symbol>& symbols, const FreePoly& p) {
  FreePoly out;
  for (const auto& [w, c] : p) {
    Word s(w.rbegin(), w.rend());
    for (auto& x : s) x = symbols[x].star;
    add_term(out, s, c.conj());
  }
  return out;
}

int level_of(const FreePoly& p) {
  int l = 0;
  for (const auto& [w, c] : p) l = std::max(l, static_cast<int>(w.size()));
  return l;
}

// Gauss-Jordan on relations whose columns are words, largest word first.
std::vector<Rule> rref_rules(const Presentation& pres, const std::vector<FreePoly>& rels) {
  std::set<Word> all;
  for (const auto& r : rels)
    for (const auto& [w, c] : r) all.insert(w);
  std::vector<Word> cols(all.begin(), all.end());
  std::sort(cols.begin(), cols.end(), [&](const Word& a, const Word& b) { return pres.less(b, a); });
  std::map<Word, std::size_t> col_of;
  for (std::size_t k = 0; k < cols.size(); ++k) col_of[cols[k]] = k;

  using Row = std::map<std::size_t, Scalar>;
  std::map<std::size_t, Row> pivots;  // pivot column -> row with leading 1
  auto axpy = [](Row& r, const Row& s, const Scalar& f) {
    for (const auto& [c, v] : s) {
      auto [it, ins] = r.try_emplace(c, -(f * v));
      if (!ins) {
        it->second -= f * v;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  };
  for (const auto& rel : rels) {
    Row row;
    for (const auto& [w, c] : rel) row[col_of[w]] = c;
    for (auto it = row.begin(); it != row.end();) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      Scalar f = it->second;
      std::size_t key = it->first;
      axpy(row, p->second, f);
      it = row.upper_bound(key);
    }
    if (row.empty()) continue;
    const std::size_t lead = row.begin()->first;
    const Scalar inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) v *= inv;
    for (auto& [pc, prow] : pivots) {
      auto it = prow.find(lead);
      if (it != prow.end()) {
        Scalar f = it->second;
        axpy(prow, row, f);
      }
    }
    pivots.emplace(lead, std::move(row));
  }
  std::vector<Rule> out;
  for (const auto& [pc, row] : pivots) {
    Rule r;
    r.lhs = cols[pc];
    for (const auto& [c, v] : row)
      if (c != pc) add_term(r.rhs, cols[c], -v);
    out.push_back(std::move(r));
  }
  return out;
}

FreePoly word_poly(const Word& w, const Scalar& c = Scalar(1)) {
  FreePoly p;
  add_term(p, w, c);
  return p;
}

void add_into(FreePoly& p, const FreePoly& o, const Scalar& f = Scalar(1)) {
  for (const auto& [w, c] : o) add_term(p, w, f * c);
}

long inversions(const std::vector<int>& k) {
  long inv = 0;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j)
      if (k[i] > k[j]) ++inv;
  return inv;
}

Scalar minus_q_power(long k) { return (k % 2 == 0 ? Scalar(1) : Scalar(-1)) * Scalar::q_power(k); }

// u{p}{q} and stars: letter p*n+q, star n*n + p*n+q.
std::vector<Symbol> matrix_symbols(int n) {
  std::vector<Symbol> s(2 * n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const int id = p * n + q, sid = n * n + id;
      const std::string nm = "u" + std::to_string(p + 1) + std::to_string(q + 1);
      s[id] = Symbol{nm, static_cast<Letter>(sid), 1};
      s[sid] = Symbol{nm + "*", static_cast<Letter>(id), 1};
    }
  return s;
}

// Sum over permutations s of (-q)^inv(s) u_{r_1 c_s1} ... u_{r_m c_sm}.
FreePoly quantum_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols) {
  FreePoly out;
  std::vector<int> perm(cols.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
  do {
    Word w;
    for (std::size_t k = 0; k < rows.size(); ++k) w.push_back(static_cast<Letter>(rows[k] * n + cols[perm[k]]));
    add_term(out, w, minus_q_power(inversions(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<FreePoly> unitarity_relations(int n) {
  // u u* = 1 and u* u = 1
  std::vector<FreePoly> rels;
  const Letter nn = static_cast<Letter>(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FreePoly a, b;
      for (int k = 0; k < n; ++k) {
        add_term(a, Word{static_cast<Letter>(i * n + k), static_cast<Letter>(nn + j * n + k)}, Scalar(1));
        add_term(b, Word{static_cast<Letter>(nn + k * n + i), static_cast<Letter>(k * n + j)}, Scalar(1));
      }
      if (i == j) {
        add_term(a, Word(), Scalar(-1));
        add_term(b, Word(), Scalar(-1));
      }
      rels.push_back(std::move(a));
      rels.push_back(std::move(b));
    }
  return rels;
}

TensorPoly matrix_delta(const PresentationPtr& pres, int n, int p, int q) {
  TensorPoly t(pres, 2);
  for (int k = 0; k < n; ++k) t.add({Word(1, static_cast<Letter>(p * n + k)), Word(1, static_cast<Letter>(k * n + q))}, Scalar(1));
  return t;
}

CorepSpec matrix_corep(const PresentationPtr& pres, int n) {
  CorepSpec c;
  c.name = "u";
  c.dim = n;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) c.entries.push_back(NcPoly::generator(pres, static_cast<Letter>(p * n + q)));
  return c;
}

}  // namespace

std::vector<Rule> orient_relations(const std::vector<Symbol>& symbols, const std::vector<FreePoly>& relations) {
  std::map<int, std::vector<FreePoly>> by_level;
  for (const auto& r : relations) {
    if (r.empty()) continue;
    by_level[level_of(r)].push_back(r);
    by_level[level_of(r)].push_back(star_image(symbols, r));
  }
  std::vector<Rule> rules;
  for (auto& [level, rels] : by_level) {
    for (;;) {
      PresentationPtr p = Presentation::create(symbols, rules);
      std::vector<FreePoly> reduced;
      for (const auto& r : rels) {
        FreePoly nf = p->normalize(r);
        if (!nf.empty()) reduced.push_back(std::move(nf));
      }
      std::vector<Rule> fresh = rref_rules(*p, reduced);
      // A rule that dropped below this level may rewrite words of its
      // siblings; take it on its own and redo the level.
      std::vector<Rule> shorter;
      for (const auto& r : fresh)
        if (static_cast<int>(r.lhs.size()) < level) shorter.push_back(r);
      if (shorter.empty() || shorter.size() == fresh.size()) {
        for (auto& r : fresh) rules.push_back(std::move(r));
        break;
      }
      for (auto& r : shorter) rules.push_back(std::move(r));
    }
  }
  return rules;
}

AlgebraPtr su_q_2() {
  const Letter a = 0, as = 1, g = 2, gs = 3;
  std::vector<Symbol> syms{{"a", as, 2}, {"a*", a, 2}, {"g", gs, 1}, {"g*", g, 1}};
  const Scalar q = Scalar::q(), qi = Scalar::q_power(-1);
  std::vector<Rule> rules{
      {Word{g, a}, word_poly(Word{a, g}, qi)},
      {Word{gs, a}, word_poly(Word{a, gs}, qi)},
      {Word{g, as}, word_poly(Word{as, g}, q)},
      {Word{gs, as}, word_poly(Word{as, gs}, q)},
      {Word{gs, g}, word_poly(Word{g, gs})},
  };
  FreePoly r1{{Word(), Scalar(1)}}, r2{{Word(), Scalar(1)}};
  add_term(r1, Word{g, gs}, Scalar(-1));
  add_term(r2, Word{g, gs}, -(q * q));
  rules.push_back({Word{as, a}, r1});
  rules.push_back({Word{a, as}, r2});
  PresentationPtr pres = Presentation::create(syms, rules);

  CqgData d;
  d.name = "su_q_2";
  d.pres = pres;
  d.delta.resize(4);
  d.counit.resize(4);
  d.antipode.resize(4);
  auto G = [&](Letter x) { return NcPoly::generator(pres, x); };
  d.delta[a] = TensorPoly::elementary({G(a), G(a)}) - TensorPoly::elementary({G(gs), G(g)}).scaled(q);
  d.delta[g] = TensorPoly::elementary({G(g), G(a)}) + TensorPoly::elementary({G(as), G(g)});
  d.counit[a] = Scalar(1);
  d.counit[g] = Scalar(0);
  d.antipode[a] = G(as);
  d.antipode[as] = G(a);
  d.antipode[g] = G(g).scaled(-q);
  d.antipode[gs] = G(gs).scaled(-qi);
  CorepSpec u;
  u.name = "u";
  u.dim = 2;
  u.entries = {G(a), G(gs).scaled(-q), G(g), G(as)};
  d.coreps.push_back(std::move(u));
  return CqgAlgebra::create(std::move(d));
}

Scalar quantum_determinant_coefficient(const std::vector<int>& k) {
  std::vector<int> s = k;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i) + 1) return Scalar(0);
  return minus_q_power(inversions(k));
}

AlgebraPtr su_q_n(int n) {
  if (n < 2 || n > 9) throw Error(ErrorKind::Internal, "su_q_n needs 2 <= n <= 9");
  auto syms = matrix_symbols(n);
  std::vector<FreePoly> rels = unitarity_relations(n);

  // determinant relations, rows and columns
  std::vector<int> l(n, 0);
  std::vector<int> perm(n);
  for (;;) {
    std::vector<int> l1(n);
    for (int k = 0; k < n; ++k) l1[k] = l[k] + 1;
    const Scalar el = quantum_determinant_coefficient(l1);
    FreePoly byrow, bycol;
    for (int k = 0; k < n; ++k) perm[k] = k;
    do {
      Word wr, wc;
      for (int t = 0; t < n; ++t) {
        wr.push_back(static_cast<Letter>(l[t] * n + perm[t]));
        wc.push_back(static_cast<Letter>(perm[t] * n + l[t]));
      }
      const Scalar e = minus_q_power(inversions(perm));
      add_term(byrow, wr, e);
      add_term(bycol, wc, e);
    } while (std::next_permutation(perm.begin(), perm.end()));
    add_term(byrow, Word(), -el);
    add_term(bycol, Word(), -el);
    rels.push_back(std::move(byrow));
    rels.push_back(std::move(bycol));
    int t = n - 1;
    while (t >= 0 && ++l[t] == n) l[t--] = 0;
    if (t < 0) break;
  }

  // Defining relations stop here. The cofactor identities below are
  // consequences; they go into the rewriting system but Delta is only
  // checked against the defining ones.
  std::vector<FreePoly> all = rels;
  // cofactors: u_qp^* = (-q)^{p-q} det_q(u without row q and column p)
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n; ++k) {
        if (k != q) rows.push_back(k);
        if (k != p) cols.push_back(k);
      }
      FreePoly rel = word_poly(Word(1, static_cast<Letter>(n * n + q * n + p)));
      add_into(rel, quantum_minor(n, rows, cols), -minus_q_power(p - q));
      all.push_back(std::move(rel));
    }

  PresentationPtr pres = Presentation::create(syms, orient_relations(syms, all));
  CqgData d;
  d.name = "su_q_" + std::to_string(n);
  d.pres = pres;
  const std::size_t ns = syms.size();
  d.delta.resize(ns);
  d.counit.resize(ns);
  d.antipode.resize(ns);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const int id = p * n + q;
      d.delta[id] = matrix_delta(pres, n, p, q);
      d.counit[id] = Scalar(p == q ? 1 : 0);
      d.antipode[id] = NcPoly::generator(pres, static_cast<Letter>(n * n + q * n + p));
      d.antipode[n * n + id] = NcPoly::generator(pres, static_cast<Letter>(q * n + p)).scaled(Scalar::q_power(2 * (q - p)));
    }
  d.relations = std::move(rels);
  d.coreps.push_back(matrix_corep(pres, n));
  return CqgAlgebra::create(std::move(d));
}

AlgebraPtr a_u(const ScalarMatrix& qm) {
  const int n = static_cast<int>(qm.rows());
  if (n < 1 || qm.cols() != qm.rows() || n > 9) throw Error(ErrorKind::SingularMatrix, "Q must be square of size 1..9");
  auto qinv = inverse(qm);
  if (!qinv) throw Error(ErrorKind::SingularMatrix, "Q is not invertible");
  auto syms = matrix_symbols(n);
  std::vector<FreePoly> rels = unitarity_relations(n);
  const int nn = n * n;
  auto U = [&](int p, int q) { return static_cast<Letter>(p * n + q); };
  auto Ub = [&](int p, int q) { return static_cast<Letter>(nn + p * n + q); };
  // u^t Q ubar Q^-1 = 1 and Q ubar Q^-1 u^t = 1
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FreePoly a, b;
      for (int k = 0; k < n; ++k)
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t) {
            // (u^t)_{ik} Q_{ks} ubar_{st} Qinv_{tj}
            add_term(a, Word{U(k, i), Ub(s, t)}, qm(k, s) * (*qinv)(t, j));
            // Q_{ik} ubar_{ks} Qinv_{st} (u^t)_{tj}
            add_term(b, Word{Ub(k, s), U(j, t)}, qm(i, k) * (*qinv)(s, t));
          }
      if (i == j) {
        add_term(a, Word(), Scalar(-1));
        add_term(b, Word(), Scalar(-1));
      }
      rels.push_back(std::move(a));
      rels.push_back(std::move(b));
    }
  PresentationPtr pres = Presentation::create(syms, orient_relations(syms, rels));
  CqgData d;
  d.name = "a_u_" + std::to_string(n);
  d.pres = pres;
  d.delta.resize(2 * nn);
  d.counit.resize(2 * nn);
  d.antipode.resize(2 * nn);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      d.delta[U(p, q)] = matrix_delta(pres, n, p, q);
      d.counit[U(p, q)] = Scalar(p == q ? 1 : 0);
      d.antipode[U(p, q)] = NcPoly::generator(pres, Ub(q, p));
      // (Q^-1 u^t Q)_pq
      NcPoly k(pres);
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) k += NcPoly::generator(pres, U(t, s)).scaled((*qinv)(p, s) * qm(t, q));
      d.antipode[Ub(p, q)] = k;
    }
  d.relations = std::move(rels);
  d.coreps.push_back(matrix_corep(pres, n));
  return CqgAlgebra::create(std::move(d));
}

// ---------------------------------------------------------------- finite groups

CayleyTable make_group(std::vector<std::string> names, std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty group");
  if (static_cast<int>(table.size()) != n) throw Error(ErrorKind::NotAGroup, "table has the wrong number of rows");
  std::set<std::string> seen(names.begin(), names.end());
  if (static_cast<int>(seen.size()) != n) throw Error(ErrorKind::NotAGroup, "duplicate element names");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::NotAGroup, "table row has the wrong length");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(ErrorKind::NotAGroup, "table is not closed");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NotAGroup, "not associative at (" + names[a] + ", " + names[b] + ", " + names[c] + ")");
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) ok = table[x][y] == y && table[y][x] == y;
    if (ok) e = x;
  }
  if (e < 0) throw Error(ErrorKind::NotAGroup, "no identity element");
  CayleyTable g;
  g.identity = e;
  g.inverse.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (table[x][y] == e && table[y][x] == e) g.inverse[x] = y;
    if (g.inverse[x] < 0) throw Error(ErrorKind::NotAGroup, "'" + names[x] + "' has no inverse");
  }
  g.names = std::move(names);
  g.table = std::move(table);
  return g;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) {
    auto b = cell.find_first_not_of(" \t\r");
    auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

CayleyTable parse_cayley_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty() || rows[0].size() < 2) throw Error(ErrorKind::NotAGroup, "missing header row");
  std::vector<std::string> names(rows[0].begin() + 1, rows[0].end());
  std::map<std::string, int> idx;
  for (std::size_t k = 0; k < names.size(); ++k) idx[names[k]] = static_cast<int>(k);
  if (rows.size() != names.size() + 1) throw Error(ErrorKind::NotAGroup, "table has the wrong number of rows");
  std::vector<std::vector<int>> table(names.size());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != names.size() + 1) throw Error(ErrorKind::NotAGroup, "row " + std::to_string(r) + " has the wrong length");
    auto it = idx.find(row[0]);
    if (it == idx.end()) throw Error(ErrorKind::NotAGroup, "unknown row label '" + row[0] + "'");
    if (!table[it->second].empty()) throw Error(ErrorKind::NotAGroup, "row '" + row[0] + "' repeated");
    for (std::size_t c = 1; c < row.size(); ++c) {
      auto v = idx.find(row[c]);
      if (v == idx.end()) throw Error(ErrorKind::NotAGroup, "table is not closed: '" + row[c] + "'");
      table[it->second].push_back(v->second);
    }
  }
  return make_group(std::move(names), std::move(table));
}

std::string cayley_to_csv(const CayleyTable& g) {
  std::string s = "*";
  for (const auto& n : g.names) s += "," + n;
  s += "\n";
  for (std::size_t a = 0; a < g.names.size(); ++a) {
    s += g.names[a];
    for (int v : g.table[a]) s += "," + g.names[v];
    s += "\n";
  }
  return s;
}

MatrixGroup generate_matrix_group(const std::vector<std::pair<std::string, ScalarMatrix>>& generators) {
  if (generators.empty()) throw Error(ErrorKind::NotAGroup, "no generators");
  const std::size_t d = generators[0].second.rows();
  MatrixGroup mg;
  std::vector<std::string> names{"e"};
  std::vector<ScalarMatrix>& el = mg.elements;
  el.push_back(ScalarMatrix::identity(d));
  auto find = [&](const ScalarMatrix& m) -> int {
    for (std::size_t k = 0; k < el.size(); ++k)
      if (el[k] == m) return static_cast<int>(k);
    return -1;
  };
  for (std::size_t head = 0; head < el.size(); ++head) {
    for (const auto& [gn, gm] : generators) {
      ScalarMatrix m = el[head] * gm;
      if (find(m) >= 0) continue;
      if (el.size() >= 512) throw Error(ErrorKind::NotAGroup, "generated group is too large");
      names.push_back(head == 0 ? gn : names[head] + gn);
      el.push_back(std::move(m));
    }
  }
  const std::size_t n = el.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int k = find(el[a] * el[b]);
      if (k < 0) throw Error(ErrorKind::NotAGroup, "products leave the generated set");
      table[a][b] = k;
    }
  mg.group = make_group(std::move(names), std::move(table));
  return mg;
}

std::vector<std::string> finite_group_names() { return {"z2", "z4", "s3", "d4", "q8"}; }

MatrixGroup finite_group(const std::string& name) {
  auto mat = [](std::vector<std::vector<Scalar>> rows) {
    ScalarMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
  };
  const Scalar I = Scalar::i();
  if (name == "z2") return generate_matrix_group({{"a", mat({{-1}})}});
  if (name == "z4") return generate_matrix_group({{"a", mat({{I}})}});
  if (name == "s3") return generate_matrix_group({{"r", mat({{0, -1}, {1, -1}})}, {"s", mat({{0, 1}, {1, 0}})}});
  if (name == "d4") return generate_matrix_group({{"r", mat({{0, -1}, {1, 0}})}, {"s", mat({{1, 0}, {0, -1}})}});
  if (name == "q8") return generate_matrix_group({{"i", mat({{I, 0}, {0, -I}})}, {"j", mat({{0, 1}, {-1, 0}})}});
  throw Error(ErrorKind::NotInRegistry, "unknown finite group '" + name + "'");
}

namespace {

void require_checks(const FiniteAlgebra& fa) {
  Report r = check_finite_algebra(fa);
  if (!r.passed())
    throw Error(ErrorKind::CheckFailed, fa.name + ": " + r.failures[0].axiom + " fails at " + r.failures[0].monomial);
}

}  // namespace

FiniteQuantumGroup c_of_group(const CayleyTable& g, const std::vector<ScalarMatrix>* rep, const std::string& name) {
  const std::size_t n = g.names.size();
  FiniteQuantumGroup out;
  FiniteAlgebra& fa = out.fa;
  fa.name = name.empty() ? "c_group" : name;
  fa.dim = n;
  for (const auto& nm : g.names) fa.basis_names.push_back("d_" + nm);
  fa.mult.assign(n, std::vector<SparseVec>(n));
  fa.star.resize(n);
  fa.delta.resize(n);
  fa.counit.resize(n);
  fa.antipode.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    fa.mult[a][a] = SparseVec{{a, Scalar(1)}};
    fa.star[a] = SparseVec{{a, Scalar(1)}};
    fa.unit[a] = Scalar(1);
    fa.counit[a] = Scalar(static_cast<int>(a) == g.identity ? 1 : 0);
    fa.antipode[a] = SparseVec{{static_cast<std::size_t>(g.inverse[a]), Scalar(1)}};
  }
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k) fa.delta[g.table[h][k]][{h, k}] = Scalar(1);
  require_checks(fa);
  fa.haar = finite_haar(fa);

  // view: d_last -> 1 - sum of the others, d_g d_h -> [g = h] d_g
  const std::size_t last = n - 1;
  std::vector<Symbol> syms;
  for (std::size_t a = 0; a < n; ++a) syms.push_back({fa.basis_names[a], static_cast<Letter>(a), 1});
  std::vector<Rule> rules;
  if (n > 1) {
    FreePoly r{{Word(), Scalar(1)}};
    for (std::size_t a = 0; a < last; ++a) add_term(r, Word(1, static_cast<Letter>(a)), Scalar(-1));
    rules.push_back({Word(1, static_cast<Letter>(last)), r});
    for (std::size_t a = 0; a < last; ++a)
      for (std::size_t b = 0; b < last; ++b) {
        FreePoly rhs;
        if (a == b) add_term(rhs, Word(1, static_cast<Letter>(a)), Scalar(1));
        rules.push_back({Word{static_cast<Letter>(a), static_cast<Letter>(b)}, rhs});
      }
  } else {
    rules.push_back({Word(1, Letter(0)), FreePoly{{Word(), Scalar(1)}}});
  }
  PresentationPtr pres = Presentation::create(syms, rules);
  for (std::size_t a = 0; a < n; ++a) out.basis_in_view.push_back(NcPoly::generator(pres, static_cast<Letter>(a)));

  CqgData d;
  d.name = fa.name;
  d.pres = pres;
  d.delta.resize(n);
  d.counit.resize(n);
  d.antipode.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    TensorPoly t(pres, 2);
    for (const auto& [k, c] : fa.delta[a])
      t += TensorPoly::elementary({out.basis_in_view[k.first], out.basis_in_view[k.second]}).scaled(c);
    d.delta[a] = t;
    d.counit[a] = fa.counit[a];
    d.antipode[a] = out.to_view(fa.antipode[a]);
  }
  if (rep) {
    if (rep->size() != n) throw Error(ErrorKind::Internal, "representation has the wrong number of matrices");
    const std::size_t dim = (*rep)[0].rows();
    CorepSpec u;
    u.name = "u";
    u.dim = dim;
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q) {
        NcPoly e(pres);
        for (std::size_t a = 0; a < n; ++a) e += out.basis_in_view[a].scaled((*rep)[a](p, q));
        u.entries.push_back(std::move(e));
      }
    d.coreps.push_back(std::move(u));
  }
  out.view = CqgAlgebra::create(std::move(d));
  return out;
}

FiniteQuantumGroup group_algebra(const CayleyTable& g, const std::string& name) {
  const std::size_t n = g.names.size();
  const std::size_t e = static_cast<std::size_t>(g.identity);
  FiniteQuantumGroup out;
  FiniteAlgebra& fa = out.fa;
  fa.name = name.empty() ? "group_algebra" : name;
  fa.dim = n;
  fa.basis_names = g.names;
  fa.mult.assign(n, std::vector<SparseVec>(n));
  fa.star.resize(n);
  fa.delta.resize(n);
  fa.counit.assign(n, Scalar(1));
  fa.antipode.resize(n);
  fa.unit[e] = Scalar(1);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t inv = static_cast<std::size_t>(g.inverse[a]);
    for (std::size_t b = 0; b < n; ++b) fa.mult[a][b] = SparseVec{{static_cast<std::size_t>(g.table[a][b]), Scalar(1)}};
    fa.star[a] = SparseVec{{inv, Scalar(1)}};
    fa.antipode[a] = SparseVec{{inv, Scalar(1)}};
    fa.delta[a][{a, a}] = Scalar(1);
  }
  require_checks(fa);
  fa.haar = finite_haar(fa);

  // view letters: the non-identity elements, star = inverse
  std::vector<int> letter(n, -1);
  std::vector<std::size_t> elem;
  for (std::size_t a = 0; a < n; ++a)
    if (a != e) {
      letter[a] = static_cast<int>(elem.size());
      elem.push_back(a);
    }
  std::vector<Symbol> syms;
  for (std::size_t a : elem) syms.push_back({g.names[a], static_cast<Letter>(letter[g.inverse[a]]), 1});
  std::vector<Rule> rules;
  for (std::size_t a : elem)
    for (std::size_t b : elem) {
      const std::size_t c = static_cast<std::size_t>(g.table[a][b]);
      FreePoly rhs;
      add_term(rhs, c == e ? Word() : Word(1, static_cast<Letter>(letter[c])), Scalar(1));
      rules.push_back({Word{static_cast<Letter>(letter[a]), static_cast<Letter>(letter[b])}, rhs});
    }
  PresentationPtr pres = Presentation::create(syms, rules);
  for (std::size_t a = 0; a < n; ++a)
    out.basis_in_view.push_back(a == e ? NcPoly(pres, Scalar(1)) : NcPoly::generator(pres, static_cast<Letter>(letter[a])));

  CqgData d;
  d.name = fa.name;
  d.pres = pres;
  d.delta.resize(elem.size());
  d.counit.resize(elem.size());
  d.antipode.resize(elem.size());
  for (std::size_t a : elem) {
    const NcPoly x = out.basis_in_view[a];
    d.delta[letter[a]] = TensorPoly::elementary({x, x});
    d.counit[letter[a]] = Scalar(1);
    d.antipode[letter[a]] = out.basis_in_view[g.inverse[a]];
    d.coreps.push_back(CorepSpec{g.names[a], 1, {x}});
  }
  out.view = CqgAlgebra::create(std::move(d));
  return out;
}

// ---------------------------------------------------------------- registry

std::vector<std::string> preset_names() {
  std::vector<std::string> v{"su_q_2", "su_q_3", "a_u_2"};
  for (const auto& g : finite_group_names()) v.push_back("c_" + g);
  for (const auto& g : finite_group_names()) v.push_back("cg_" + g);
  return v;
}

bool is_finite_preset(const std::string& name) {
  return name.rfind("c_", 0) == 0 || name.rfind("cg_", 0) == 0;
}

FiniteQuantumGroup load_finite_preset(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, FiniteQuantumGroup> cache;
  if (!is_finite_preset(name)) throw Error(ErrorKind::NotInRegistry, "'" + name + "' is not a finite preset");
  std::lock_guard lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const bool dual = name.rfind("cg_", 0) == 0;
  const std::string gname = name.substr(dual ? 3 : 2);
  MatrixGroup mg = finite_group(gname);
  FiniteQuantumGroup fq = dual ? group_algebra(mg.group, name) : c_of_group(mg.group, &mg.elements, name);
  return cache.emplace(name, std::move(fq)).first->second;
}

AlgebraPtr load_preset(const std::string& name) {
  if (is_finite_preset(name)) return load_finite_preset(name).view;
  static std::mutex mu;
  static std::map<std::string, AlgebraPtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  AlgebraPtr a;
  if (name == "su_q_2") a = su_q_2();
  else if (name == "su_q_3") a = su_q_n(3);
  else if (name == "a_u_2") a = a_u(ScalarMatrix::identity(2));
  else throw Error(ErrorKind::NotInRegistry, "unknown preset '" + name + "'");
  cache.emplace(name, a);
  return a;
}

}  // namespace cqg
