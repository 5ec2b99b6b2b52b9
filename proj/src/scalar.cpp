#include "cqg/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

#include "cqg/error.hpp"

namespace cqg {

// ---------------------------------------------------------------- GaussRational

GaussRational GaussRational::inverse() const {
  mpq_class n = norm();
  if (sgn(n) == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return GaussRational(re_ / n, -im_ / n);
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

namespace {

std::string rational_text(const mpq_class& v) { return v.get_str(); }

}  // namespace

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return rational_text(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_text(im_) + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + rational_text(re_);
  if (sgn(im_) < 0) {
    out += " - " + (im_ == -1 ? std::string("i") : rational_text(-im_) + "*i");
  } else {
    out += " + " + imag;
  }
  return out + ")";
}

// ---------------------------------------------------------------- QPoly

QPoly QPoly::monomial(GaussRational c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<GaussRational> v(degree + 1);
  v[degree] = std::move(c);
  return QPoly(std::move(v));
}

std::size_t QPoly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return 0;
}

QPoly QPoly::conj() const {
  std::vector<GaussRational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.conj());
  return QPoly(std::move(v));
}

QPoly QPoly::scaled(const GaussRational& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  std::vector<GaussRational> v;
  v.reserve(coeffs_.size());
  for (const auto& x : coeffs_) v.push_back(x * c);
  return QPoly(std::move(v));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<GaussRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] = a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<GaussRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] = a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] -= b.coeffs_[k];
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<GaussRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly(std::move(v));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<GaussRational> r = a.coeffs_;
  const long db = b.degree();
  if (a.degree() < db) {
    quot = {};
    rem = a;
    return;
  }
  std::vector<GaussRational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const GaussRational inv_lead = b.leading().inverse();
  for (long k = a.degree(); k >= db; --k) {
    const auto& top = r[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    GaussRational f = top * inv_lead;
    const auto shift = static_cast<std::size_t>(k - db);
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[shift + j] -= f * b.coeffs_[j];
    q[shift] = std::move(f);
  }
  quot = QPoly(std::move(q));
  rem = QPoly(std::move(r));
}

QPoly QPoly::exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_one()) return a;
  QPoly q, r;
  divmod(a, b, q, r);
  return q;
}

namespace {

// Gaussian integers and primitive pseudo-remainder sequences. Plain Euclid
// over Q(i) swells coefficients badly; clearing denominators and dividing
// out the Z[i]-content after every step keeps them near the true size.
struct GInt {
  mpz_class re, im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GInt gmul(const GInt& a, const GInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GInt gsub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  // nearest integer to n/d, d > 0
  mpz_class t = 2 * n + d;
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), mpz_class(2 * d).get_mpz_t());
  return r;
}

GInt gquot_round(const GInt& a, const GInt& b) {
  mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class xr = a.re * b.re + a.im * b.im;
  mpz_class xi = a.im * b.re - a.re * b.im;
  return {round_div(xr, n), round_div(xi, n)};
}

GInt gexact_div(const GInt& a, const GInt& b) {
  mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class xr = a.re * b.re + a.im * b.im;
  mpz_class xi = a.im * b.re - a.re * b.im;
  GInt out;
  mpz_divexact(out.re.get_mpz_t(), xr.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(out.im.get_mpz_t(), xi.get_mpz_t(), n.get_mpz_t());
  return out;
}

GInt ggcd(GInt a, GInt b) {
  while (!b.is_zero()) {
    GInt r = gsub(a, gmul(b, gquot_round(a, b)));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

using GPoly = std::vector<GInt>;  // ascending, no trailing zeros

void gtrim(GPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

GPoly to_gpoly(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  GPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpq_class r = c.re() * l, i = c.im() * l;
    out.push_back({r.get_num(), i.get_num()});
  }
  return out;
}

void make_primitive(GPoly& p) {
  if (p.empty()) return;
  // integer content first (cheap), then the Gaussian part
  mpz_class z = 0;
  for (const auto& c : p) {
    mpz_gcd(z.get_mpz_t(), z.get_mpz_t(), c.re.get_mpz_t());
    mpz_gcd(z.get_mpz_t(), z.get_mpz_t(), c.im.get_mpz_t());
  }
  if (z > 1)
    for (auto& c : p) {
      mpz_divexact(c.re.get_mpz_t(), c.re.get_mpz_t(), z.get_mpz_t());
      mpz_divexact(c.im.get_mpz_t(), c.im.get_mpz_t(), z.get_mpz_t());
    }
  GInt g = p.back();
  for (const auto& c : p) {
    g = ggcd(g, c);
    if (abs(g.re) + abs(g.im) == 1) return;  // unit
  }
  if (abs(g.re) + abs(g.im) == 1 && (sgn(g.re) == 0 || sgn(g.im) == 0)) return;
  for (auto& c : p) c = gexact_div(c, g);
}

// pseudo-remainder of a by b (deg a >= deg b >= 0)
GPoly prem(GPoly a, const GPoly& b) {
  const std::size_t db = b.size() - 1;
  const GInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    GInt la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = gmul(c, lb);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = gsub(a[shift + j], gmul(la, b[j]));
    gtrim(a);
  }
  return a;
}

}  // namespace

QPoly QPoly::gcd(QPoly a, QPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return QPoly(GaussRational(1));
  // common power of q splits off for free
  std::size_t v = std::min(a.valuation(), b.valuation());
  GPoly x = to_gpoly(a), y = to_gpoly(b);
  x.erase(x.begin(), x.begin() + static_cast<long>(v));
  y.erase(y.begin(), y.begin() + static_cast<long>(v));
  if (x.size() < y.size()) std::swap(x, y);
  make_primitive(x);
  make_primitive(y);
  while (!y.empty()) {
    if (y.size() == 1) {
      x = {GInt{1, 0}};
      break;
    }
    GPoly r = prem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<GaussRational> cs(v);
  for (const auto& c : x) cs.emplace_back(mpq_class(c.re), mpq_class(c.im));
  return QPoly(std::move(cs)).monic();
}

std::complex<double> QPoly::eval(std::complex<double> q) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + it->to_complex();
  return acc;
}

GaussRational QPoly::eval(const GaussRational& q) const {
  GaussRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long num, long den) : Scalar() {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  num_ = QPoly(GaussRational(mpq_class(num, den)));
  den_ = QPoly(GaussRational(1));
}

Scalar Scalar::fraction(QPoly num, QPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  Scalar s(std::move(num), std::move(den), 0);
  s.reduce();
  return s;
}

Scalar Scalar::q_power(long k) {
  if (k >= 0) return fraction(QPoly::monomial(1, static_cast<std::size_t>(k)), QPoly(GaussRational(1)));
  return fraction(QPoly(GaussRational(1)), QPoly::monomial(1, static_cast<std::size_t>(-k)));
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly(GaussRational(1));
    return;
  }
  if (!den_.is_constant()) {
    QPoly g = QPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = QPoly::exact_div(num_, g);
      den_ = QPoly::exact_div(den_, g);
    }
  }
  if (!den_.leading().is_one()) {
    GaussRational inv = den_.leading().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Scalar Scalar::conj() const { return Scalar(num_.conj(), den_.conj(), 0); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  Scalar s(den_, num_, 0);
  s.reduce();
  return s;
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
    if (!den_.is_one()) reduce();
    else if (num_.is_zero()) den_ = QPoly(GaussRational(1));
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  QPoly g1 = QPoly::gcd(num_, o.den_);
  QPoly g2 = QPoly::gcd(o.num_, den_);
  num_ = QPoly::exact_div(num_, g1) * QPoly::exact_div(o.num_, g2);
  den_ = QPoly::exact_div(den_, g2) * QPoly::exact_div(o.den_, g1);
  if (!den_.leading().is_one()) reduce();
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, 0); }

std::complex<double> Scalar::eval(std::complex<double> q0) const {
  std::complex<double> d = den_.eval(q0);
  double scale = 0.0;
  for (std::size_t k = 0; k < den_.coeffs().size(); ++k) {
    scale += std::abs(den_.coeffs()[k].to_complex()) * std::pow(std::abs(q0), static_cast<double>(k));
  }
  if (std::abs(d) <= 1e-14 * scale) {
    throw Error(ErrorKind::PoleAtEvaluationPoint, "pole of " + to_string() + " at evaluation point");
  }
  return num_.eval(q0) / d;
}

GaussRational Scalar::eval_exact(const GaussRational& q0) const {
  GaussRational d = den_.eval(q0);
  if (d.is_zero()) {
    throw Error(ErrorKind::PoleAtEvaluationPoint, "pole of " + to_string() + " at evaluation point");
  }
  return num_.eval(q0) / d;
}

// ---------------------------------------------------------------- text form

namespace {

bool is_monomial_den(const QPoly& d) {
  for (std::size_t k = 0; k + 1 < d.coeffs().size(); ++k) {
    if (!d.coeffs()[k].is_zero()) return false;
  }
  return true;
}

std::string power_text(long k) {
  if (k == 1) return "q";
  return "q^" + std::to_string(k);
}

// Terms of sum_k c_k q^(k + shift), ascending, joined with +/-.
std::string laurent_text(const QPoly& p, long shift) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const GaussRational& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    const long e = static_cast<long>(k) + shift;
    bool negative = (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    GaussRational mag = negative ? -c : c;
    std::string term;
    if (e == 0) {
      term = mag.to_string();
    } else if (mag.is_one()) {
      term = power_text(e);
    } else {
      term = mag.to_string() + "*" + power_text(e);
    }
    if (first) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
    first = false;
  }
  return out;
}

mpz_class lcm_denominators(const QPoly& p, mpz_class acc) {
  for (const auto& c : p.coeffs()) {
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.im().get_den_mpz_t());
  }
  return acc;
}

mpz_class gcd_numerators(const QPoly& p, mpz_class acc) {
  for (const auto& c : p.coeffs()) {
    mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.re().get_num_mpz_t());
    mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.im().get_num_mpz_t());
  }
  return acc;
}

bool single_term(const QPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs()) {
    if (!c.is_zero()) ++n;
  }
  return n <= 1;
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_monomial_den(den_)) return laurent_text(num_, -den_.degree());
  // Integer-coefficient fraction: scale by a positive rational so that every
  // coefficient is a Gaussian integer and the overall content is 1.
  mpz_class l = lcm_denominators(den_, lcm_denominators(num_, 1));
  QPoly n = num_.scaled(GaussRational(mpq_class(l)));
  QPoly d = den_.scaled(GaussRational(mpq_class(l)));
  mpz_class g = gcd_numerators(d, gcd_numerators(n, 0));
  if (g != 1 && g != 0) {
    n = n.scaled(GaussRational(mpq_class(1, g)));
    d = d.scaled(GaussRational(mpq_class(1, g)));
  }
  std::string ns = laurent_text(n, 0);
  std::string ds = laurent_text(d, 0);
  if (!single_term(n)) ns = "(" + ns + ")";
  return ns + "/(" + ds + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorKind::Syntax, what + " in scalar '" + std::string(text_) + "'", 1,
                     static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (accept('^')) {
      skip_ws();
      bool neg = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        neg = text_[pos_] == '-';
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      long e = std::stol(std::string(text_.substr(start, pos_ - start)));
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return Scalar::q();
    }
    if (c == 'i') {
      ++pos_;
      return Scalar::i();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class whole(std::string(text_.substr(start, pos_ - start)));
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        std::size_t fs = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string frac(text_.substr(fs, pos_ - fs));
        mpz_class scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
        mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(frac);
        return Scalar(mpq_class(whole * scale + f, scale));
      }
      return Scalar(mpq_class(whole));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace cqg
