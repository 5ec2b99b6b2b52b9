#pragma once

// Exact arithmetic in Q(i)(q): rational functions in one real formal
// parameter q with Gaussian-rational coefficients.

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cqg {

/// a + b*i with a, b arbitrary-precision rationals.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return GaussRational(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return GaussRational(re_, -im_); }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    return a * b.inverse();
  }
  GaussRational operator-() const { return GaussRational(-re_, -im_); }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Dense univariate polynomial in q over Q(i), ascending coefficients,
/// no trailing zeros (the zero polynomial is empty).
class QPoly {
 public:
  QPoly() = default;
  QPoly(GaussRational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  explicit QPoly(std::vector<GaussRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPoly monomial(GaussRational c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const GaussRational& leading() const { return coeffs_.back(); }
  const std::vector<GaussRational>& coeffs() const { return coeffs_; }
  GaussRational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussRational(); }
  // Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const;

  QPoly conj() const;
  QPoly scaled(const GaussRational& c) const;
  QPoly monic() const { return is_zero() ? *this : scaled(leading().inverse()); }

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const { return scaled(GaussRational(-1)); }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  static QPoly exact_div(const QPoly& a, const QPoly& b);
  /// Monic gcd (zero if both are zero).
  static QPoly gcd(QPoly a, QPoly b);

  std::complex<double> eval(std::complex<double> q) const;
  GaussRational eval(const GaussRational& q) const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<GaussRational> coeffs_;
};

/// Element of Q(i)(q) kept in canonical form: monic denominator,
/// gcd(numerator, denominator) = 1, zero is 0/1. Equality is structural.
class Scalar {
 public:
  Scalar() : den_(GaussRational(1)) {}
  Scalar(long v) : num_(GaussRational(v)), den_(GaussRational(1)) {}  // NOLINT
  Scalar(GaussRational c) : num_(std::move(c)), den_(GaussRational(1)) {}  // NOLINT
  Scalar(const mpq_class& c) : num_(GaussRational(c)), den_(GaussRational(1)) {}  // NOLINT
  Scalar(long num, long den);
  /// Builds num/den and reduces; throws DivisionByZero for den = 0.
  static Scalar fraction(QPoly num, QPoly den);

  static Scalar q() { return fraction(QPoly::monomial(1, 1), QPoly(GaussRational(1))); }
  static Scalar i() { return Scalar(GaussRational::i()); }
  /// q^k for any integer k.
  static Scalar q_power(long k);

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// Value when is_constant().
  GaussRational constant() const { return num_.coeff(0); }

  Scalar conj() const;
  Scalar inverse() const;
  Scalar pow(long k) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// Floating evaluation; throws PoleAtEvaluationPoint when the
  /// denominator vanishes at q0.
  std::complex<double> eval(std::complex<double> q0) const;
  /// Exact evaluation at a Gaussian-rational point.
  GaussRational eval_exact(const GaussRational& q0) const;

  /// Canonical text form; parse(to_string()) == *this.
  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  Scalar(QPoly num, QPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  QPoly num_;
  QPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cqg
