#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace phasespace {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational binomial(int n, int k);
Rational factorial(int n);
Rational pow_rational(const Rational& x, int k);

/// Exact complex number re + i im with rational parts.
class QComplex {
 public:
  QComplex() = default;
  QComplex(long re) : re_(re) {}  // NOLINT(implicit)
  QComplex(const Rational& re) : re_(re) {}  // NOLINT(implicit)
  QComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static QComplex i() { return {Rational(0), Rational(1)}; }
  /// i^k for any integer k
  static QComplex ipow(int k);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_imaginary() const { return sgn(re_) == 0; }

  QComplex conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  QComplex& operator+=(const QComplex& o);
  QComplex& operator-=(const QComplex& o);
  QComplex& operator*=(const QComplex& o);
  QComplex& operator/=(const QComplex& o);

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
  QComplex operator-() const { return {-re_, -im_}; }

  bool operator==(const QComplex& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const QComplex& o) const { return !(*this == o); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "3/4", "-1/2i", "(1/2 + 3i)" style rendering.
std::string to_string(const QComplex& z);
std::ostream& operator<<(std::ostream& os, const QComplex& z);

}  // namespace phasespace
