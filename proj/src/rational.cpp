#include "phasespace/rational.hpp"

#include <stdexcept>

namespace phasespace {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(z);
}

Rational factorial(int n) {
  if (n < 0) throw std::domain_error("negative factorial");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rational(z);
}

Rational pow_rational(const Rational& x, int k) {
  Rational r = 1;
  if (k >= 0) {
    for (int i = 0; i < k; ++i) r *= x;
  } else {
    for (int i = 0; i < -k; ++i) r /= x;
  }
  return r;
}

QComplex QComplex::ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

QComplex& QComplex::operator+=(const QComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

QComplex& QComplex::operator-=(const QComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

QComplex& QComplex::operator*=(const QComplex& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

QComplex& QComplex::operator/=(const QComplex& o) {
  const Rational d = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(d) == 0) throw std::domain_error("QComplex division by zero");
  Rational r = (re_ * o.re_ + im_ * o.im_) / d;
  Rational i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string to_string(const QComplex& z) {
  if (z.is_zero()) return "0";
  if (z.is_real()) return z.re().get_str();
  const std::string im = z.im() == 1 ? "" : z.im() == -1 ? "-" : z.im().get_str();
  if (z.is_imaginary()) return im + "i";
  const bool neg = sgn(z.im()) < 0;
  const Rational a = abs(z.im());
  return "(" + z.re().get_str() + (neg ? " - " : " + ") + (a == 1 ? "" : a.get_str()) + "i)";
}

std::ostream& operator<<(std::ostream& os, const QComplex& z) { return os << to_string(z); }

}  // namespace phasespace
