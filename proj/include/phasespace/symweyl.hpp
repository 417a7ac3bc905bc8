#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "phasespace/rational.hpp"

namespace phasespace {

/// Commutative polynomial sum c_{mn} q^m p^n with exact complex coefficients.
/// Zero coefficients are never stored.
class PolySymbol {
 public:
  using Key = std::pair<int, int>;  // (q degree, p degree)
  using Map = std::map<Key, QComplex>;

  PolySymbol() = default;
  static PolySymbol constant(const QComplex& c);
  static PolySymbol monomial(int m, int n, const QComplex& c = 1);
  static PolySymbol q() { return monomial(1, 0); }
  static PolySymbol p() { return monomial(0, 1); }

  void add(int m, int n, const QComplex& c);
  const Map& terms() const { return terms_; }
  QComplex coeff(int m, int n) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  int total_degree() const;  // -1 for the zero polynomial

  PolySymbol derivative(int dq, int dp) const;
  PolySymbol conj() const;
  PolySymbol without_constant() const;
  std::complex<double> evaluate(double q, double p) const;

  PolySymbol& operator+=(const PolySymbol& o);
  PolySymbol& operator-=(const PolySymbol& o);
  PolySymbol& operator*=(const QComplex& c);
  friend PolySymbol operator+(PolySymbol a, const PolySymbol& b) { return a += b; }
  friend PolySymbol operator-(PolySymbol a, const PolySymbol& b) { return a -= b; }
  friend PolySymbol operator*(const PolySymbol& a, const PolySymbol& b);
  friend PolySymbol operator*(PolySymbol a, const QComplex& c) { return a *= c; }
  friend PolySymbol operator*(const QComplex& c, PolySymbol a) { return a *= c; }
  PolySymbol operator-() const { return *this * QComplex(-1); }

  bool operator==(const PolySymbol& o) const { return terms_ == o.terms_; }
  bool operator!=(const PolySymbol& o) const { return !(*this == o); }

 private:
  Map terms_;
};

/// Noncommutative polynomial in q^ and p^.  Words are strings over {'q','p'};
/// the empty word is the identity.
class NCPoly {
 public:
  using Map = std::map<std::string, QComplex>;

  NCPoly() = default;
  static NCPoly identity(const QComplex& c = 1) { return word("", c); }
  static NCPoly q() { return word("q"); }
  static NCPoly p() { return word("p"); }
  static NCPoly word(const std::string& w, const QComplex& c = 1);

  void add(const std::string& w, const QComplex& c);
  const Map& terms() const { return terms_; }
  QComplex coeff(const std::string& w) const;
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // longest word, -1 when zero
  bool is_normal_ordered() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const QComplex& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  /// word concatenation (no reordering)
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const QComplex& c) { return a *= c; }
  friend NCPoly operator*(const QComplex& c, NCPoly a) { return a *= c; }

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

 private:
  Map terms_;
};

/// "q...qp...p" with a q's and b p's
std::string normal_word(int a, int b);

/// Rewrites every word to q^a p^b using p q = q p - i.
NCPoly nc_normalize(const NCPoly& x);

/// W(q^a p^b) = sum_k (i/2)^k k! C(a,k) C(b,k) q^{a-k} p^{b-k}, extended linearly
/// after normal ordering.
PolySymbol weyl_symbol(const NCPoly& x);

/// Inverse of weyl_symbol:
///   q^m p^n -> sum_k (-i/2)^k k! C(m,k) C(n,k) q^{m-k} p^{n-k}  (normal ordered)
NCPoly weyl_quantize(const PolySymbol& A);
/// Second closed form: q^m p^n -> 2^{-m} sum_r C(m,r) q^{m-r} p^n q^r, normalized.
NCPoly weyl_quantize_symmetrized(const PolySymbol& A);

/// A J^k B = 2^{-k} sum_j C(k,j) (-1)^{k-j} (d_q^j d_p^{k-j} A)(d_q^{k-j} d_p^j B)
PolySymbol janus_power(const PolySymbol& A, const PolySymbol& B, int k);

/// sum_k i^k/k! A J^k B
PolySymbol star_symbolic_left(const PolySymbol& A, const PolySymbol& B);
/// sum_k (-i)^k/k! B J^k A
PolySymbol star_symbolic_right(const PolySymbol& A, const PolySymbol& B);
/// Both forms; throws std::logic_error if they ever disagree.
PolySymbol star_symbolic(const PolySymbol& A, const PolySymbol& B);

/// 2 sum_{k odd} (-1)^{(k-1)/2}/k! A J^k B
PolySymbol moyal_symbolic(const PolySymbol& A, const PolySymbol& B);

/// q -> p, p -> -q
PolySymbol swap_symbol(const PolySymbol& A);
/// q^ -> p^, p^ -> -q^  (letter substitution, no reordering)
NCPoly swap_operator(const NCPoly& x);

std::string to_string(const NCPoly& x);

}  // namespace phasespace
