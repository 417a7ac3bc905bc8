#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phasespace/rational.hpp"
#include "phasespace/symweyl.hpp"

namespace phasespace {

/// Polynomial differential operator in V commuting variables, stored in normal
/// order: the key (a_1, b_1, ..., a_V, b_V) means prod_v v^{a_v} d_v^{b_v} with
/// every multiplication left of every derivative.
template <int V, class Names>
class WeylOp {
 public:
  using Key = std::array<int, 2 * V>;
  using Map = std::map<Key, QComplex>;

  WeylOp() = default;
  static WeylOp term(const Key& k, const QComplex& c) {
    WeylOp o;
    o.add(k, c);
    return o;
  }
  static WeylOp scalar(const QComplex& c) { return term(Key{}, c); }

  void add(const Key& k, const QComplex& c);
  const Map& terms() const { return terms_; }
  QComplex coeff(const Key& k) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{}); }
  QComplex scalar_value() const { return coeff(Key{}); }

  /// conjugated coefficients, same monomials
  WeylOp conj() const;
  /// formal L2 adjoint: (c x^a d^b)^dagger = conj(c) (-d)^b x^a, renormalized
  WeylOp adjoint() const;
  /// true when every coefficient is purely imaginary
  bool is_pure_imaginary() const;

  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  WeylOp& operator*=(const QComplex& c);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(WeylOp a, const QComplex& c) { return a *= c; }
  friend WeylOp operator*(const QComplex& c, WeylOp a) { return a *= c; }
  /// composition
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b) { return compose(a, b); }
  static WeylOp compose(const WeylOp& a, const WeylOp& b);

  bool operator==(const WeylOp& o) const { return terms_ == o.terms_; }
  bool operator!=(const WeylOp& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Map terms_;
};

template <int V, class N>
WeylOp<V, N> commutator(const WeylOp<V, N>& a, const WeylOp<V, N>& b) {
  return a * b - b * a;
}

struct PhaseNames { static constexpr const char* v[2] = {"q", "p"}; };
struct XYNames { static constexpr const char* v[2] = {"x", "y"}; };
struct XNames { static constexpr const char* v[1] = {"x"}; };

/// Operators on phase-space functions.  Internal key order is
/// (q power, dq order, p power, dp order); use dop() for q^a p^b dq^c dp^d.
using DiffOp = WeylOp<2, PhaseNames>;
/// Operators on functions of (x, y): key (x power, dx order, y power, dy order).
using TwoVarOp = WeylOp<2, XYNames>;
/// Operators on functions of x: key (x power, dx order).
using OneVarOp = WeylOp<1, XNames>;

/// c q^a p^b dq^c dp^d
DiffOp dop(int a, int b, int c, int d, const QComplex& coef = 1);
inline TwoVarOp xyop(int a, int b, int c, int d, const QComplex& coef = 1) {
  return TwoVarOp::term({a, b, c, d}, coef);
}
inline OneVarOp xop(int a, int b, const QComplex& coef = 1) { return OneVarOp::term({a, b}, coef); }

DiffOp diffop_compose(const DiffOp& x, const DiffOp& y);
DiffOp diffop_commutator(const DiffOp& x, const DiffOp& y);

/// alpha = i{A, .}_GM expanded through the odd J-series.  A must be real.
DiffOp xi_lift(const PolySymbol& A);
/// Same series cut after derivative order max_order (the V(q) hook).
DiffOp xi_lift_truncated(const PolySymbol& A, int max_order);

/// Generator check: alpha is formally hermitian (adjoint == alpha) and has
/// purely imaginary coefficients.
bool is_generator_form(const DiffOp& alpha);

/// Z^dagger alpha Z with  q -> (x+y)/2,  dp -> -i(x-y)/hbar,
/// p -> hbar(-i dx + i dy)/2,  dq -> dx + dy.
TwoVarOp z_conjugate(const DiffOp& alpha, const Rational& hbar = 1);

struct SplitResult {
  bool accepted = false;
  OneVarOp a_hat;        // valid when accepted; additive real constant set to 0
  TwoVarOp witness;      // offending terms when rejected
  std::string reason;
};

/// Tries t = A(x, dx) - conj(A(y, dy)) with A hermitian.
SplitResult split_test(const TwoVarOp& t);

/// x^a dx^b -> i^b Q^a P^b  (dx = i P)
NCPoly to_ncpoly(const OneVarOp& a);
/// normal-ordered Q^a P^b -> (-i)^b x^a dx^b
OneVarOp from_ncpoly(const NCPoly& x);

/// Observable A (constant term 0) with xi_lift(A) == alpha, if one exists.
std::optional<PolySymbol> read_off_generator(const DiffOp& alpha);

/// 2^{-m} sum_r C(m,r) [X+^{m-r} Y-^n X+^r - X-^{m-r} Y+^n X-^r],
/// X+- = q +- (i/2) dp, Y-+ = p -+ (i/2) dq.
DiffOp xi_monomial(int m, int n);

/// Action of a DiffOp on a polynomial, term by term.  Independent of the
/// composition code, used as a brute-force check.
PolySymbol apply(const DiffOp& alpha, const PolySymbol& f);

std::string to_string(const DiffOp& a);
std::string to_string(const TwoVarOp& a);
std::string to_string(const OneVarOp& a);

// ---------------------------------------------------------------------------
// Lookup table of observables and their lifted generators.

struct Table1Row {
  std::string operator_name;  // e.g. "QPQ"
  PolySymbol symbol;           // A
  NCPoly operator_form;        // the operator whose Weyl symbol is A
  DiffOp printed;              // alpha as tabulated
  DiffOp computed;             // xi_lift(A)
  bool symbol_matches = false; // weyl_symbol(operator_form) == A
  bool alpha_matches = false;  // printed == computed
  DiffOp difference;           // printed - computed
};

struct Table1Report {
  std::vector<Table1Row> rows;
  int generic_trials = 0;
  bool generic_pattern_ok = false;  // printed general-P pattern == xi_lift, degree <= 5
  bool potential_row_ok = false;    // V = q^4 + q^2 truncated at order 5
  bool all_rows_match() const;
  std::vector<std::string> mismatched_rows() const;
};

Table1Report table1_check(unsigned long seed = 20240601UL, int generic_trials = 25);

/// The tabulated general-P pattern up to fifth order.
DiffOp generic_row_pattern(const PolySymbol& P);

}  // namespace phasespace
