#include <random>

#include "phasespace/liftgen.hpp"
#include "phasespace/random_poly.hpp"

namespace phasespace {

namespace {

QComplex im(long num, long den = 1) { return {Rational(0), make_rational(num, den)}; }

Table1Row make_row(const std::string& name, const NCPoly& op, const PolySymbol& A, const DiffOp& printed) {
  Table1Row r;
  r.operator_name = name;
  r.symbol = A;
  r.operator_form = op;
  r.printed = printed;
  r.computed = xi_lift(A);
  r.symbol_matches = weyl_symbol(op) == A;
  r.alpha_matches = printed == r.computed;
  r.difference = printed - r.computed;
  return r;
}

}  // namespace

DiffOp generic_row_pattern(const PolySymbol& P) {
  const QComplex pref[3] = {im(1), im(-1, 24), im(1, 1920)};
  DiffOp out;
  for (int o = 0; o < 3; ++o) {
    const int k = 2 * o + 1;
    for (int j = 0; j <= k; ++j) {
      // P with j q-derivatives and k-j p-derivatives times dq^{k-j} dp^j
      Rational c = binomial(k, j);
      if ((k - j) % 2) c = -c;
      const PolySymbol d = P.derivative(j, k - j);
      for (auto& [key, v] : d.terms())
        out += dop(key.first, key.second, k - j, j, v * pref[o] * QComplex(c));
    }
  }
  return out;
}

bool Table1Report::all_rows_match() const {
  for (auto& r : rows)
    if (!r.alpha_matches || !r.symbol_matches) return false;
  return true;
}

std::vector<std::string> Table1Report::mismatched_rows() const {
  std::vector<std::string> out;
  for (auto& r : rows)
    if (!r.alpha_matches || !r.symbol_matches) out.push_back(r.operator_name);
  return out;
}

Table1Report table1_check(unsigned long seed, int generic_trials) {
  const auto q = PolySymbol::q(), p = PolySymbol::p();
  const NCPoly Q = NCPoly::q(), P = NCPoly::p();
  Table1Report rep;
  auto& R = rep.rows;
  R.push_back(make_row("I", NCPoly::identity(), PolySymbol::constant(1), DiffOp{}));
  R.push_back(make_row("Q", Q, q, dop(0, 0, 0, 1, im(1))));
  R.push_back(make_row("P", P, p, dop(0, 0, 1, 0, im(-1))));
  R.push_back(make_row("Q^2", Q * Q, q * q, dop(1, 0, 0, 1, im(2))));
  R.push_back(make_row("P^2", P * P, p * p, dop(0, 1, 1, 0, im(-2))));
  R.push_back(make_row("(QP+PQ)/2", (Q * P + P * Q) * QComplex(make_rational(1, 2)), q * p,
                       dop(0, 1, 0, 1, im(1)) + dop(1, 0, 1, 0, im(-1))));
  R.push_back(make_row("Q^3", Q * Q * Q, q * q * q, dop(2, 0, 0, 1, im(3)) + dop(0, 0, 0, 3, im(-1, 4))));
  R.push_back(make_row("P^3", P * P * P, p * p * p, dop(0, 2, 1, 0, im(-3)) + dop(0, 0, 3, 0, im(1, 4))));
  R.push_back(make_row("QPQ", Q * P * Q, q * q * p,
                       dop(1, 1, 0, 1, im(2)) + dop(2, 0, 1, 0, im(-1)) + dop(0, 0, 1, 2, im(1, 8))));
  R.push_back(make_row("PQP", P * Q * P, q * p * p,
                       dop(0, 2, 0, 1, im(1)) + dop(1, 1, 1, 0, im(-2)) + dop(0, 0, 2, 1, im(-1, 8))));

  std::mt19937_64 rng(seed);
  rep.generic_trials = generic_trials;
  rep.generic_pattern_ok = true;
  for (int t = 0; t < generic_trials; ++t) {
    const PolySymbol A = random_poly(rng, 5);
    if (generic_row_pattern(A) != xi_lift(A)) rep.generic_pattern_ok = false;
  }

  const PolySymbol V = q * q * q * q + q * q;
  DiffOp printedV;
  const QComplex pref[3] = {im(1), im(-1, 24), im(1, 1920)};
  for (int o = 0; o < 3; ++o) {
    const int k = 2 * o + 1;
    const PolySymbol d = V.derivative(k, 0);
    for (auto& [key, v] : d.terms()) printedV += dop(key.first, 0, 0, k, v * pref[o]);
  }
  rep.potential_row_ok = printedV == xi_lift_truncated(V, 5);
  return rep;
}

}  // namespace phasespace
