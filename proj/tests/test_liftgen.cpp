#include <doctest.h>

#include <random>

#include "phasespace/liftgen.hpp"
#include "phasespace/random_poly.hpp"

using namespace phasespace;

namespace {
QComplex I(long n, long d = 1) { return {Rational(0), make_rational(n, d)}; }
const PolySymbol q = PolySymbol::q(), p = PolySymbol::p();
}  // namespace

TEST_SUITE("liftgen") {
  TEST_CASE("composition and commutators") {
    CHECK(commutator(dop(0, 0, 0, 1, I(1)), dop(0, 0, 1, 0, I(-1))).is_zero());
    CHECK(commutator(dop(1, 0, 0, 1), dop(0, 1, 1, 0)) == dop(1, 0, 1, 0) - dop(0, 1, 0, 1));
    // dq q = q dq + 1
    CHECK(dop(0, 0, 1, 0) * dop(1, 0, 0, 0) == dop(1, 0, 1, 0) + DiffOp::scalar(1));
  }

  TEST_CASE("composition agrees with brute-force action") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
      const DiffOp a = xi_lift(random_poly(rng, 3)), b = xi_lift(random_poly(rng, 3));
      const PolySymbol f = random_poly(rng, 4, false);
      CHECK(apply(a * b, f) == apply(a, apply(b, f)));
    }
  }

  TEST_CASE("adjoint") {
    // (i dp)^dagger = i dp,  (q dq)^dagger = -dq q = -q dq - 1
    CHECK(dop(0, 0, 0, 1, I(1)).adjoint() == dop(0, 0, 0, 1, I(1)));
    CHECK(dop(1, 0, 1, 0).adjoint() == dop(1, 0, 1, 0, -1) - DiffOp::scalar(1));
    CHECK_FALSE(is_generator_form(dop(2, 0, 0, 1, 1)));
  }

  TEST_CASE("lift of low symbols") {
    CHECK(xi_lift(q) == dop(0, 0, 0, 1, I(1)));
    CHECK(xi_lift(q * q * q) == dop(2, 0, 0, 1, I(3)) + dop(0, 0, 0, 3, I(-1, 4)));
    CHECK(xi_lift(PolySymbol::constant(1)).is_zero());
    CHECK_THROWS_AS(xi_lift(PolySymbol::constant(QComplex::i())), std::invalid_argument);
  }

  TEST_CASE("lift acts as i times the bracket") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 20; ++t) {
      const PolySymbol A = random_poly(rng, 5), B = random_poly(rng, 5, false);
      CHECK(apply(xi_lift(A), B) == moyal_symbolic(A, B) * QComplex::i());
    }
  }

  TEST_CASE("monomial formula") {
    CHECK(xi_monomial(1, 0) == dop(0, 0, 0, 1, I(1)));
    CHECK(xi_monomial(1, 1) == dop(0, 1, 0, 1, I(1)) + dop(1, 0, 1, 0, I(-1)));
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n) CHECK(xi_monomial(m, n) == xi_lift(PolySymbol::monomial(m, n)));
  }

  TEST_CASE("z conjugation") {
    CHECK(z_conjugate(dop(0, 0, 0, 1, I(1))) == xyop(1, 0, 0, 0) - xyop(0, 0, 1, 0));
    CHECK(z_conjugate(dop(0, 0, 1, 0, I(-1))) == xyop(0, 1, 0, 0, I(-1)) + xyop(0, 0, 0, 1, I(-1)));
    CHECK(z_conjugate(dop(0, 0, 0, 1, I(1)), Rational(2)) ==
          xyop(1, 0, 0, 0, make_rational(1, 2)) - xyop(0, 0, 1, 0, make_rational(1, 2)));
  }

  TEST_CASE("split test and read-off") {
    const SplitResult s = split_test(z_conjugate(dop(2, 0, 0, 1, I(1))));
    CHECK_FALSE(s.accepted);
    CHECK_FALSE(s.witness.is_zero());
    CHECK(split_test(TwoVarOp{}).accepted);
    CHECK(split_test(TwoVarOp{}).a_hat.is_zero());

    const SplitResult c = split_test(z_conjugate(xi_lift(q * q * q)));
    REQUIRE(c.accepted);
    CHECK(c.a_hat == xop(3, 0));

    CHECK(read_off_generator(dop(0, 0, 0, 1, I(1))) == q);
    CHECK(read_off_generator(dop(1, 0, 0, 1, I(2))) == q * q);
    CHECK_FALSE(read_off_generator(dop(2, 0, 0, 1, I(1))).has_value());

    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
      const PolySymbol A = random_poly(rng, 5);
      CHECK(read_off_generator(xi_lift(A)) == A.without_constant());
    }
  }

  TEST_CASE("operator and polynomial conversions") {
    // x dx -> i Q P
    CHECK(to_ncpoly(xop(1, 1)) == NCPoly::word("qp", QComplex::i()));
    std::mt19937_64 rng(24);
    for (int t = 0; t < 10; ++t) {
      const NCPoly a = weyl_quantize(random_poly(rng, 4, false));
      CHECK(to_ncpoly(from_ncpoly(a)) == a);
    }
  }

  TEST_CASE("lie homomorphism up to the factor i, but not an algebra map") {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 20; ++t) {
      const PolySymbol A = random_poly(rng, 5), B = random_poly(rng, 5);
      CHECK(commutator(xi_lift(A), xi_lift(B)) == xi_lift(moyal_symbolic(A, B)) * QComplex::i());
    }
    const PolySymbol X2 = q * q, X3 = p * p;
    CHECK(xi_lift(X2) * xi_lift(X3) + xi_lift(X3) * xi_lift(X2) !=
          xi_lift(star_symbolic(X2, X3) + star_symbolic(X3, X2)));
  }

  TEST_CASE("table rows") {
    const Table1Report r = table1_check();
    REQUIRE(r.rows.size() == 10);
    CHECK(r.generic_pattern_ok);
    CHECK(r.potential_row_ok);
    for (auto& row : r.rows) CHECK(row.symbol_matches);
    // the two mixed third-order rows are tabulated with half the correct
    // third-derivative coefficient
    CHECK(r.mismatched_rows() == std::vector<std::string>{"QPQ", "PQP"});
    CHECK(r.rows[8].difference == dop(0, 0, 1, 2, I(-1, 8)));
    CHECK(r.rows[9].difference == dop(0, 0, 2, 1, I(1, 8)));
  }
}
