#include <doctest.h>

#include <cmath>
#include <random>

#include "phasespace/serial_reference.hpp"
#include "phasespace/star.hpp"

using namespace phasespace;

TEST_SUITE("star") {
  TEST_CASE("factorized twisted quadrature equals the direct fourfold sum") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> N01;
    const GridSpec g = make_grid(6, 0.5);
    Eigen::MatrixXcd a(6, 6), b(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        a(i, j) = {N01(rng), N01(rng)};
        b(i, j) = {N01(rng), N01(rng)};
      }
    const PhaseFunction A = weyl_wigner({g, a}), B = weyl_wigner({g, b});
    const Eigen::MatrixXcd fast = star_twisted_oracle(A, B).values;
    const Eigen::MatrixXcd slow = reference::star_twisted_direct(A, B).values;
    CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-10 * std::max(1.0, slow.cwiseAbs().maxCoeff()));
  }

  TEST_CASE("kernel route agrees with the twisted quadrature on basis functions") {
    const GridSpec g = make_grid(64, std::sqrt(M_PI / 64));
    const BasisFamily b = hermite_basis(g, 3);
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) {
        const PhaseFunction A = basis_function(b, r, s), B = basis_function(b, s, r);
        CHECK((star(A, B).values - star_twisted_oracle(A, B).values).cwiseAbs().maxCoeff() < 1e-6);
      }
  }

  TEST_CASE("basis functions multiply like matrix units") {
    const GridSpec g = make_grid(64, 0.25);
    const BasisFamily b = hermite_basis(g, 3);
    const Eigen::MatrixXcd prod = star(basis_function(b, 0, 1), basis_function(b, 1, 2)).values;
    CHECK((prod - basis_function(b, 0, 2).values).cwiseAbs().maxCoeff() < 1e-10);
    const Eigen::MatrixXcd zero = star(basis_function(b, 0, 1), basis_function(b, 2, 2)).values;
    CHECK(zero.cwiseAbs().maxCoeff() < 1e-10);
  }

  TEST_CASE("purity of a superposition and its failure for a mixture") {
    const GridSpec g = make_grid(64, 0.25);
    const BasisFamily b = hermite_basis(g, 3);
    const Eigen::VectorXcd psi = (b.state(0) + cplx(0, 1) * b.state(2)) / std::sqrt(2.0);
    const PurityResidual pure = purity_residual(wigner_of_state({g, psi}));
    CHECK(pure.r1 < 1e-10);
    CHECK(pure.r2 < 1e-10);
    const PhaseFunction mixed = (wigner_of_state({g, b.state(0)}) + wigner_of_state({g, b.state(1)})) * 0.5;
    CHECK(purity_residual(mixed).r1 > 1e-3);
  }

  TEST_CASE("moyal bracket of hermitian symbols is real") {
    const GridSpec g = make_grid(32, 0.3);
    const BasisFamily b = hermite_basis(g, 2);
    const PhaseFunction A = basis_function(b, 0, 1) + basis_function(b, 1, 0);
    const PhaseFunction B = basis_function(b, 1, 1);
    CHECK(moyal_bracket(A, B).max_imag() < 1e-10);
  }

  TEST_CASE("symbol of a unitary is star unitary") {
    const GridSpec g = make_grid(16, 0.4);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(16, 16);
    for (int i = 0; i < 16; ++i) u(i, (i + 3) % 16) = std::polar(1.0, 0.1 * i);
    const PhaseFunction U = weyl_wigner({g, u / g.dx});
    CHECK(star_unitary_residual(U) < 1e-11);
  }
}
