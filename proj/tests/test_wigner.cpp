#include <doctest.h>

#include <cmath>
#include <random>

#include "phasespace/serial_reference.hpp"
#include "phasespace/wigner.hpp"

using namespace phasespace;

namespace {
Eigen::MatrixXcd random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> N01;
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {N01(rng), N01(rng)};
  return m;
}
}  // namespace

TEST_SUITE("wigner") {
  TEST_CASE("parallel transform matches the serial reference") {
    std::mt19937_64 rng(1);
    for (int n : {4, 10, 32}) {
      const GridSpec g = make_grid(n, 0.3);
      const KernelMatrix K{g, random_matrix(rng, n)};
      const PhaseFunction A = weyl_wigner(K), B = reference::weyl_wigner(K);
      CHECK((A.values - B.values).cwiseAbs().maxCoeff() < 1e-12);
      const KernelMatrix Ki = weyl_wigner_inv(A), Kr = reference::weyl_wigner_inv(A);
      CHECK((Ki.entries - Kr.entries).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("round trips and Parseval") {
    std::mt19937_64 rng(2);
    const GridSpec g = make_grid(32, 0.2);
    const KernelMatrix K{g, random_matrix(rng, 32)}, L{g, random_matrix(rng, 32)};
    const PhaseFunction A = weyl_wigner(K);
    CHECK((weyl_wigner_inv(A).entries - K.entries).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((weyl_wigner(weyl_wigner_inv(A)).values - A.values).cwiseAbs().maxCoeff() < 1e-12);
    const cplx lhs = inner_k(A, weyl_wigner(L)), rhs = inner_kernel(K, L);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
  }

  TEST_CASE("hermitian kernel gives a real symbol") {
    std::mt19937_64 rng(3);
    const GridSpec g = make_grid(16, 0.4);
    Eigen::MatrixXcd m = random_matrix(rng, 16);
    m = (m + m.adjoint()).eval();
    CHECK(weyl_wigner({g, m}).max_imag() < 1e-13);
  }

  TEST_CASE("ground and first excited state") {
    const GridSpec g = make_grid(128, 0.125);
    const BasisFamily b = hermite_basis(g, 3);
    const PhaseFunction W0 = wigner_of_state({g, b.state(0)});
    double worst = 0;
    for (int s = 0; s < g.nq(); ++s)
      for (int k = 0; k < g.n; ++k)
        worst = std::max(worst, std::abs(W0.values(s, k) - std::exp(-g.q(s) * g.q(s) - g.p(k) * g.p(k)) / M_PI));
    CHECK(worst < 1e-8);
    const PhaseFunction W1 = wigner_of_state({g, b.state(1)});
    CHECK(W1.values(g.n, g.n / 2).real() == doctest::Approx(-1.0 / M_PI).epsilon(1e-8));
    CHECK(W0.integral().real() == doctest::Approx(1.0).epsilon(1e-10));
  }

  TEST_CASE("basis functions orthonormal") {
    const GridSpec g = make_grid(64, 0.25);
    const BasisFamily b = hermite_basis(g, 3);
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s)
        for (int u = 0; u < 3; ++u)
          for (int v = 0; v < 3; ++v) {
            const double want = (r == u && s == v) ? 1.0 : 0.0;
            CHECK(std::abs(inner_k(basis_function(b, r, s), basis_function(b, u, v)) - want) < 1e-10);
          }
  }

  TEST_CASE("parity is the transpose and an involution") {
    std::mt19937_64 rng(4);
    const GridSpec g = make_grid(16, 0.3);
    const Eigen::MatrixXcd m = random_matrix(rng, 16);
    const PhaseFunction A = weyl_wigner({g, m});
    CHECK((parity(A).values - weyl_wigner({g, m.transpose()}).values).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(parity(parity(A)).values == A.values);
  }

  TEST_CASE("star identity is the symbol of identity over dx") {
    const GridSpec g = make_grid(16, 0.3);
    const PhaseFunction I = star_identity(g);
    CHECK((weyl_wigner_inv(I).entries - KernelMatrix::identity_over_dx(g).entries).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("grid mismatch rejected") {
    const PhaseFunction A = PhaseFunction::zeros(make_grid(8, 0.3));
    const PhaseFunction B = PhaseFunction::zeros(make_grid(8, 0.4));
    CHECK_THROWS_AS(inner_k(A, B), std::invalid_argument);
    CHECK_THROWS_AS(A + B, std::invalid_argument);
  }
}
