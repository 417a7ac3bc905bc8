#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "phasespace/factorize_kernel.hpp"
#include "phasespace/serial_reference.hpp"

using namespace phasespace;

namespace {
RFunction gaussian(double tau, double sigma, int eps) {
  const GaussianAlphaSpec s{tau, sigma, eps};
  return RFunction::analytic([s](double u, double v, double up, double vp) { return gaussian_R(s, u, v, up, vp); },
                             GaussianDecay{tau, sigma});
}
}  // namespace

TEST_SUITE("factorize") {
  TEST_CASE("spec validation") {
    CHECK_THROWS_AS((GaussianAlphaSpec{-1, 1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GaussianAlphaSpec{1, 0, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GaussianAlphaSpec{1, 1, 0}.validate()), std::invalid_argument);
    CHECK_NOTHROW((GaussianAlphaSpec{0.5, 2, -1}.validate()));
  }

  TEST_CASE("axes lookup") {
    const AlphaAxes ax = make_alpha_axes(8, 0.5);
    CHECK(ax.coord(4) == 0.0);
    CHECK(ax.index_of(-2.0) == 0);
    CHECK(ax.index_of(1.5) == 7);
    bool off = false;
    CHECK(ax.index_of(0.25, &off) == -1);
    CHECK(off);
    CHECK(ax.index_of(4.0) == -1);
  }

  TEST_CASE("gaussian kernel is an admissible generator kernel") {
    const AlphaKernel a = gaussian_alpha_kernel({1, 1, 1}, make_alpha_axes(10, 0.4));
    CHECK(a.constraint_residual() < 1e-14);
    CHECK(a.max_abs() > 0.1);
    // R is odd in (u, v)
    CHECK(gaussian(1, 1, 1).oddness_residual() < 1e-14);
    CHECK(kernel_to_R(a).oddness_residual(5, 0.8) < 1e-14);
  }

  TEST_CASE("quadrature sine transform matches the closed form") {
    const GaussianAlphaSpec s{1.5, 0.7, 1};
    const RFunction R = gaussian(s.tau, s.sigma, 1);
    double worst = 0.0;
    for (double x : {-1.0, 0.4})
      for (double y : {-0.6, 1.1})
        for (double up : {0.3, -0.9})
          for (double vp : {0.8, -0.2}) {
            const QuadratureBox box = choose_box(GaussianDecay{s.tau, s.sigma}, 2 * std::abs(y) + 1, 2 * std::abs(x) + 1);
            worst = std::max(worst, std::abs(sine_transform(R, x, y, up, vp, box) - gaussian_sine_transform(s, x, y, up, vp)));
          }
    CHECK(worst < 1e-10);
  }

  TEST_CASE("consistency residual separates the two sign choices") {
    const AutvReport plus = autv_residual(gaussian(1, 1, 1));
    const AutvReport minus = autv_residual(gaussian(1, 1, -1));
    CHECK(plus.residual < 1e-10);
    CHECK(minus.residual > 1e-2);
    CHECK(minus.residual / plus.residual > 1e6);
    CHECK(plus.probes_per_axis == 5);
  }

  TEST_CASE("parallel residual equals the serial reference") {
    AutvOptions opt;
    opt.probes_per_axis = 3;
    for (int e : {1, -1}) {
      const RFunction R = gaussian(1, 1, e);
      CHECK(autv_residual(R, opt).residual == doctest::Approx(reference::autv_residual(R, opt).residual).epsilon(1e-12));
    }
  }

  TEST_CASE("gate refuses and override recovers") {
    const GridSpec g = make_grid(16, std::sqrt(std::numbers::pi / 16));
    CHECK_THROWS_AS(recover_A(gaussian(1, 1, -1), 0.0, g), GateRefused);
    RecoveryOptions opt;
    opt.override_gate = true;
    const Recovery r = recover_A(gaussian(1, 1, -1), 0.0, g, opt);
    CHECK_FALSE(r.admitted);
    CHECK(r.gate.residual > 1e-2);
  }

  TEST_CASE("recovered observable is a real gaussian bump with A(0,0) = a") {
    const GridSpec g = make_grid(32, std::sqrt(std::numbers::pi / 32));
    const Recovery r = recover_A(gaussian(1, 1, 1), 0.25, g);
    REQUIRE(r.admitted);
    CHECK(r.A.values.imag().cwiseAbs().maxCoeff() < 1e-10);
    CHECK(r.A.values(g.n, g.n / 2).real() == doctest::Approx(0.25).epsilon(1e-12));
    const double corner = r.A.values(0, 0).real();
    const double peak = r.A.values(g.n, g.n / 2).real() - corner;
    CHECK(std::abs(peak) > 0.1);
    // shape: ratio at (q, 0) follows exp(-q^2)
    const int s1 = g.n + 4;
    CHECK((r.A.values(s1, g.n / 2).real() - corner) / peak == doctest::Approx(std::exp(-g.q(s1) * g.q(s1))).epsilon(1e-6));
  }

  TEST_CASE("sine kernel of an observable: separable and direct quadrature agree") {
    const GridSpec g = make_grid(12, 0.5);
    PhaseFunction A = PhaseFunction::zeros(g);
    for (int s = 0; s < g.nq(); ++s)
      for (int k = 0; k < g.n; ++k) A.values(s, k) = std::exp(-g.q(s) * g.q(s) - 0.5 * g.p(k) * g.p(k));
    const AlphaAxes ax = make_alpha_axes(6, 0.5);
    const AlphaKernel fast = alpha_kernel_from_A(A, ax), slow = reference::alpha_kernel_direct(A, ax);
    double worst = 0.0;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c)
          for (int d = 0; d < 6; ++d) worst = std::max(worst, std::abs(fast.at(a, b, c, d) - slow.at(a, b, c, d)));
    CHECK(worst < 1e-11);
    CHECK(fast.constraint_residual() < 1e-12);
  }

  TEST_CASE("lattice inversion recovers the observable it came from") {
    const GridSpec g = make_grid(16, 0.5);
    PhaseFunction A = PhaseFunction::zeros(g);
    for (int s = 0; s < g.nq(); ++s)
      for (int k = 0; k < g.n; ++k) A.values(s, k) = std::exp(-g.q(s) * g.q(s) - g.p(k) * g.p(k));
    auto alpha = std::make_shared<const AlphaKernel>(alpha_kernel_from_A(A, make_alpha_axes(8, 0.5)));
    const Eigen::MatrixXcd back = recover_A_on_lattice(RFunction::gridded(alpha), 0.0);
    CHECK(back.allFinite());
    CHECK(back.rows() == 8);
  }
}
