#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "phasespace/spectral.hpp"

using namespace phasespace;

TEST_SUITE("spectral") {
  TEST_CASE("fft matches the defining sum and inverts") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> N01;
    const int N = 12;
    Eigen::VectorXcd x(N);
    for (int j = 0; j < N; ++j) x[j] = {N01(rng), N01(rng)};
    const Eigen::VectorXcd X = fft(x);
    for (int k = 0; k < N; ++k) {
      cplx s = 0;
      for (int j = 0; j < N; ++j) s += x[j] * std::polar(1.0, -2 * std::numbers::pi * j * k / N);
      CHECK(std::abs(X[k] - s) < 1e-12);
    }
    CHECK((ifft(X) - x).cwiseAbs().maxCoeff() < 1e-14);
  }

  TEST_CASE("frequencies") {
    const Eigen::VectorXd w = fft_frequencies(8, 0.5);
    const double base = 2 * std::numbers::pi / (8 * 0.5);
    CHECK(w[0] == 0.0);
    CHECK(w[1] == doctest::Approx(base));
    CHECK(w[4] == doctest::Approx(-4 * base));
    CHECK(w[7] == doctest::Approx(-base));
  }

  TEST_CASE("shifts") {
    const int N = 64;
    const double h = 0.25;
    SpectralShifter sh(N, h);
    auto f = [&](double x) { return std::exp(-x * x); };
    Eigen::VectorXcd v(N), w(N);
    for (int j = 0; j < N; ++j) v[j] = f((j - N / 2) * h);

    w = v;
    sh.shift(w.data(), 0.37);
    double worst = 0.0;
    for (int j = 0; j < N; ++j) worst = std::max(worst, std::abs(w[j] - f((j - N / 2) * h - 0.37)));
    CHECK(worst < 1e-10);

    w = v;
    sh.shift(w.data(), 3 * h);
    for (int j = 3; j < N; ++j) CHECK(w[j] == v[j - 3]);

    w = v;
    sh.shift(w.data(), 0.37);
    sh.shift(w.data(), -0.37);
    CHECK((w - v).cwiseAbs().maxCoeff() < 1e-13);

    w = v;
    sh.shift(w.data(), 0.0);
    CHECK(w == v);
  }
}
