#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace phasespace {

using cplx = std::complex<double>;

/// Uniform configuration grid x_j = (j - n/2) dx, j = 0..n-1, together with
/// the conjugate momentum spacing dp = pi / (n dx).  hbar = 1.
struct GridSpec {
  int n = 0;
  double dx = 0.0;
  double dp = 0.0;

  double x(int j) const { return (j - n / 2) * dx; }
  double half_width() const { return 0.5 * n * dx; }

  // Double-density phase-space axes used by PhaseFunction.
  int nq() const { return 2 * n; }
  double dq() const { return 0.5 * dx; }
  double q(int s) const { return (s - n) * 0.5 * dx; }
  double p(int k) const { return (k - n / 2) * dp; }
  double cell() const { return dq() * dp; }

  std::vector<double> x_axis() const;
  std::vector<double> q_axis() const;
  std::vector<double> p_axis() const;

  bool operator==(const GridSpec& o) const {
    return n == o.n && dx == o.dx && dp == o.dp;
  }
  bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

GridSpec make_grid(int n, double dx);

/// Hermite-Gauss functions e_0..e_{r_max-1} sampled on the grid.
struct BasisFamily {
  GridSpec grid;
  int r_max = 0;
  Eigen::MatrixXd samples;          // r_max x n
  double orthonormality_residual = 0.0;
  std::vector<std::string> warnings;

  Eigen::VectorXcd state(int r) const;
};

BasisFamily hermite_basis(const GridSpec& grid, int r_max);

cplx inner_h(const Eigen::VectorXcd& phi, const Eigen::VectorXcd& psi,
             const GridSpec& grid);

}  // namespace phasespace
