#include "phasespace/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace phasespace {

std::vector<double> GridSpec::x_axis() const {
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = x(j);
  return v;
}

std::vector<double> GridSpec::q_axis() const {
  std::vector<double> v(nq());
  for (int s = 0; s < nq(); ++s) v[s] = q(s);
  return v;
}

std::vector<double> GridSpec::p_axis() const {
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = p(k);
  return v;
}

GridSpec make_grid(int n, double dx) {
  if (n % 2 != 0) throw std::invalid_argument("n must be even");
  if (n < 4) throw std::invalid_argument("n must be at least 4");
  if (!(dx > 0.0) || !std::isfinite(dx))
    throw std::invalid_argument("dx must be positive");
  GridSpec g;
  g.n = n;
  g.dx = dx;
  g.dp = std::numbers::pi / (n * dx);
  return g;
}

Eigen::VectorXcd BasisFamily::state(int r) const {
  if (r < 0 || r >= r_max)
    throw std::out_of_range("basis index " + std::to_string(r) +
                            " outside [0, " + std::to_string(r_max) + ")");
  return samples.row(r).transpose().cast<cplx>();
}

BasisFamily hermite_basis(const GridSpec& grid, int r_max) {
  if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
  BasisFamily b;
  b.grid = grid;
  b.r_max = r_max;
  b.samples.resize(r_max, grid.n);

  const double wanted = std::sqrt(2.0 * r_max) + 4.0;
  if (grid.half_width() < wanted) {
    std::ostringstream os;
    os << "grid half-width " << grid.half_width() << " below recommended "
       << wanted << " for r_max=" << r_max;
    b.warnings.push_back(os.str());
  }

  // normalized recurrence:
  // e_{k+1} = sqrt(2/(k+1)) x e_k - sqrt(k/(k+1)) e_{k-1}
  const double c0 = std::pow(std::numbers::pi, -0.25);
  for (int j = 0; j < grid.n; ++j) {
    const double x = grid.x(j);
    double em1 = 0.0;
    double e = c0 * std::exp(-0.5 * x * x);
    b.samples(0, j) = e;
    for (int k = 0; k + 1 < r_max; ++k) {
      const double next = std::sqrt(2.0 / (k + 1)) * x * e -
                          std::sqrt(double(k) / (k + 1)) * em1;
      em1 = e;
      e = next;
      b.samples(k + 1, j) = e;
    }
  }

  Eigen::MatrixXd gram = b.samples * b.samples.transpose() * grid.dx;
  b.orthonormality_residual =
      (gram - Eigen::MatrixXd::Identity(r_max, r_max)).cwiseAbs().maxCoeff();
  return b;
}

cplx inner_h(const Eigen::VectorXcd& phi, const Eigen::VectorXcd& psi,
             const GridSpec& grid) {
  if (phi.size() != psi.size() || phi.size() != grid.n)
    throw std::invalid_argument("inner_h: length mismatch");
  return phi.dot(psi) * grid.dx;  // Eigen dot conjugates the left operand
}

}  // namespace phasespace
