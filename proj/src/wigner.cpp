#include "phasespace/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wigner_detail.hpp"

namespace phasespace {

KernelMatrix KernelMatrix::zeros(const GridSpec& g) {
  return {g, Eigen::MatrixXcd::Zero(g.n, g.n)};
}

KernelMatrix KernelMatrix::identity_over_dx(const GridSpec& g) {
  return {g, Eigen::MatrixXcd::Identity(g.n, g.n) / g.dx};
}

double KernelMatrix::hermitian_defect() const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double KernelMatrix::hs_norm() const {
  return std::sqrt(entries.cwiseAbs2().sum()) * grid.dx;
}

PhaseFunction PhaseFunction::zeros(const GridSpec& g) {
  PhaseFunction a;
  a.grid = g;
  a.values = Eigen::MatrixXcd::Zero(g.nq(), g.n);
  return a;
}

cplx PhaseFunction::integral() const { return values.sum() * grid.cell(); }

PhaseFunction PhaseFunction::conj() const {
  PhaseFunction a = *this;
  a.values = values.conjugate();
  return a;
}

PhaseFunction PhaseFunction::operator+(const PhaseFunction& o) const {
  require_same_grid(grid, o.grid, "PhaseFunction +");
  PhaseFunction a = *this;
  a.values += o.values;
  return a;
}

PhaseFunction PhaseFunction::operator-(const PhaseFunction& o) const {
  require_same_grid(grid, o.grid, "PhaseFunction -");
  PhaseFunction a = *this;
  a.values -= o.values;
  return a;
}

PhaseFunction PhaseFunction::operator*(cplx c) const {
  PhaseFunction a = *this;
  a.values *= c;
  return a;
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

namespace detail {

OffsetTables::OffsetTables(int n_) : n(n_) {
  std::vector<cplx> roots(2 * n);
  for (int m = 0; m < 2 * n; ++m) {
    const double t = std::numbers::pi * m / n;
    roots[m] = {std::cos(t), std::sin(t)};
  }
  for (int par = 0; par < 2; ++par) {
    Eigen::MatrixXcd& t = table[par];
    t.resize(n, n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        // p_k d dx = pi (k - n/2) d / n, reduced exactly mod 2n
        long m = long(k - n / 2) * offset(par, l);
        m %= 2 * n;
        if (m < 0) m += 2 * n;
        t(k, l) = roots[m];
      }
    adjoint[par] = t.adjoint();
  }
}

}  // namespace detail

PhaseFunction weyl_wigner(const KernelMatrix& K) {
  const GridSpec& g = K.grid;
  const int n = g.n;
  if (K.entries.rows() != n || K.entries.cols() != n)
    throw std::invalid_argument("weyl_wigner: kernel shape does not match grid");
  const detail::OffsetTables tab(n);
  PhaseFunction A = PhaseFunction::zeros(g);
  const double scale = 2.0 * g.dx;

#pragma omp parallel for schedule(static)
  for (int s = 0; s < 2 * n; ++s) {
    const int par = s & 1;
    Eigen::VectorXcd r(n);
    for (int l = 0; l < n; ++l) {
      const int d = tab.offset(par, l);
      const int i = (s - d) / 2, j = (s + d) / 2;
      r(l) = (i >= 0 && i < n && j >= 0 && j < n) ? K.entries(i, j) : cplx(0.0);
    }
    A.values.row(s) = (scale * (tab.table[par] * r)).transpose();
  }
  return A;
}

KernelMatrix weyl_wigner_inv(const PhaseFunction& A) {
  if (A.layout != CenterLayout::interleaved)
    throw std::invalid_argument("weyl_wigner_inv: unsupported center layout");
  const GridSpec& g = A.grid;
  const int n = g.n;
  if (A.values.rows() != 2 * n || A.values.cols() != n)
    throw std::invalid_argument("weyl_wigner_inv: array shape does not match grid");
  const detail::OffsetTables tab(n);
  KernelMatrix K = KernelMatrix::zeros(g);
  const double scale = 1.0 / (2.0 * g.dx * n);

#pragma omp parallel for schedule(static)
  for (int s = 0; s < 2 * n; ++s) {
    const int par = s & 1;
    Eigen::VectorXcd r = scale * (tab.adjoint[par] * A.values.row(s).transpose());
    for (int l = 0; l < n; ++l) {
      const int d = tab.offset(par, l);
      const int i = (s - d) / 2, j = (s + d) / 2;
      // every (i,j) is reached by exactly one (s,l), so rows never collide
      if (i >= 0 && i < n && j >= 0 && j < n) K.entries(i, j) = r(l);
    }
  }
  return K;
}

PhaseFunction z_map(const Eigen::MatrixXcd& f, const GridSpec& grid) {
  return weyl_wigner(KernelMatrix{grid, f});
}

Eigen::MatrixXcd z_inv(const PhaseFunction& F) { return weyl_wigner_inv(F).entries; }

PhaseFunction parity(const PhaseFunction& A) {
  const GridSpec& g = A.grid;
  const int n = g.n;
  PhaseFunction out = PhaseFunction::zeros(g);
  for (int s = 0; s < 2 * n; ++s) {
    // k = 0 sits at p = -n dp / 2; its mirror is the wrapped point, where odd
    // rows pick up the anti-periodic sign
    const double wrap = (s & 1) ? -1.0 : 1.0;
    out.values(s, 0) = wrap * A.values(s, 0);
    for (int k = 1; k < n; ++k) out.values(s, k) = A.values(s, n - k);
  }
  return out;
}

KernelMatrix rank_one(const Eigen::VectorXcd& phi, const Eigen::VectorXcd& psi,
                      const GridSpec& grid) {
  if (phi.size() != grid.n || psi.size() != grid.n)
    throw std::invalid_argument("rank_one: length mismatch");
  return {grid, phi * psi.adjoint()};
}

PhaseFunction wigner_of_state(const StateVector& psi, std::vector<std::string>* warnings) {
  const double norm = inner_h(psi.psi, psi.psi, psi.grid).real();
  if (std::abs(norm - 1.0) > 1e-6 && warnings)
    warnings->push_back("state norm " + std::to_string(norm) + " differs from 1");
  PhaseFunction W = weyl_wigner(rank_one(psi.psi, psi.psi, psi.grid));
  W.values *= 1.0 / (2.0 * std::numbers::pi);
  return W;
}

PhaseFunction basis_function(const BasisFamily& basis, int r, int s) {
  return weyl_wigner(rank_one(basis.state(r), basis.state(s), basis.grid));
}

cplx inner_k(const PhaseFunction& A, const PhaseFunction& B) {
  require_same_grid(A.grid, B.grid, "inner_k");
  return (A.values.conjugate().cwiseProduct(B.values)).sum() * A.grid.cell() /
         (2.0 * std::numbers::pi);
}

cplx inner_kernel(const KernelMatrix& K1, const KernelMatrix& K2) {
  require_same_grid(K1.grid, K2.grid, "inner_kernel");
  return (K1.entries.conjugate().cwiseProduct(K2.entries)).sum() * K1.grid.dx *
         K1.grid.dx;
}

PhaseFunction star_identity(const GridSpec& grid) {
  return weyl_wigner(KernelMatrix::identity_over_dx(grid));
}

}  // namespace phasespace
