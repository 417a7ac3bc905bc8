#include "phasespace/star.hpp"

#include <cmath>
#include <numbers>

namespace phasespace {

PhaseFunction star(const PhaseFunction& A, const PhaseFunction& B) {
  require_same_grid(A.grid, B.grid, "star");
  KernelMatrix KA = weyl_wigner_inv(A);
  KernelMatrix KB = weyl_wigner_inv(B);
  KernelMatrix KC{A.grid, (KA.entries * KB.entries) * A.grid.dx};
  return weyl_wigner(KC);
}

namespace {

// E(k, t) = exp(-i pi (k - n/2) t / n) for t = -(2n-1)..(2n-1), column t + 2n - 1.
// 2 p_k (t dq) reduces to that angle exactly.
Eigen::MatrixXcd twist_table(int n) {
  const int nt = 4 * n - 1;
  std::vector<cplx> roots(2 * n);
  for (int m = 0; m < 2 * n; ++m) {
    const double a = std::numbers::pi * m / n;
    roots[m] = {std::cos(a), -std::sin(a)};
  }
  Eigen::MatrixXcd E(n, nt);
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < nt; ++c) {
      long m = long(k - n / 2) * (c - (2 * n - 1));
      m %= 2 * n;
      if (m < 0) m += 2 * n;
      E(k, c) = roots[m];
    }
  return E;
}

}  // namespace

PhaseFunction star_twisted_oracle(const PhaseFunction& A, const PhaseFunction& B) {
  require_same_grid(A.grid, B.grid, "star_twisted_oracle");
  const GridSpec& g = A.grid;
  const int n = g.n, nq = 2 * n, off = 2 * n - 1;
  const Eigen::MatrixXcd E = twist_table(n);
  // hatA(s2, t) = sum_k A(s2,k) exp(-2i p_k t dq) dp
  const Eigen::MatrixXcd hatA = A.values * E * g.dp;
  const Eigen::MatrixXcd hatB = B.values * E * g.dp;
  const double pref = g.dq() * g.dq() / (std::numbers::pi * std::numbers::pi);

  PhaseFunction out = PhaseFunction::zeros(g);
#pragma omp parallel for schedule(static)
  for (int s1 = 0; s1 < nq; ++s1) {
    Eigen::VectorXcd G = Eigen::VectorXcd::Zero(2 * nq - 1);
    for (int s2 = 0; s2 < nq; ++s2)
      for (int s3 = 0; s3 < nq; ++s3)
        G(s2 - s3 + off) += hatA(s2, s3 - s1 + off) * hatB(s3, s1 - s2 + off);
    out.values.row(s1) = (pref * (E * G)).transpose();
  }
  return out;
}

PhaseFunction moyal_bracket(const PhaseFunction& A, const PhaseFunction& B) {
  return (star(A, B) - star(B, A)) * cplx(0.0, -1.0);
}

PurityResidual purity_residual(const PhaseFunction& W) {
  const double two_pi = 2.0 * std::numbers::pi;
  PurityResidual r;
  PhaseFunction WW = star(W, W);
  r.r1 = (WW.values - W.values / two_pi).cwiseAbs().maxCoeff();
  const double cell = W.grid.cell();
  r.square_term = std::abs(two_pi * W.values.cwiseAbs2().sum() * cell - 1.0);
  r.norm_term = std::abs(W.values.sum().real() * cell - 1.0);
  r.r2 = r.square_term + r.norm_term;
  return r;
}

double star_unitary_residual(const PhaseFunction& U) {
  const PhaseFunction id = star_identity(U.grid);
  const PhaseFunction Uc = U.conj();
  const double a = (star(U, Uc).values - id.values).cwiseAbs().maxCoeff();
  const double b = (star(Uc, U).values - id.values).cwiseAbs().maxCoeff();
  return std::max(a, b);
}

}  // namespace phasespace
