#pragma once

#include <string>
#include <vector>

#include "phasespace/grid.hpp"

namespace phasespace {

/// Operator kernel samples, entry (i,j) = A_K(x_i, x_j).
struct KernelMatrix {
  GridSpec grid;
  Eigen::MatrixXcd entries;

  static KernelMatrix zeros(const GridSpec& g);
  static KernelMatrix identity_over_dx(const GridSpec& g);

  double hermitian_defect() const;
  bool is_hermitian(double tol = 1e-12) const { return hermitian_defect() <= tol; }
  /// sqrt(Tr(A^dagger A)) dx, the discrete Hilbert-Schmidt norm.
  double hs_norm() const;
};

// Row s of a PhaseFunction sits at q_s = (s - n) dx / 2.  Even rows collect
// the kernel anti-diagonals with even offset j - i, odd rows the odd ones.
// Even rows are periodic in p with period n dp, odd rows anti-periodic.
enum class CenterLayout { interleaved };

/// Phase-space samples A(q_s, p_k) on a (2n) x n grid.
struct PhaseFunction {
  GridSpec grid;
  Eigen::MatrixXcd values;
  CenterLayout layout = CenterLayout::interleaved;

  static PhaseFunction zeros(const GridSpec& g);
  template <class F>
  static PhaseFunction sample(const GridSpec& g, F&& f) {
    PhaseFunction a = zeros(g);
    for (int s = 0; s < g.nq(); ++s)
      for (int k = 0; k < g.n; ++k) a.values(s, k) = f(g.q(s), g.p(k));
    return a;
  }

  double max_imag() const { return values.imag().cwiseAbs().maxCoeff(); }
  double max_abs() const { return values.cwiseAbs().maxCoeff(); }
  cplx integral() const;  // sum A * cell

  PhaseFunction conj() const;
  PhaseFunction operator+(const PhaseFunction& o) const;
  PhaseFunction operator-(const PhaseFunction& o) const;
  PhaseFunction operator*(cplx c) const;
};

struct StateVector {
  GridSpec grid;
  Eigen::VectorXcd psi;
};

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

PhaseFunction weyl_wigner(const KernelMatrix& K);
KernelMatrix weyl_wigner_inv(const PhaseFunction& A);

PhaseFunction z_map(const Eigen::MatrixXcd& f, const GridSpec& grid);
Eigen::MatrixXcd z_inv(const PhaseFunction& F);

/// (PA)(q,p) = A(q,-p).  Equals W(K^T) for A = W(K).
PhaseFunction parity(const PhaseFunction& A);

PhaseFunction wigner_of_state(const StateVector& psi,
                              std::vector<std::string>* warnings = nullptr);

/// Kernel phi(x) conj(psi(y)).
KernelMatrix rank_one(const Eigen::VectorXcd& phi, const Eigen::VectorXcd& psi,
                      const GridSpec& grid);

/// Phi_rs = W(e_r conj(e_s)).
PhaseFunction basis_function(const BasisFamily& basis, int r, int s);

/// (1/2pi) sum conj(A) B cell
cplx inner_k(const PhaseFunction& A, const PhaseFunction& B);

/// Tr(K1^dagger K2) dx^2, the kernel-side partner of inner_k.
cplx inner_kernel(const KernelMatrix& K1, const KernelMatrix& K2);

/// W(I/dx): the identity element of the discrete star algebra.
PhaseFunction star_identity(const GridSpec& grid);

}  // namespace phasespace
