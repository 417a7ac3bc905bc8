#pragma once

// Straightforward single-threaded versions of the parallel kernels.  They
// evaluate every phase factor with std::polar and share no tables with the
// production code, so the tests use them as independent references and the
// benchmark compares against them.

#include "phasespace/factorize_kernel.hpp"
#include "phasespace/wigner.hpp"

namespace phasespace::reference {

PhaseFunction weyl_wigner(const KernelMatrix& K);
KernelMatrix weyl_wigner_inv(const PhaseFunction& A);

/// Full four-fold sum of the star integral.  O(n^6); small grids only.
PhaseFunction star_twisted_direct(const PhaseFunction& A, const PhaseFunction& B);

/// Direct sine-kernel quadrature, no separable factoring.  O(m^4 n^2).
AlphaKernel alpha_kernel_direct(const PhaseFunction& A_tilde, const AlphaAxes& axes);

/// Same probe lattice and quadrature as factorize_kernel's autv_residual,
/// evaluated without OpenMP.
AutvReport autv_residual(const RFunction& R, const AutvOptions& opt = {});

}  // namespace phasespace::reference
