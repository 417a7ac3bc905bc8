#pragma once

#include "phasespace/wigner.hpp"

namespace phasespace {

/// A * B = W(W^-1(A) W^-1(B) dx).
PhaseFunction star(const PhaseFunction& A, const PhaseFunction& B);

/// Direct quadrature of the double phase-space integral
///   (1/pi^2) int A(2) B(3) exp(-2i[p1(q2-q3) + p2(q3-q1) + p3(q1-q2)]).
/// The p2 and p3 integrals are done first, which turns the remaining
/// (q2,q3) sum into a sum over q2 - q3.  Cross-check only.
PhaseFunction star_twisted_oracle(const PhaseFunction& A, const PhaseFunction& B);

/// -i (A*B - B*A)
PhaseFunction moyal_bracket(const PhaseFunction& A, const PhaseFunction& B);

struct PurityResidual {
  double r1 = 0.0;  // max |W*W - W/2pi|
  double r2 = 0.0;  // |2pi sum W^2 cell - 1| + |sum W cell - 1|
  double square_term = 0.0;
  double norm_term = 0.0;
};

PurityResidual purity_residual(const PhaseFunction& W);

/// max over both orders of |U * conj(U) - W(I/dx)|.
double star_unitary_residual(const PhaseFunction& U);

}  // namespace phasespace
