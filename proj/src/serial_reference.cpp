#include "phasespace/serial_reference.hpp"

#include <cmath>
#include <numbers>

#include "autv_detail.hpp"

namespace phasespace::reference {

namespace {
constexpr double kPi = std::numbers::pi;
}

PhaseFunction weyl_wigner(const KernelMatrix& K) {
  const GridSpec& g = K.grid;
  const int n = g.n;
  PhaseFunction A = PhaseFunction::zeros(g);
  for (int s = 0; s < 2 * n; ++s)
    for (int k = 0; k < n; ++k) {
      cplx acc = 0.0;
      for (int i = 0; i < n; ++i) {
        const int j = s - i;
        if (j < 0 || j >= n) continue;
        const double y = (j - i) * g.dx;
        acc += K.entries(i, j) * std::polar(1.0, g.p(k) * y);
      }
      A.values(s, k) = 2.0 * g.dx * acc;
    }
  return A;
}

KernelMatrix weyl_wigner_inv(const PhaseFunction& A) {
  const GridSpec& g = A.grid;
  const int n = g.n;
  KernelMatrix K = KernelMatrix::zeros(g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int s = i + j;
      const double y = (j - i) * g.dx;
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k) acc += A.values(s, k) * std::polar(1.0, -g.p(k) * y);
      K.entries(i, j) = acc / (2.0 * g.dx * n);
    }
  return K;
}

PhaseFunction star_twisted_direct(const PhaseFunction& A, const PhaseFunction& B) {
  const GridSpec& g = A.grid;
  const int nq = g.nq(), np = g.n;
  PhaseFunction out = PhaseFunction::zeros(g);
  const double w = g.cell() * g.cell() / (kPi * kPi);
  for (int s1 = 0; s1 < nq; ++s1)
    for (int k1 = 0; k1 < np; ++k1) {
      const double q1 = g.q(s1), p1 = g.p(k1);
      cplx acc = 0.0;
      for (int s2 = 0; s2 < nq; ++s2)
        for (int k2 = 0; k2 < np; ++k2) {
          const cplx a = A.values(s2, k2);
          if (a == 0.0) continue;
          const double q2 = g.q(s2), p2 = g.p(k2);
          for (int s3 = 0; s3 < nq; ++s3)
            for (int k3 = 0; k3 < np; ++k3) {
              const double q3 = g.q(s3), p3 = g.p(k3);
              const double th = p1 * (q2 - q3) + p2 * (q3 - q1) + p3 * (q1 - q2);
              acc += a * B.values(s3, k3) * std::polar(1.0, -2.0 * th);
            }
        }
      out.values(s1, k1) = w * acc;
    }
  return out;
}

AlphaKernel alpha_kernel_direct(const PhaseFunction& At, const AlphaAxes& axes) {
  const GridSpec& g = At.grid;
  const int m = axes.n;
  AlphaKernel K(axes);
  const double pref = 2.0 / (kPi * kPi) * g.cell();
  for (int j1 = 0; j1 < m; ++j1)
    for (int k1 = 0; k1 < m; ++k1)
      for (int j2 = 0; j2 < m; ++j2)
        for (int k2 = 0; k2 < m; ++k2) {
          const double q1 = axes.coord(j1), p1 = axes.coord(k1);
          const double q2 = axes.coord(j2), p2 = axes.coord(k2);
          double acc = 0.0;
          for (int s = 0; s < g.nq(); ++s)
            for (int k = 0; k < g.n; ++k) {
              const double q3 = g.q(s), p3 = g.p(k);
              const double th =
                  2.0 * (p1 * (q2 - q3) + p2 * (q3 - q1) + p3 * (q1 - q2));
              acc += std::sin(th) * At.values(s, k).real();
            }
          K.at(j1, k1, j2, k2) = cplx(0.0, pref * acc);
        }
  return K;
}

AutvReport autv_residual(const RFunction& R, const AutvOptions& opt) {
  const auto pts = detail::probe_lattice(opt);
  const QuadratureBox box = detail::autv_box(R, opt);
  std::vector<double> mis(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) mis[i] = detail::probe_mismatch(R, pts[i], box);
  return detail::finish_report(mis, pts, box, opt);
}

}  // namespace phasespace::reference
