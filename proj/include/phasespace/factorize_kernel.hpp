#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "phasespace/wigner.hpp"

namespace phasespace {

/// Single-density square axes used for four-index kernels:
/// q_j = (j - n/2) h and p_k = (k - n/2) h.
struct AlphaAxes {
  int n = 0;
  double h = 0.0;
  double coord(int j) const { return (j - n / 2) * h; }
  /// index of c on the axis, or -1 when c is not a lattice point (or outside)
  int index_of(double c, bool* off_lattice = nullptr) const;
};

AlphaAxes make_alpha_axes(int n, double h);

/// Decay scales of a Gaussian-type R(u,v,...) ~ exp(-u^2/tau - v^2/sigma).
struct GaussianDecay {
  double tau = 1.0;
  double sigma = 1.0;
};

using Kernel4 = std::function<cplx(double, double, double, double)>;

/// alpha_K(q1,p1,q2,p2) on AlphaAxes, optionally backed by a closure.
class AlphaKernel {
 public:
  AlphaKernel() = default;
  explicit AlphaKernel(AlphaAxes axes);

  const AlphaAxes& axes() const { return axes_; }
  cplx& at(int j1, int k1, int j2, int k2) { return data_[flat(j1, k1, j2, k2)]; }
  cplx at(int j1, int k1, int j2, int k2) const { return data_[flat(j1, k1, j2, k2)]; }

  /// closure if present, otherwise exact lattice lookup (throws off-lattice;
  /// zero outside the sampled window)
  cplx evaluate(double q1, double p1, double q2, double p2) const;

  bool has_closure() const { return static_cast<bool>(closure_); }
  void set_closure(Kernel4 f, std::optional<GaussianDecay> decay) {
    closure_ = std::move(f);
    decay_ = decay;
  }
  const std::optional<GaussianDecay>& decay() const { return decay_; }

  /// max of |conj(a(1,2)) - a(2,1)| and |a(2,1) + a(1,2)| over the samples
  double constraint_residual() const;
  double max_abs() const;

 private:
  std::size_t flat(int j1, int k1, int j2, int k2) const {
    const std::size_t n = axes_.n;
    return ((std::size_t(j1) * n + k1) * n + j2) * n + k2;
  }
  AlphaAxes axes_;
  std::vector<cplx> data_;
  Kernel4 closure_;
  std::optional<GaussianDecay> decay_;
};

struct GaussianAlphaSpec {
  double tau = 1.0;
  double sigma = 1.0;
  int epsilon = 1;
  void validate() const;
};

/// i sin[(1+e)(p1 q2 - p2 q1) - (1-e)(q1 p1 - q2 p2)] exp(-(q1-q2)^2/tau - (p1-p2)^2/sigma)
cplx gaussian_alpha(const GaussianAlphaSpec& spec, double q1, double p1, double q2,
                    double p2);
/// i sin(u v' + e u' v) exp(-u^2/tau - v^2/sigma)
cplx gaussian_R(const GaussianAlphaSpec& spec, double u, double v, double up, double vp);

/// Closed form of int sin(v x + u y) R(u,v,u',v') du dv for the Gaussian R.
cplx gaussian_sine_transform(const GaussianAlphaSpec& spec, double x, double y,
                             double up, double vp);

AlphaKernel gaussian_alpha_kernel(const GaussianAlphaSpec& spec, const AlphaAxes& axes);

/// (2i/pi^2) int sin(2[p1(q2-q3) + p2(q3-q1) + p3(q1-q2)]) A~(q3,p3) dq3 dp3
/// on the given axes.  A~ must be real.
AlphaKernel alpha_kernel_from_A(const PhaseFunction& A_tilde, const AlphaAxes& axes);

/// R(u,v,u',v') = alpha_K((u'-u)/2, (v'+v)/2, (u'+u)/2, (v'-v)/2)
class RFunction {
 public:
  static RFunction analytic(Kernel4 f, std::optional<GaussianDecay> decay = {});
  static RFunction gridded(std::shared_ptr<const AlphaKernel> alpha);
  static RFunction zero();

  cplx operator()(double u, double v, double up, double vp) const;
  bool has_closure() const { return static_cast<bool>(closure_); }
  const std::optional<GaussianDecay>& decay() const { return decay_; }
  const AlphaKernel* lattice() const { return alpha_.get(); }

  /// max |R(-u,-v,u',v') + R(u,v,u',v')| over a probe lattice
  double oddness_residual(int probes = 5, double half_width = 2.0) const;

 private:
  Kernel4 closure_;
  std::shared_ptr<const AlphaKernel> alpha_;
  std::optional<GaussianDecay> decay_;
};

RFunction kernel_to_R(const AlphaKernel& alpha);

/// Trapezoid box [-Lu,Lu] x [-Lv,Lv] with steps hu, hv.
struct QuadratureBox {
  double Lu = 8.0, Lv = 8.0;
  double hu = 0.05, hv = 0.05;
  int nu() const;
  int nv() const;
};

/// Box for integrands sin(w_u u + ...) R with R decaying like `decay`;
/// w_u and w_v bound the oscillation frequencies in u and v.
QuadratureBox choose_box(const std::optional<GaussianDecay>& decay, double w_u,
                         double w_v);

/// int sin(v x + u y) R(u,v,u',v') du dv by the trapezoid rule.
cplx sine_transform(const RFunction& R, double x, double y, double up, double vp,
                    const QuadratureBox& box);

struct AutvOptions {
  int probes_per_axis = 5;
  double probe_half_width = 2.0;
  std::optional<QuadratureBox> box;
};

struct AutvReport {
  double residual = 0.0;
  std::array<double, 4> worst_probe{};  // (x, y, u', v')
  QuadratureBox box;
  int probes_per_axis = 0;
  double probe_half_width = 0.0;
};

/// max over the probe lattice of |LHS - RHS| of the consistency identity
///   J(x,y,u',v') = J(X+,Y+,X+,Y+) - J(X-,Y-,X-,Y-),  X+- = (u' +- x)/2, Y+- = (v' +- y)/2
/// with J the sine transform above.
AutvReport autv_residual(const RFunction& R, const AutvOptions& opt = {});

class GateRefused : public std::runtime_error {
 public:
  GateRefused(double residual, double threshold);
  double residual;
  double threshold;
};

struct RecoveryOptions {
  double threshold = 1e-6;
  bool override_gate = false;
  AutvOptions autv;
};

struct Recovery {
  PhaseFunction A;
  AutvReport gate;
  bool admitted = false;  // residual below threshold
  QuadratureBox box;
};

/// A(x,y) = a + i int sin(v x + u y) R(u,v,x,y) du dv on the phase grid.
/// Throws GateRefused when the residual exceeds the threshold and the
/// override is not set.
Recovery recover_A(const RFunction& R, double a, const GridSpec& grid,
                   const RecoveryOptions& opt = {});

/// Same inversion for gridded R, evaluated on the alpha lattice; the u and v
/// sums run over the offsets that keep every kernel argument on the lattice.
/// Result(j,k) = A(q_j, p_k).
Eigen::MatrixXcd recover_A_on_lattice(const RFunction& R, double a);

/// max |alpha_kernel_from_A(A) - reference| over the axes
double xi_consistency(const PhaseFunction& A, const AlphaKernel& reference);

}  // namespace phasespace
