#include "phasespace/factorize_kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "autv_detail.hpp"

namespace phasespace {

namespace {
constexpr double kPi = std::numbers::pi;
}

int AlphaAxes::index_of(double c, bool* off_lattice) const {
  const double t = c / h + n / 2;
  const double j = std::round(t);
  const bool off = std::abs(t - j) > 1e-9 * std::max(1.0, std::abs(t));
  if (off_lattice) *off_lattice = off;
  if (off || j < 0 || j >= n) return -1;
  return static_cast<int>(j);
}

AlphaAxes make_alpha_axes(int n, double h) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("alpha axes: n must be even");
  if (n > 32) throw std::invalid_argument("alpha axes: n > 32 exceeds the dense limit");
  if (!(h > 0.0)) throw std::invalid_argument("alpha axes: spacing must be positive");
  return {n, h};
}

AlphaKernel::AlphaKernel(AlphaAxes axes) : axes_(axes) {
  const std::size_t n = axes.n;
  data_.assign(n * n * n * n, cplx(0.0));
}

cplx AlphaKernel::evaluate(double q1, double p1, double q2, double p2) const {
  if (closure_) return closure_(q1, p1, q2, p2);
  const double c[4] = {q1, p1, q2, p2};
  int idx[4];
  for (int a = 0; a < 4; ++a) {
    bool off = false;
    idx[a] = axes_.index_of(c[a], &off);
    if (off) {
      std::ostringstream os;
      os << "gridded alpha kernel evaluated off its lattice (coordinate " << c[a]
         << ", spacing " << axes_.h
         << "); resample on a grid whose spacing divides the requested offsets, "
            "or supply an analytic closure";
      throw std::domain_error(os.str());
    }
    if (idx[a] < 0) return 0.0;
  }
  return at(idx[0], idx[1], idx[2], idx[3]);
}

double AlphaKernel::constraint_residual() const {
  const int n = axes_.n;
  double worst = 0.0;
  for (int j1 = 0; j1 < n; ++j1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int j2 = 0; j2 < n; ++j2)
        for (int k2 = 0; k2 < n; ++k2) {
          const cplx a12 = at(j1, k1, j2, k2), a21 = at(j2, k2, j1, k1);
          worst = std::max({worst, std::abs(std::conj(a12) - a21), std::abs(a21 + a12)});
        }
  return worst;
}

double AlphaKernel::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

void GaussianAlphaSpec::validate() const {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
}

cplx gaussian_alpha(const GaussianAlphaSpec& s, double q1, double p1, double q2,
                    double p2) {
  const double e = s.epsilon;
  const double arg = (1 + e) * (p1 * q2 - p2 * q1) - (1 - e) * (q1 * p1 - q2 * p2);
  const double dq = q1 - q2, dp = p1 - p2;
  return {0.0, std::sin(arg) * std::exp(-dq * dq / s.tau - dp * dp / s.sigma)};
}

cplx gaussian_R(const GaussianAlphaSpec& s, double u, double v, double up, double vp) {
  return {0.0, std::sin(u * vp + s.epsilon * up * v) *
                   std::exp(-u * u / s.tau - v * v / s.sigma)};
}

cplx gaussian_sine_transform(const GaussianAlphaSpec& s, double x, double y, double up,
                             double vp) {
  // sin a sin b = (cos(a-b) - cos(a+b))/2 and
  // int cos(A v + B u) exp(-u^2/tau - v^2/sigma) = pi sqrt(tau sigma) exp(-B^2 tau/4 - A^2 sigma/4)
  const double e = s.epsilon;
  const double amp = 0.5 * kPi * std::sqrt(s.tau * s.sigma);
  const double bm = y - vp, am = x - e * up;
  const double bp = y + vp, ap = x + e * up;
  const double val = amp * (std::exp(-bm * bm * s.tau / 4 - am * am * s.sigma / 4) -
                            std::exp(-bp * bp * s.tau / 4 - ap * ap * s.sigma / 4));
  return {0.0, val};
}

AlphaKernel gaussian_alpha_kernel(const GaussianAlphaSpec& spec, const AlphaAxes& axes) {
  spec.validate();
  AlphaKernel K(axes);
  const int n = axes.n;
#pragma omp parallel for schedule(static)
  for (int j1 = 0; j1 < n; ++j1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int j2 = 0; j2 < n; ++j2)
        for (int k2 = 0; k2 < n; ++k2)
          K.at(j1, k1, j2, k2) = gaussian_alpha(spec, axes.coord(j1), axes.coord(k1),
                                                axes.coord(j2), axes.coord(k2));
  K.set_closure(
      [spec](double q1, double p1, double q2, double p2) {
        return gaussian_alpha(spec, q1, p1, q2, p2);
      },
      GaussianDecay{spec.tau, spec.sigma});
  return K;
}

AlphaKernel alpha_kernel_from_A(const PhaseFunction& At, const AlphaAxes& axes) {
  if (At.max_imag() > 1e-10 * std::max(1.0, At.max_abs()))
    throw std::invalid_argument("alpha_kernel_from_A: input must be real");
  const GridSpec& g = At.grid;
  const int m = axes.n, nd = 2 * m - 1;
  const double h = axes.h;

  // theta = 2(p1 q2 - p2 q1) + 2 q3 (p2 - p1) + 2 p3 (q1 - q2); the q3 and p3
  // frequencies are 2h times integer lattice differences, so the transform
  // factors into two one-dimensional sums.
  Eigen::MatrixXcd Ep(g.n, nd), Eq(g.nq(), nd);
  for (int c = 0; c < nd; ++c) {
    const double w = 2.0 * h * (c - (m - 1));
    for (int k = 0; k < g.n; ++k) Ep(k, c) = std::polar(1.0, w * g.p(k));
    for (int s = 0; s < g.nq(); ++s) Eq(s, c) = std::polar(1.0, w * g.q(s));
  }
  const Eigen::MatrixXcd G = At.values.real().cast<cplx>() * Ep * g.dp;  // (s, dj)
  const Eigen::MatrixXcd F = Eq.transpose() * G * g.dq();                // (dk, dj)

  AlphaKernel K(axes);
  const double pref = 2.0 / (kPi * kPi);
#pragma omp parallel for schedule(static)
  for (int j1 = 0; j1 < m; ++j1)
    for (int k1 = 0; k1 < m; ++k1)
      for (int j2 = 0; j2 < m; ++j2)
        for (int k2 = 0; k2 < m; ++k2) {
          const double q1 = axes.coord(j1), p1 = axes.coord(k1);
          const double q2 = axes.coord(j2), p2 = axes.coord(k2);
          const cplx ph = std::polar(1.0, 2.0 * (p1 * q2 - p2 * q1));
          const cplx f = F(k2 - k1 + m - 1, j1 - j2 + m - 1);
          K.at(j1, k1, j2, k2) = cplx(0.0, pref * (ph * f).imag());
        }
  return K;
}

RFunction RFunction::analytic(Kernel4 f, std::optional<GaussianDecay> decay) {
  RFunction r;
  r.closure_ = std::move(f);
  r.decay_ = decay;
  return r;
}

RFunction RFunction::gridded(std::shared_ptr<const AlphaKernel> alpha) {
  RFunction r;
  r.alpha_ = std::move(alpha);
  r.decay_ = r.alpha_->decay();
  return r;
}

RFunction RFunction::zero() {
  return analytic([](double, double, double, double) { return cplx(0.0); },
                  GaussianDecay{1.0, 1.0});
}

cplx RFunction::operator()(double u, double v, double up, double vp) const {
  if (closure_) return closure_(u, v, up, vp);
  if (!alpha_) return 0.0;
  return alpha_->evaluate(0.5 * (up - u), 0.5 * (vp + v), 0.5 * (up + u), 0.5 * (vp - v));
}

double RFunction::oddness_residual(int probes, double half_width) const {
  double worst = 0.0;
  const double step = probes > 1 ? 2.0 * half_width / (probes - 1) : 0.0;
  for (int a = 0; a < probes; ++a)
    for (int b = 0; b < probes; ++b)
      for (int c = 0; c < probes; ++c)
        for (int d = 0; d < probes; ++d) {
          const double u = -half_width + a * step, v = -half_width + b * step;
          const double up = -half_width + c * step, vp = -half_width + d * step;
          worst = std::max(worst, std::abs((*this)(-u, -v, up, vp) + (*this)(u, v, up, vp)));
        }
  return worst;
}

RFunction kernel_to_R(const AlphaKernel& alpha) {
  if (alpha.has_closure()) {
    auto keep = std::make_shared<AlphaKernel>(alpha);
    return RFunction::analytic(
        [keep](double u, double v, double up, double vp) {
          return keep->evaluate(0.5 * (up - u), 0.5 * (vp + v), 0.5 * (up + u),
                                0.5 * (vp - v));
        },
        alpha.decay());
  }
  return RFunction::gridded(std::make_shared<AlphaKernel>(alpha));
}

int QuadratureBox::nu() const { return static_cast<int>(std::ceil(2.0 * Lu / hu - 1e-9)); }
int QuadratureBox::nv() const { return static_cast<int>(std::ceil(2.0 * Lv / hv - 1e-9)); }

QuadratureBox choose_box(const std::optional<GaussianDecay>& decay, double w_u,
                         double w_v) {
  QuadratureBox b;
  if (decay) {
    // tails below exp(-40); aliasing error ~ exp(-(2 pi/h - w)^2 tau / 4) < exp(-40)
    b.Lu = std::sqrt(40.0 * decay->tau);
    b.Lv = std::sqrt(40.0 * decay->sigma);
    b.hu = 2.0 * kPi / (w_u + std::sqrt(160.0 / decay->tau));
    b.hv = 2.0 * kPi / (w_v + std::sqrt(160.0 / decay->sigma));
  }
  // snap the steps so that the nodes are symmetric about zero
  b.hu = 2.0 * b.Lu / b.nu();
  b.hv = 2.0 * b.Lv / b.nv();
  return b;
}

cplx sine_transform(const RFunction& R, double x, double y, double up, double vp,
                    const QuadratureBox& box) {
  return detail::sine_transform_serial(R, x, y, up, vp, box);
}

namespace detail {

cplx sine_transform_serial(const RFunction& R, double x, double y, double up, double vp,
                           const QuadratureBox& box) {
  const int nu = box.nu(), nv = box.nv();
  const double hu = 2.0 * box.Lu / nu, hv = 2.0 * box.Lv / nv;
  cplx acc = 0.0;
  for (int a = 0; a <= nu; ++a) {
    const double u = -box.Lu + a * hu;
    const double wa = (a == 0 || a == nu) ? 0.5 : 1.0;
    cplx row = 0.0;
    for (int b = 0; b <= nv; ++b) {
      const double v = -box.Lv + b * hv;
      const double wb = (b == 0 || b == nv) ? 0.5 : 1.0;
      row += wb * std::sin(v * x + u * y) * R(u, v, up, vp);
    }
    acc += wa * row;
  }
  return acc * hu * hv;
}

double probe_mismatch(const RFunction& R, const std::array<double, 4>& pr,
                      const QuadratureBox& box) {
  const auto [x, y, up, vp] = pr;
  const double Xp = 0.5 * (up + x), Yp = 0.5 * (vp + y);
  const double Xm = 0.5 * (up - x), Ym = 0.5 * (vp - y);
  const cplx lhs = sine_transform_serial(R, x, y, up, vp, box);
  const cplx rhs = sine_transform_serial(R, Xp, Yp, Xp, Yp, box) -
                   sine_transform_serial(R, Xm, Ym, Xm, Ym, box);
  return std::abs(lhs - rhs);
}

std::vector<std::array<double, 4>> probe_lattice(const AutvOptions& opt) {
  const int m = opt.probes_per_axis;
  const double w = opt.probe_half_width;
  const double step = m > 1 ? 2.0 * w / (m - 1) : 0.0;
  std::vector<std::array<double, 4>> pts;
  pts.reserve(std::size_t(m) * m * m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          pts.push_back({-w + a * step, -w + b * step, -w + c * step, -w + d * step});
  return pts;
}

QuadratureBox autv_box(const RFunction& R, const AutvOptions& opt) {
  if (opt.box) return *opt.box;
  // frequencies: y + v' in u, x + u' in v, bounded by twice the probe width
  const double w = 2.0 * opt.probe_half_width;
  return choose_box(R.decay(), w, w);
}

AutvReport finish_report(const std::vector<double>& mis,
                         const std::vector<std::array<double, 4>>& pts,
                         const QuadratureBox& box, const AutvOptions& opt) {
  AutvReport rep;
  rep.box = box;
  rep.probes_per_axis = opt.probes_per_axis;
  rep.probe_half_width = opt.probe_half_width;
  for (std::size_t i = 0; i < mis.size(); ++i)
    if (mis[i] > rep.residual) {
      rep.residual = mis[i];
      rep.worst_probe = pts[i];
    }
  return rep;
}

}  // namespace detail

AutvReport autv_residual(const RFunction& R, const AutvOptions& opt) {
  if (R.lattice() && !R.has_closure())
    throw std::invalid_argument(
        "autv_residual needs R at arbitrary half-sum arguments; pass the analytic "
        "closure (gridded kernels only support lattice-aligned evaluation)");
  const auto pts = detail::probe_lattice(opt);
  const QuadratureBox box = detail::autv_box(R, opt);
  std::vector<double> mis(pts.size());
  const long np = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < np; ++i) mis[i] = detail::probe_mismatch(R, pts[i], box);
  return detail::finish_report(mis, pts, box, opt);
}

GateRefused::GateRefused(double r, double t)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "consistency residual " << r << " exceeds threshold " << t
           << "; no observable reproduces this generator (use the override to recover anyway)";
        return os.str();
      }()),
      residual(r),
      threshold(t) {}

Recovery recover_A(const RFunction& R, double a, const GridSpec& grid,
                   const RecoveryOptions& opt) {
  Recovery out;
  out.gate = autv_residual(R, opt.autv);
  out.admitted = out.gate.residual < opt.threshold;
  if (!out.admitted && !opt.override_gate)
    throw GateRefused(out.gate.residual, opt.threshold);

  double qmax = 0.0, pmax = 0.0;
  for (int s = 0; s < grid.nq(); ++s) qmax = std::max(qmax, std::abs(grid.q(s)));
  for (int k = 0; k < grid.n; ++k) pmax = std::max(pmax, std::abs(grid.p(k)));
  // sin(v x + u y) R(u,v,x,y): frequency up to 2|y| in u and 2|x| in v
  out.box = choose_box(R.decay(), 2.0 * pmax, 2.0 * qmax);

  out.A = PhaseFunction::zeros(grid);
#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < grid.nq(); ++s)
    for (int k = 0; k < grid.n; ++k) {
      const double x = grid.q(s), y = grid.p(k);
      out.A.values(s, k) =
          a + cplx(0.0, 1.0) * detail::sine_transform_serial(R, x, y, x, y, out.box);
    }
  return out;
}

Eigen::MatrixXcd recover_A_on_lattice(const RFunction& R, double a) {
  const AlphaKernel* al = R.lattice();
  if (!al) throw std::invalid_argument("recover_A_on_lattice: R has no lattice data");
  const AlphaAxes ax = al->axes();
  const int n = ax.n, c = n / 2;
  const double h = ax.h, w = 4.0 * h * h;
  Eigen::MatrixXcd A(n, n);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const double x = ax.coord(j), y = ax.coord(k);
      cplx acc = 0.0;
      // u = x + 2hm, v = -y + 2hl  =>  q1 = -hm, p1 = hl, q2 = x + hm, p2 = y - hl
      for (int m = -n; m <= n; ++m) {
        const int j1 = c - m, j2 = j + m;
        if (j1 < 0 || j1 >= n || j2 < 0 || j2 >= n) continue;
        const double u = x + 2.0 * h * m;
        for (int l = -n; l <= n; ++l) {
          const int k1 = c + l, k2 = k - l;
          if (k1 < 0 || k1 >= n || k2 < 0 || k2 >= n) continue;
          const double v = -y + 2.0 * h * l;
          acc += std::sin(v * x + u * y) * al->at(j1, k1, j2, k2);
        }
      }
      A(j, k) = a + cplx(0.0, 1.0) * acc * w;
    }
  return A;
}

double xi_consistency(const PhaseFunction& A, const AlphaKernel& reference) {
  PhaseFunction Ar = A;
  Ar.values = A.values.real().cast<cplx>();
  const AlphaKernel pushed = alpha_kernel_from_A(Ar, reference.axes());
  const int n = reference.axes().n;
  double worst = 0.0;
  for (int j1 = 0; j1 < n; ++j1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int j2 = 0; j2 < n; ++j2)
        for (int k2 = 0; k2 < n; ++k2)
          worst = std::max(worst, std::abs(pushed.at(j1, k1, j2, k2) -
                                           reference.at(j1, k1, j2, k2)));
  return worst;
}

}  // namespace phasespace
