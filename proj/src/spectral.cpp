#include "phasespace/spectral.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace phasespace {

namespace {

struct Buffer {
  explicit Buffer(int n) : p(fftw_alloc_complex(n)) {
    if (!p) throw std::bad_alloc();
  }
  ~Buffer() { fftw_free(p); }
  Buffer(const Buffer&) = delete;
  Buffer& operator=(const Buffer&) = delete;
  fftw_complex* p;
};

Eigen::VectorXcd transform(const Eigen::VectorXcd& x, int sign) {
  const int N = int(x.size());
  Buffer in(N), out(N);
  fftw_plan plan;
#pragma omp critical(fftw_planner)
  plan = fftw_plan_dft_1d(N, in.p, out.p, sign, FFTW_ESTIMATE);
  std::copy_n(x.data(), N, reinterpret_cast<cplx*>(in.p));
  fftw_execute(plan);
  Eigen::VectorXcd y(N);
  std::copy_n(reinterpret_cast<const cplx*>(out.p), N, y.data());
#pragma omp critical(fftw_planner)
  fftw_destroy_plan(plan);
  return y;
}

}  // namespace

Eigen::VectorXcd fft(const Eigen::VectorXcd& x) { return transform(x, FFTW_FORWARD); }

Eigen::VectorXcd ifft(const Eigen::VectorXcd& X) {
  return transform(X, FFTW_BACKWARD) / double(X.size());
}

Eigen::VectorXd fft_frequencies(int N, double h) {
  Eigen::VectorXd w(N);
  for (int k = 0; k < N; ++k) {
    const int kk = k < (N + 1) / 2 ? k : k - N;
    w[k] = 2.0 * std::numbers::pi * kk / (N * h);
  }
  return w;
}

struct SpectralShifter::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

SpectralShifter::SpectralShifter(int N, double h)
    : N_(N), h_(h), omega_(fft_frequencies(N, h)), plans_(std::make_unique<Plans>()) {
  if (N < 2 || h <= 0) throw std::invalid_argument("SpectralShifter: bad size or spacing");
  Buffer a(N), b(N);
#pragma omp critical(fftw_planner)
  {
    plans_->forward = fftw_plan_dft_1d(N, a.p, b.p, FFTW_FORWARD, FFTW_ESTIMATE);
    plans_->backward = fftw_plan_dft_1d(N, b.p, a.p, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
}

SpectralShifter::~SpectralShifter() {
#pragma omp critical(fftw_planner)
  {
    fftw_destroy_plan(plans_->forward);
    fftw_destroy_plan(plans_->backward);
  }
}

void SpectralShifter::shift(cplx* data, double c) const {
  const double steps = c / h_;
  const double whole = std::round(steps);
  if (std::abs(steps - whole) < 1e-12) {
    const long m = ((long(whole) % N_) + N_) % N_;
    if (m == 0) return;
    // f(x_j - c) = f_{j - m}
    std::vector<cplx> tmp(data, data + N_);
    for (int j = 0; j < N_; ++j) data[j] = tmp[(j - m + N_) % N_];
    return;
  }
  Buffer a(N_), b(N_);
  std::copy_n(data, N_, reinterpret_cast<cplx*>(a.p));
  fftw_execute_dft(plans_->forward, a.p, b.p);
  auto* B = reinterpret_cast<cplx*>(b.p);
  for (int k = 0; k < N_; ++k) {
    if (2 * k == N_)
      B[k] *= std::cos(omega_[k] * c);  // Nyquist bin: symmetric split
    else
      B[k] *= std::polar(1.0, -omega_[k] * c);
  }
  fftw_execute_dft(plans_->backward, b.p, a.p);
  auto* A = reinterpret_cast<cplx*>(a.p);
  for (int j = 0; j < N_; ++j) data[j] = A[j] / double(N_);
}

}  // namespace phasespace
