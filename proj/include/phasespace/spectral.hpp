#pragma once

#include <memory>

#include <Eigen/Dense>

#include "phasespace/grid.hpp"

namespace phasespace {

/// Unnormalized forward DFT, X_k = sum_j x_j exp(-2 pi i jk/N).
Eigen::VectorXcd fft(const Eigen::VectorXcd& x);
/// Inverse of fft (includes the 1/N).
Eigen::VectorXcd ifft(const Eigen::VectorXcd& X);
/// Angular frequencies matching fft's output order for samples spaced h.
Eigen::VectorXd fft_frequencies(int N, double h);

/// Band-limited translation f(x) -> f(x - c) of N periodic samples spaced h.
/// Plans are made once; shift() may be called concurrently.
class SpectralShifter {
 public:
  SpectralShifter(int N, double h);
  ~SpectralShifter();
  SpectralShifter(const SpectralShifter&) = delete;
  SpectralShifter& operator=(const SpectralShifter&) = delete;

  int size() const { return N_; }
  /// In place on N contiguous samples.  Whole-step shifts are done by index.
  void shift(cplx* data, double c) const;

 private:
  struct Plans;
  int N_;
  double h_;
  Eigen::VectorXd omega_;
  std::unique_ptr<Plans> plans_;
};

}  // namespace phasespace
