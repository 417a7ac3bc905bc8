#pragma once

#include <Eigen/Dense>

#include "phasespace/grid.hpp"

namespace phasespace::detail {

// Per-parity DFT tables: table[par](k, l) = exp(i p_k d_l dx) with the l-th
// offset d_l = 2l - n + par of that parity class.
struct OffsetTables {
  int n;
  Eigen::MatrixXcd table[2];
  Eigen::MatrixXcd adjoint[2];

  explicit OffsetTables(int n_);
  int offset(int par, int l) const { return 2 * l - n + par; }
};

}  // namespace phasespace::detail
