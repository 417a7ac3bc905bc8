#pragma once

#include <array>
#include <vector>

#include "phasespace/factorize_kernel.hpp"

namespace phasespace::detail {

cplx sine_transform_serial(const RFunction& R, double x, double y, double up, double vp,
                           const QuadratureBox& box);
double probe_mismatch(const RFunction& R, const std::array<double, 4>& probe,
                      const QuadratureBox& box);
std::vector<std::array<double, 4>> probe_lattice(const AutvOptions& opt);
QuadratureBox autv_box(const RFunction& R, const AutvOptions& opt);
AutvReport finish_report(const std::vector<double>& mismatch,
                         const std::vector<std::array<double, 4>>& probes,
                         const QuadratureBox& box, const AutvOptions& opt);

}  // namespace phasespace::detail
