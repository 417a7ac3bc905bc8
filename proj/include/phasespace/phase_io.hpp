#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "phasespace/wigner.hpp"

namespace phasespace {

// CSV layout
//   line 1: "# axes q:<2n>:<dq> p:<n>:<dp>"   (kernels: "# axes x:<n>:<dx> y:<n>:<dx>")
//   then one "re,im" pair per line, row-major, written with %.17g.
//
// JSON layout
//   {"grid": {"n": n, "dx": dx, "dp": dp},
//    "axes": {"q": {"count","start","step"}, "p": {...}},
//    "kind": "phase" | "kernel",
//    "re": [[...], ...], "im": [[...], ...]}
// Doubles are written shortest-round-trip, so reading back is bit exact.

void write_csv(std::ostream& os, const PhaseFunction& A);
void write_csv(std::ostream& os, const KernelMatrix& K);
PhaseFunction read_phase_csv(std::istream& is);
KernelMatrix read_kernel_csv(std::istream& is);

nlohmann::json to_json(const PhaseFunction& A);
nlohmann::json to_json(const KernelMatrix& K);
PhaseFunction phase_from_json(const nlohmann::json& j);
KernelMatrix kernel_from_json(const nlohmann::json& j);

/// Writes <stem>.csv or <stem>.json; returns the path written.
std::string save_phase(const PhaseFunction& A, const std::string& stem,
                       const std::string& format);

}  // namespace phasespace
