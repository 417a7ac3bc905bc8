#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace phasespace {

struct RunConfig {
  int n = 64;
  double dx = 0.25;
  int r_max = 8;
  double tol = 1e-8;
  unsigned long seed = 20240601UL;
  std::string out = ".";
  std::string format = "json";
};

struct CheckLine {
  std::string name;
  bool passed = false;
  double value = 0.0;       // measured residual, or 0/1 for exact checks
  double tolerance = 0.0;   // 0 for exact checks
  bool informational = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> lines;
  /// informational lines never fail a suite
  bool passed() const;
};

std::vector<std::string> suite_names();
/// "all" runs every suite.  Throws std::invalid_argument for unknown names.
std::vector<SuiteReport> run_suite(const std::string& name, const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);
nlohmann::json to_json(const SuiteReport& r);

/// One entry per worked example:
/// {example, relations_checked, max_residual, casimir_value, factorized_generators_pretty}
nlohmann::json reps_report(const RunConfig& cfg);

}  // namespace phasespace
