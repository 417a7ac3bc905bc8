// phasespace: demos, invariant suites and the kernel factorisation pipeline.
//
// Exit codes: 0 success, 1 invariant failure or refused gate, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "phasespace/checks.hpp"
#include "phasespace/factorize_kernel.hpp"
#include "phasespace/phase_io.hpp"
#include "phasespace/star.hpp"
#include "phasespace/wigner.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace phasespace;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json envelope(const std::string& command, const RunConfig& cfg) {
  return {{"tool", "phasespace"}, {"version", kVersion}, {"command", command}, {"config", to_json(cfg)},
          {"seed", cfg.seed}};
}

void emit(const json& report, const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out);
  const fs::path path = fs::path(cfg.out) / (name + "-report.json");
  std::ofstream(path) << report.dump(2) << "\n";
  std::cout << report.dump(2) << "\n";
}

std::string stem(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out);
  return (fs::path(cfg.out) / name).string();
}

// "hermite:k", or a sum such as "hermite:0 + 0.5*hermite:2"
Eigen::VectorXcd named_state(const std::string& spec, const BasisFamily& basis) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(basis.grid.n);
  std::stringstream ss(spec);
  std::string term;
  bool any = false;
  while (std::getline(ss, term, '+')) {
    term.erase(0, term.find_first_not_of(" \t"));
    term.erase(term.find_last_not_of(" \t") + 1);
    double coef = 1.0;
    if (const auto star_at = term.find('*'); star_at != std::string::npos) {
      try {
        coef = std::stod(term.substr(0, star_at));
      } catch (const std::exception&) {
        throw UsageError("bad coefficient in state term '" + term + "'");
      }
      term = term.substr(star_at + 1);
    }
    if (term.rfind("hermite:", 0) != 0) throw UsageError("unknown state '" + term + "'");
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(term.substr(8), &used);
      if (used != term.size() - 8) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("bad basis index in '" + term + "'");
    }
    if (k < 0 || k >= basis.r_max)
      throw UsageError("basis index " + std::to_string(k) + " outside [0, " + std::to_string(basis.r_max) + ")");
    psi += coef * basis.state(k);
    any = true;
  }
  if (!any) throw UsageError("empty state expression");
  const double norm = std::sqrt(inner_h(psi, psi, basis.grid).real());
  if (norm == 0.0) throw UsageError("state expression has zero norm");
  return psi / norm;
}

// one sample per line: "re" or "re,im"
Eigen::VectorXcd file_state(const std::string& path, const GridSpec& g) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open state file " + path);
  std::vector<cplx> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double re = 0.0, im = 0.0;
    if (!(ls >> re)) throw UsageError("malformed line in " + path + ": '" + line + "'");
    ls >> im;
    vals.emplace_back(re, im);
  }
  if (int(vals.size()) != g.n)
    throw UsageError("state file has " + std::to_string(vals.size()) + " samples, grid needs " + std::to_string(g.n));
  Eigen::VectorXcd psi(g.n);
  for (int j = 0; j < g.n; ++j) psi[j] = vals[j];
  return psi;
}

int cmd_wigner(const RunConfig& cfg, const std::string& state, const std::string& file) {
  const GridSpec g = make_grid(cfg.n, cfg.dx);
  const BasisFamily basis = hermite_basis(g, cfg.r_max);
  if (state.empty() == file.empty()) throw UsageError("give exactly one of --state or --file");
  std::vector<std::string> warnings = basis.warnings;
  Eigen::VectorXcd psi = file.empty() ? named_state(state, basis) : file_state(file, g);
  const double norm = std::sqrt(inner_h(psi, psi, g).real());
  if (norm == 0.0) throw UsageError("state has zero norm");
  if (std::abs(norm - 1.0) > 1e-12) {
    warnings.push_back("input normalized, norm was " + std::to_string(norm));
    psi /= norm;
  }
  const PhaseFunction W = wigner_of_state({g, psi}, &warnings);
  const PurityResidual pr = purity_residual(W);
  const std::string path = save_phase(W, stem(cfg, "wigner"), cfg.format);

  json rep = envelope("wigner", cfg);
  rep["state"] = file.empty() ? state : "file:" + file;
  rep["output"] = path;
  rep["W_origin"] = W.values(g.n, g.n / 2).real();
  rep["purity"] = {{"max_star_square_defect", pr.r1}, {"normalization_defect", pr.r2}};
  rep["purity_ok"] = std::max(pr.r1, pr.r2) <= cfg.tol;
  rep["warnings"] = warnings;
  emit(rep, cfg, "wigner");
  return rep["purity_ok"].get<bool>() ? 0 : 1;
}

int cmd_check(const RunConfig& cfg, const std::string& suite) {
  std::vector<SuiteReport> reports;
  try {
    reports = run_suite(suite, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json rep = envelope("check", cfg);
  rep["suite"] = suite;
  bool ok = true;
  for (auto& r : reports) {
    rep["suites"].push_back(to_json(r));
    ok &= r.passed();
  }
  rep["passed"] = ok;
  emit(rep, cfg, "check-" + suite);
  return ok ? 0 : 1;
}

int cmd_factorize(const RunConfig& cfg, double tau, double sigma, int epsilon, int grid_n, bool override_gate) {
  const GaussianAlphaSpec spec{tau, sigma, epsilon};
  spec.validate();
  auto make_R = [](const GaussianAlphaSpec& s) {
    return RFunction::analytic([s](double u, double v, double up, double vp) { return gaussian_R(s, u, v, up, vp); },
                               GaussianDecay{s.tau, s.sigma});
  };
  const RFunction R = make_R(spec);
  const AutvReport plus = autv_residual(make_R({tau, sigma, 1}));

  RecoveryOptions opt;
  opt.threshold = cfg.tol < 1e-6 ? cfg.tol : 1e-6;
  opt.override_gate = override_gate;
  const GridSpec g = make_grid(grid_n, std::sqrt(std::numbers::pi / grid_n));

  json rep = envelope("factorize", cfg);
  rep["spec"] = {{"tau", tau}, {"sigma", sigma}, {"epsilon", epsilon}};
  rep["threshold"] = opt.threshold;
  rep["grid"] = {{"n", g.n}, {"dx", g.dx}, {"dp", g.dp}};
  try {
    const Recovery rec = recover_A(R, 0.0, g, opt);
    rep["residual"] = rec.gate.residual;
    rep["residual_ratio_to_epsilon_plus"] = rec.gate.residual / std::max(plus.residual, 1e-300);
    rep["admitted"] = rec.admitted;
    rep["refused"] = false;
    rep["box"] = {{"Lu", rec.box.Lu}, {"Lv", rec.box.Lv}, {"hu", rec.box.hu}, {"hv", rec.box.hv}};
    rep["probe_lattice"] = {{"per_axis", rec.gate.probes_per_axis}, {"half_width", rec.gate.probe_half_width}};
    rep["recovered_A_path"] = save_phase(rec.A, stem(cfg, "recovered_A"), cfg.format);

    // compare against a + 2 pi sqrt(sigma tau) exp(-sigma q^2 - tau p^2), constants
    // matched at the grid corner where the Gaussian has decayed
    const double amp = 2.0 * std::numbers::pi * std::sqrt(sigma * tau);
    const cplx corner = rec.A.values(0, 0);
    double dev = 0.0;
    for (int s = 0; s < g.nq(); ++s)
      for (int k = 0; k < g.n; ++k) {
        const double q = g.q(s), p = g.p(k);
        dev = std::max(dev, std::abs(rec.A.values(s, k) - corner - amp * std::exp(-sigma * q * q - tau * p * p)));
      }
    const double peak = (rec.A.values(g.n, g.n / 2) - corner).real();
    rep["comparison"] = {{"tabulated_amplitude", amp},
                         {"recovered_amplitude", peak},
                         {"amplitude_ratio", peak / amp},
                         {"max_deviation_after_constant_match", dev}};
    rep["xi_consistency"] =
        xi_consistency(rec.A, gaussian_alpha_kernel(spec, make_alpha_axes(std::min(16, g.n / 2), 2.0 * g.dx)));
    emit(rep, cfg, "factorize");
    return rec.admitted ? 0 : 1;
  } catch (const GateRefused& e) {
    rep["residual"] = e.residual;
    rep["residual_ratio_to_epsilon_plus"] = e.residual / std::max(plus.residual, 1e-300);
    rep["admitted"] = false;
    rep["refused"] = true;
    rep["recovered_A_path"] = nullptr;
    rep["message"] = "no observable generates this kernel; pass --override to recover anyway";
    emit(rep, cfg, "factorize");
    return 1;
  }
}

int cmd_reps(const RunConfig& cfg) {
  json rep = envelope("reps", cfg);
  rep["examples"] = reps_report(cfg);
  const std::vector<SuiteReport> s = run_suite("reps", cfg);
  rep["passed"] = s.front().passed();
  emit(rep, cfg, "reps");
  return s.front().passed() ? 0 : 1;
}

int cmd_star_demo(const RunConfig& cfg) {
  const int n = std::min(cfg.n, 64);
  const GridSpec g = make_grid(n, cfg.dx * std::sqrt(double(cfg.n) / n));
  const BasisFamily basis = hermite_basis(g, 2);
  const PhaseFunction A = basis_function(basis, 0, 1), B = basis_function(basis, 1, 0);
  const PhaseFunction kern = star(A, B), twisted = star_twisted_oracle(A, B);
  const PhaseFunction want = basis_function(basis, 0, 0);
  json rep = envelope("star-demo", cfg);
  rep["product"] = "Phi_01 * Phi_10";
  rep["routes_max_difference"] = (kern.values - twisted.values).cwiseAbs().maxCoeff();
  rep["max_difference_from_Phi_00"] = (kern.values - want.values).cwiseAbs().maxCoeff();
  rep["output"] = save_phase(kern, stem(cfg, "star"), cfg.format);
  // the kernel route is exact algebra; the quadrature route is limited by the grid
  const bool ok = rep["max_difference_from_Phi_00"].get<double>() <= 1e-6 &&
                  rep["routes_max_difference"].get<double>() <= 1e-4;
  rep["passed"] = ok;
  emit(rep, cfg, "star-demo");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete phase-space quantum mechanics toolkit"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "flat key=value file; command-line flags override it");
  app.require_subcommand(1);

  RunConfig cfg;
  auto even_n = CLI::Validator(
      [](std::string& s) -> std::string {
        const int v = std::stoi(s);
        return (v >= 4 && v % 2 == 0) ? "" : "must be even and >= 4";
      },
      "EVEN>=4");
  app.add_option("--n", cfg.n, "grid points")->check(even_n)->capture_default_str();
  app.add_option("--dx", cfg.dx, "grid spacing")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--rmax", cfg.r_max, "number of basis functions")->check(CLI::Range(1, 64))->capture_default_str();
  app.add_option("--tol", cfg.tol, "tolerance for numerical checks")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--out", cfg.out, "output directory")->capture_default_str();
  app.add_option("--format", cfg.format, "array format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  std::string state, file;
  auto* w = app.add_subcommand("wigner", "Wigner function of a state");
  w->add_option("--state", state, "hermite:k or a sum like 'hermite:0 + 0.5*hermite:2'");
  w->add_option("--file", file, "sampled state, one 're' or 're,im' per line");

  std::string suite;
  auto* c = app.add_subcommand("check", "run an invariant suite");
  c->add_option("suite", suite, "all|wigner|star|symweyl|liftgen|reps")->required();

  double tau = 1.0, sigma = 1.0;
  int epsilon = 1, grid_n = 32;
  bool override_gate = false;
  auto* f = app.add_subcommand("factorize", "recover an observable from a Gaussian generator kernel");
  f->add_option("--tau", tau)->check(CLI::PositiveNumber)->capture_default_str();
  f->add_option("--sigma", sigma)->check(CLI::PositiveNumber)->capture_default_str();
  f->add_option("--epsilon", epsilon)->check(CLI::IsMember({-1, 1}))->capture_default_str();
  f->add_option("--grid-n", grid_n)->check(even_n)->capture_default_str();
  f->add_flag("--override", override_gate, "recover even when the admissibility gate fails");

  auto* r = app.add_subcommand("reps", "group representation gallery");
  auto* s = app.add_subcommand("star-demo", "star product of two basis functions by both routes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*w) return cmd_wigner(cfg, state, file);
    if (*c) return cmd_check(cfg, suite);
    if (*f) return cmd_factorize(cfg, tau, sigma, epsilon, grid_n, override_gate);
    if (*r) return cmd_reps(cfg);
    if (*s) return cmd_star_demo(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
