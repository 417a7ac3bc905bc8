#include "phasespace/checks.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "phasespace/group_reps.hpp"
#include "phasespace/liftgen.hpp"
#include "phasespace/random_poly.hpp"
#include "phasespace/star.hpp"
#include "phasespace/symbol_text.hpp"
#include "phasespace/symweyl.hpp"
#include "phasespace/wigner.hpp"

namespace phasespace {

namespace {

struct Lines {
  std::vector<CheckLine>& v;
  void residual(const std::string& name, double value, double tol) {
    v.push_back({name, value <= tol, value, tol, false, ""});
  }
  void exact(const std::string& name, bool ok, const std::string& detail = "") {
    v.push_back({name, ok, ok ? 0.0 : 1.0, 0.0, false, detail});
  }
  void info(const std::string& name, bool ok, const std::string& detail) {
    v.push_back({name, ok, ok ? 0.0 : 1.0, 0.0, true, detail});
  }
};

Eigen::MatrixXcd random_kernel(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> N01;
  Eigen::MatrixXcd f(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f(i, j) = {N01(rng), N01(rng)};
  return f;
}

double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Eigen::VectorXcd random_superposition(std::mt19937_64& rng, const BasisFamily& basis, int terms,
                                      const GridSpec& g) {
  std::normal_distribution<double> N01;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(g.n);
  for (int r = 0; r < terms; ++r) psi += cplx(N01(rng), N01(rng)) * basis.state(r);
  return psi / std::sqrt(inner_h(psi, psi, g).real());
}

SuiteReport wigner_suite(const RunConfig& cfg) {
  SuiteReport rep{"wigner", {}};
  Lines L{rep.lines};
  std::mt19937_64 rng(cfg.seed);
  const GridSpec g = make_grid(cfg.n, cfg.dx);

  double rt1 = 0, rt2 = 0, pars = 0;
  for (int t = 0; t < 5; ++t) {
    const KernelMatrix K{g, random_kernel(rng, g.n)}, K2{g, random_kernel(rng, g.n)};
    const PhaseFunction A = weyl_wigner(K);
    rt1 = std::max(rt1, max_diff(weyl_wigner_inv(A).entries, K.entries));
    rt2 = std::max(rt2, max_diff(weyl_wigner(weyl_wigner_inv(A)).values, A.values));
    const cplx lhs = inner_k(A, weyl_wigner(K2)), rhs = inner_kernel(K, K2);
    pars = std::max(pars, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  L.residual("inverse transform after transform", rt1, 1e-12);
  L.residual("transform after inverse transform", rt2, 1e-12);
  L.residual("discrete Parseval identity", pars, 1e-12);

  const BasisFamily basis = hermite_basis(g, cfg.r_max);
  const int r = std::min(cfg.r_max, 4);
  double orth = 0;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      const PhaseFunction Pab = basis_function(basis, a, b);
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
          const double want = (a == c && b == d) ? 1.0 : 0.0;
          orth = std::max(orth, std::abs(inner_k(Pab, basis_function(basis, c, d)) - want));
        }
    }
  L.residual("basis functions orthonormal", orth, cfg.tol);

  for (int k = 0; k < 2; ++k) {
    const PurityResidual pr = purity_residual(wigner_of_state({g, basis.state(k)}));
    L.residual("purity of e_" + std::to_string(k), std::max(pr.r1, pr.r2), cfg.tol);
  }
  const PhaseFunction W0 = wigner_of_state({g, basis.state(0)});
  const PhaseFunction G0 = PhaseFunction::sample(
      g, [](double q, double p) { return cplx(std::exp(-q * q - p * p) / std::numbers::pi, 0.0); });
  L.residual("ground state Wigner function is a Gaussian", max_diff(W0.values, G0.values), 1e-8);
  const PhaseFunction W1 = wigner_of_state({g, basis.state(1)});
  L.residual("first excited state W(0,0) = -1/pi",
             std::abs(W1.values(g.n, g.n / 2).real() + 1.0 / std::numbers::pi), 1e-6);

  const KernelMatrix K{g, random_kernel(rng, g.n)};
  const KernelMatrix KT{g, K.entries.transpose()};
  L.residual("parity is the transpose", max_diff(parity(weyl_wigner(K)).values, weyl_wigner(KT).values),
             1e-12);
  return rep;
}

SuiteReport star_suite(const RunConfig& cfg) {
  SuiteReport rep{"star", {}};
  Lines L{rep.lines};
  std::mt19937_64 rng(cfg.seed);
  const GridSpec g = make_grid(std::min(cfg.n, 32), cfg.dx * std::sqrt(double(cfg.n) / std::min(cfg.n, 32)));
  const BasisFamily basis = hermite_basis(g, 3);
  // the quadrature route needs both axes resolved: compare on the balanced grid
  const int nb = 64;
  const GridSpec gb = make_grid(nb, std::sqrt(std::numbers::pi / nb));
  const BasisFamily bb = hermite_basis(gb, 3);
  double routes = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const PhaseFunction A = basis_function(bb, a, b), B = basis_function(bb, b, a);
      routes = std::max(routes, max_diff(star(A, B).values, star_twisted_oracle(A, B).values));
    }
  L.residual("kernel route agrees with twisted quadrature", routes, 1e-6);

  const KernelMatrix K{g, random_kernel(rng, g.n)};
  const PhaseFunction A = weyl_wigner(K), I = star_identity(g);
  L.residual("identity element", std::max(max_diff(star(A, I).values, A.values), max_diff(star(I, A).values, A.values)),
             1e-9 * std::max(1.0, A.max_abs()));
  const PhaseFunction B = weyl_wigner({g, random_kernel(rng, g.n)}), C = weyl_wigner({g, random_kernel(rng, g.n)});
  const Eigen::MatrixXcd left = star(star(A, B), C).values, right = star(A, star(B, C)).values;
  L.residual("associativity", max_diff(left, right) / std::max(1.0, left.cwiseAbs().maxCoeff()), 1e-10);

  const Eigen::VectorXcd psi = random_superposition(rng, basis, 3, g);
  const PurityResidual pr = purity_residual(wigner_of_state({g, psi}));
  L.residual("pure state W*W = W/2pi", pr.r1, cfg.tol);
  return rep;
}

SuiteReport symweyl_suite(const RunConfig& cfg) {
  SuiteReport rep{"symweyl", {}};
  Lines L{rep.lines};
  std::mt19937_64 rng(cfg.seed);
  bool rt = true, forms = true, hom = true, text = true, sides = true;
  for (int t = 0; t < 50; ++t) {
    const PolySymbol A = random_poly(rng, 6, false), B = random_poly(rng, 3, false);
    const NCPoly QA = weyl_quantize(A);
    rt &= weyl_symbol(QA) == A && nc_normalize(weyl_quantize(weyl_symbol(QA))) == nc_normalize(QA);
    forms &= nc_normalize(QA) == weyl_quantize_symmetrized(A);
    hom &= weyl_symbol(QA * weyl_quantize(B)) == star_symbolic_left(A, B);
    sides &= star_symbolic_left(A, B) == star_symbolic_right(A, B);
    text &= parse_symbol(to_string(A)) == A;
  }
  L.exact("weyl symbol and quantization mutually inverse", rt);
  L.exact("both quantization forms agree", forms);
  L.exact("weyl symbol is a star homomorphism", hom);
  L.exact("left and right J-series agree", sides);
  L.exact("symbol text round trip", text);
  const PolySymbol q = PolySymbol::q(), p = PolySymbol::p();
  L.exact("q * p - p * q = i", star_symbolic(q, p) - star_symbolic(p, q) == PolySymbol::constant(QComplex::i()));
  return rep;
}

SuiteReport liftgen_suite(const RunConfig& cfg) {
  SuiteReport rep{"liftgen", {}};
  Lines L{rep.lines};
  std::mt19937_64 rng(cfg.seed);
  bool lie = true, blind = true, inverse = true, form = true;
  for (int t = 0; t < 50; ++t) {
    const PolySymbol A = random_poly(rng, 5), B = random_poly(rng, 5);
    const DiffOp xa = xi_lift(A);
    lie &= commutator(xa, xi_lift(B)) == xi_lift(moyal_symbolic(A, B)) * QComplex::i();
    blind &= xi_lift(A + PolySymbol::constant(QComplex(make_rational(t - 25, 7)))) == xa;
    const auto back = read_off_generator(xa);
    inverse &= back && *back == A.without_constant();
    form &= is_generator_form(xa);
  }
  L.exact("commutator of lifts = i * lift of bracket", lie);
  L.exact("lift ignores additive constants", blind);
  L.exact("read-off inverts the lift", inverse);
  L.exact("lifts are hermitian with imaginary coefficients", form);

  bool mono = true;
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) mono &= xi_monomial(m, n) == xi_lift(PolySymbol::monomial(m, n));
  L.exact("monomial formula matches the lift", mono);

  const PolySymbol q = PolySymbol::q(), p = PolySymbol::p();
  const PolySymbol X2 = q * q, X3 = p * p;
  const DiffOp lhs = xi_lift(X2) * xi_lift(X3) + xi_lift(X3) * xi_lift(X2);
  const DiffOp rhs = xi_lift(star_symbolic(X2, X3) + star_symbolic(X3, X2));
  L.exact("lift is not an algebra homomorphism", lhs != rhs, to_string(lhs - rhs));

  const SplitResult s = split_test(z_conjugate(dop(2, 0, 0, 1, QComplex::i())));
  L.exact("i q^2 dp is not a lifted generator", !s.accepted, to_string(s.witness));

  const Table1Report t1 = table1_check(cfg.seed);
  for (auto& row : t1.rows)
    L.info("table row " + row.operator_name, row.alpha_matches && row.symbol_matches,
           row.alpha_matches ? to_string(row.computed)
                             : "tabulated - computed = " + to_string(row.difference));
  L.exact("generic row pattern through fifth order", t1.generic_pattern_ok);
  L.exact("potential row q^4 + q^2 through fifth order", t1.potential_row_ok);
  return rep;
}

SuiteReport reps_suite(const RunConfig& cfg) {
  SuiteReport rep{"reps", {}};
  Lines L{rep.lines};
  auto relations = [&](const FactorizationResult& f, const std::string& tag) {
    for (auto& r : f.phase_relations) L.exact(tag + " phase space " + r.name, r.holds, r.defect);
    for (auto& r : f.hilbert_relations) L.exact(tag + " hilbert " + r.name, r.holds, r.defect);
  };
  for (int h : {1, 2}) relations(hw_factorize(Rational(h)), "heisenberg-weyl hbar=" + std::to_string(h));
  bool tower = true;
  for (auto& lv : gen_heisenberg_tower(8)) tower &= lv.readoff_ok && lv.closure_ok && lv.bracket_ok;
  L.exact("generalized heisenberg tower N=8", tower);
  for (int m : {1, 3}) relations(galilei_factorize(Rational(m), Rational(1)), "galilei m=" + std::to_string(m));

  const GridSpec g = make_grid(64, std::sqrt(2.0 * std::numbers::pi / 64));
  L.residual("galilei momentum-space action", galilei_momentum_residual({0.4, 0.3, -0.2, 1.5, 1.0}, g), 1e-6);
  L.residual("galilei free evolution", free_evolution_residual(0.5, 1.0, g), 1e-5);
  const PhaseFunction F = PhaseFunction::sample(g, [](double q, double p) {
    return cplx(std::exp(-(q - 0.2) * (q - 0.2) - p * p), 0.0);
  });
  const GalileiElement a{0.3, 0.2, -0.1, 2.0, 1.0}, b{-0.2, 0.1, 0.25, 2.0, 1.0};
  const Eigen::MatrixXcd composed = galilei_action(a, galilei_action(b, F)).values;
  L.residual("galilei action composes with a3 + b3 - b2 a1",
             max_diff(composed, galilei_action(galilei_action_product(a, b), F).values), 1e-6);
  const double printed_law = max_diff(composed, galilei_action(a * b, F).values);
  L.info("galilei action composes with a3 + b3 + b2 a1", printed_law <= 1e-6, "residual " + std::to_string(printed_law));

  for (auto [kind, a] : {std::pair{Sp2Case::A, 0}, {Sp2Case::B, 0}, {Sp2Case::B, 1}, {Sp2Case::B, 2}}) {
    const Sp2Params prm{kind, Rational(a)};
    const Sp2Result r = sp2_generators(prm);
    const std::string tag = kind == Sp2Case::A ? "sp2 case A" : "sp2 case B a=" + std::to_string(a);
    relations(r.factorization, tag);
    L.exact(tag + " casimir = " + to_string(sp2_expected_casimir(prm)),
            r.casimir_scalar && r.casimir == sp2_expected_casimir(prm), to_string(r.casimir));
    L.info(tag + " tabulated hilbert generators satisfy the relations", r.printed_relations_hold,
           r.printed_casimir_scalar ? "casimir " + to_string(r.printed_casimir) : "casimir not scalar");
  }

  const TimeReversalReport tr = time_reversal_check(make_grid(32, 0.3), cfg.seed);
  L.residual("time reversal on hermitian kernels", tr.hermitian_residual, 1e-12);
  L.residual("time reversal composite on all kernels", tr.antiunitary_residual, 1e-12);
  L.exact("time reversal is an involution", tr.involution_exact);
  L.exact("real symmetric kernel is fixed", tr.real_symmetric_fixed);
  return rep;
}

}  // namespace

bool SuiteReport::passed() const {
  for (auto& l : lines)
    if (!l.informational && !l.passed) return false;
  return true;
}

std::vector<std::string> suite_names() { return {"wigner", "star", "symweyl", "liftgen", "reps"}; }

std::vector<SuiteReport> run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (auto& s : suite_names()) out.push_back(run_suite(s, cfg).front());
    return out;
  }
  if (name == "wigner") return {wigner_suite(cfg)};
  if (name == "star") return {star_suite(cfg)};
  if (name == "symweyl") return {symweyl_suite(cfg)};
  if (name == "liftgen") return {liftgen_suite(cfg)};
  if (name == "reps") return {reps_suite(cfg)};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

nlohmann::json to_json(const RunConfig& cfg) {
  return {{"n", cfg.n}, {"dx", cfg.dx}, {"r_max", cfg.r_max}, {"tol", cfg.tol},
          {"seed", cfg.seed}, {"out", cfg.out}, {"format", cfg.format}};
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json lines = nlohmann::json::array();
  for (auto& l : r.lines)
    lines.push_back({{"name", l.name}, {"passed", l.passed}, {"value", l.value}, {"tolerance", l.tolerance},
                     {"informational", l.informational}, {"detail", l.detail}});
  return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", lines}};
}

nlohmann::json reps_report(const RunConfig& cfg) {
  nlohmann::json out = nlohmann::json::array();
  auto entry = [](const FactorizationResult& f, double residual, const std::string& casimir) {
    nlohmann::json rel = nlohmann::json::array();
    for (auto& r : f.phase_relations) rel.push_back({{"relation", r.name}, {"side", "phase"}, {"holds", r.holds}});
    for (auto& r : f.hilbert_relations) rel.push_back({{"relation", r.name}, {"side", "hilbert"}, {"holds", r.holds}});
    nlohmann::json j{{"example", f.example}, {"relations_checked", rel}, {"max_residual", residual},
                     {"factorized_generators_pretty", f.pretty()}, {"cocycle_phase", f.cocycle_phase},
                     {"additive_constants", f.additive_constants}};
    j["casimir_value"] = casimir.empty() ? nlohmann::json() : nlohmann::json(casimir);
    return j;
  };
  out.push_back(entry(hw_factorize(1), 0.0, ""));
  const GridSpec g = make_grid(64, std::sqrt(2.0 * std::numbers::pi / 64));
  const double gres = std::max(galilei_momentum_residual({0.4, 0.3, -0.2, 1.5, 1.0}, g),
                               free_evolution_residual(0.5, 1.0, g));
  out.push_back(entry(galilei_factorize(1, 1), gres, ""));
  for (auto [kind, a] : {std::pair{Sp2Case::A, 0}, {Sp2Case::B, 0}, {Sp2Case::B, 1}, {Sp2Case::B, 2}}) {
    const Sp2Result r = sp2_generators({kind, Rational(a)});
    nlohmann::json j = entry(r.factorization, 0.0, to_string(r.casimir));
    if (kind == Sp2Case::B) j["a"] = a;
    out.push_back(j);
  }
  const TimeReversalReport tr = time_reversal_check(make_grid(32, 0.3), cfg.seed);
  out.push_back({{"example", "time-reversal"},
                 {"relations_checked", {{{"relation", "P P = identity"}, {"holds", tr.involution_exact}}}},
                 {"max_residual", std::max(tr.hermitian_residual, tr.antiunitary_residual)},
                 {"casimir_value", nullptr},
                 {"factorized_generators_pretty", {"Pi(g) u = conj(u)"}}});
  return out;
}

}  // namespace phasespace
