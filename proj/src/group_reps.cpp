#include "phasespace/group_reps.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "phasespace/spectral.hpp"
#include "phasespace/symbol_text.hpp"

namespace phasespace {

namespace {

QComplex im(const Rational& r) { return {Rational(0), r}; }
QComplex im(long num, long den = 1) { return im(make_rational(num, den)); }

long lattice_steps(double a, double h, const char* what) {
  const double s = a / h;
  const double r = std::round(s);
  if (std::abs(s - r) > 1e-9 * std::max(1.0, std::abs(s)))
    throw std::domain_error(std::string(what) + " is not a multiple of the grid spacing (" +
                            std::to_string(s) + " steps)");
  return long(r);
}

int wrap(long i, int n) { return int(((i % n) + n) % n); }

}  // namespace

bool FactorizationResult::all_hold() const {
  for (auto& r : phase_relations)
    if (!r.holds) return false;
  for (auto& r : hilbert_relations)
    if (!r.holds) return false;
  return true;
}

std::vector<std::string> FactorizationResult::pretty() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < hilbert_generators.size(); ++i)
    out.push_back((i < names.size() ? names[i] : "A" + std::to_string(i + 1)) + " = " +
                  to_string(hilbert_generators[i]));
  return out;
}

Relation check_relation(const std::string& name, const DiffOp& lhs, const DiffOp& rhs) {
  Relation r{name, lhs == rhs, ""};
  if (!r.holds) r.defect = to_string(lhs - rhs);
  return r;
}

Relation check_relation(const std::string& name, const OneVarOp& lhs, const OneVarOp& rhs) {
  Relation r{name, lhs == rhs, ""};
  if (!r.holds) r.defect = to_string(lhs - rhs);
  return r;
}

OneVarOp factorize_generator(const DiffOp& alpha, const Rational& hbar) {
  const SplitResult s = split_test(z_conjugate(alpha, hbar) * QComplex(hbar));
  if (!s.accepted)
    throw std::domain_error("generator does not factorize: " + s.reason + " [" + to_string(s.witness) + "]");
  return s.a_hat;
}

// ----------------------------------------------------------- Heisenberg-Weyl

PhaseFunction hw_action(const HWElement& g, const PhaseFunction& F) {
  const GridSpec& gr = F.grid;
  const long i1 = lattice_steps(g.a1, gr.dq(), "hw_action: a1");
  const long i2 = lattice_steps(g.a2, gr.dp, "hw_action: a2");
  PhaseFunction out = PhaseFunction::zeros(gr);
  const int nq = gr.nq(), n = gr.n;
#pragma omp parallel for
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < nq; ++s) out.values(s, k) = F.values(wrap(s + i1, nq), wrap(k - i2, n));
  return out;
}

Eigen::VectorXcd hw_hilbert_action(const HWElement& g, const Eigen::VectorXcd& u, const GridSpec& grid) {
  if (u.size() != grid.n) throw std::invalid_argument("hw_hilbert_action: length mismatch");
  const long i1 = lattice_steps(g.a1, grid.dx, "hw_hilbert_action: a1");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const long src = j + i1;
    if (src < 0 || src >= grid.n) continue;
    out[j] = std::polar(1.0, g.a2 * grid.x(j) / g.hbar) * u[src];
  }
  return out;
}

double hw_cocycle(const HWElement& a, const HWElement& b) { return a.a1 * b.a2 / a.hbar; }

std::array<DiffOp, 2> hw_phase_generators() {
  return {dop(0, 0, 1, 0, im(-1)), dop(0, 0, 0, 1, im(1))};
}

FactorizationResult hw_factorize(const Rational& hbar) {
  if (sgn(hbar) <= 0) throw std::invalid_argument("hbar must be positive");
  FactorizationResult f;
  f.example = "heisenberg-weyl";
  f.names = {"p", "q"};
  const auto a = hw_phase_generators();
  f.phase_generators = {a[0], a[1]};
  f.phase_relations.push_back(check_relation("[a1,a2] = 0", commutator(a[0], a[1]), DiffOp{}));
  const OneVarOp P = factorize_generator(a[0], hbar), Q = factorize_generator(a[1], hbar);
  f.hilbert_generators = {P, Q};
  f.hilbert_relations.push_back(check_relation("p = -i hbar dx", P, xop(0, 1, im(-hbar))));
  f.hilbert_relations.push_back(check_relation("q = x", Q, xop(1, 0)));
  f.hilbert_relations.push_back(check_relation("[q,p] = i hbar", commutator(Q, P), OneVarOp::scalar(im(hbar))));
  f.additive_constants = {"p0", "q0"};
  return f;
}

DiffOp tower_beta(int n) {
  DiffOp b;
  if (n <= 0) return b;
  const Rational pre = Rational(2) / factorial(n);
  for (int m = n - 1; m >= 0; m -= 2) {
    const int d = n - m;
    QComplex c = QComplex(pre * binomial(n, m) * pow_rational(make_rational(1, 2), d)) * QComplex::ipow(d);
    b += dop(m, 0, 0, d, c);
  }
  return b;
}

std::vector<TowerLevel> gen_heisenberg_tower(int N) {
  if (N < 1 || N > 8) throw std::invalid_argument("tower size must be in 1..8");
  const DiffOp a1 = dop(0, 0, 1, 0, im(-1));
  std::vector<TowerLevel> out;
  for (int n = 1; n <= N; ++n) {
    TowerLevel L;
    L.n = n;
    L.beta = tower_beta(n);
    const Rational inv = 1 / factorial(n);
    const PolySymbol expect = PolySymbol::monomial(n, 0, QComplex(inv));
    const auto sym = read_off_generator(L.beta);
    if (sym) L.symbol = *sym;
    try {
      L.b_hat = factorize_generator(L.beta);
    } catch (const std::domain_error&) {
    }
    L.readoff_ok = sym && *sym == expect && L.b_hat == xop(n, 0, QComplex(inv));
    const DiffOp lower = tower_beta(n - 1) * im(-1);
    L.closure_ok = commutator(a1, L.beta) == lower;
    L.bracket_ok = xi_lift(moyal_symbolic(PolySymbol::p(), expect)) * QComplex::i() == lower;
    out.push_back(std::move(L));
  }
  return out;
}

// ------------------------------------------------------------------- Galilei

PhaseFunction galilei_action(const GalileiElement& g, const PhaseFunction& F) {
  if (g.m <= 0) throw std::invalid_argument("galilei_action: mass must be positive");
  const GridSpec& gr = F.grid;
  const int nq = gr.nq(), n = gr.n;
  PhaseFunction out = F;
  const double boost = g.m * g.a2;
  if (boost != 0.0) {
    const SpectralShifter along_p(n, gr.dp);
#pragma omp parallel
    {
      Eigen::VectorXcd row(n);
#pragma omp for
      for (int s = 0; s < nq; ++s) {
        row = out.values.row(s).transpose();
        along_p.shift(row.data(), -boost);  // H(q,p) = F(q, p + m a2)
        out.values.row(s) = row.transpose();
      }
    }
  }
  const SpectralShifter along_q(nq, gr.dq());
#pragma omp parallel for
  for (int k = 0; k < n; ++k) {
    const double c = g.a1 / g.m * gr.p(k) + g.a2 * g.a1 + g.a3;
    if (c != 0.0) along_q.shift(out.values.col(k).data(), c);
  }
  return out;
}

GalileiElement galilei_action_product(const GalileiElement& a, const GalileiElement& b) {
  return {a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3 - b.a2 * a.a1, a.m, a.hbar};
}

Eigen::VectorXcd galilei_hilbert_action(const GalileiElement& g, const Eigen::VectorXcd& psi,
                                        const GridSpec& grid) {
  if (psi.size() != grid.n) throw std::invalid_argument("galilei_hilbert_action: length mismatch");
  const int n = grid.n;
  Eigen::VectorXcd boosted(n);
  for (int j = 0; j < n; ++j) boosted[j] = psi[j] * std::polar(1.0, -g.m * g.a2 * grid.x(j));
  Eigen::VectorXcd u = fft(boosted);
  const Eigen::VectorXd r = fft_frequencies(n, grid.dx);
  const double c = g.a2 * g.a1 + g.a3;
  for (int k = 0; k < n; ++k) u[k] *= std::polar(1.0, -g.a1 / (2 * g.m) * r[k] * r[k] - c * r[k]);
  return ifft(u);
}

std::array<DiffOp, 3> galilei_phase_generators(const Rational& m) {
  if (sgn(m) <= 0) throw std::invalid_argument("mass must be positive");
  return {dop(0, 1, 1, 0, im(-1 / m)), dop(0, 0, 0, 1, im(m)), dop(0, 0, 1, 0, im(-1))};
}

FactorizationResult galilei_factorize(const Rational& m, const Rational& hbar) {
  if (sgn(hbar) <= 0) throw std::invalid_argument("hbar must be positive");
  FactorizationResult f;
  f.example = "galilei";
  f.names = {"H", "K", "p"};
  const auto a = galilei_phase_generators(m);
  f.phase_generators = {a[0], a[1], a[2]};
  f.phase_relations.push_back(check_relation("[a1,a2] = -i a3", commutator(a[0], a[1]), a[2] * im(-1)));
  f.phase_relations.push_back(check_relation("[a2,a3] = 0", commutator(a[1], a[2]), DiffOp{}));
  f.phase_relations.push_back(check_relation("[a1,a3] = 0", commutator(a[0], a[2]), DiffOp{}));
  const OneVarOp H = factorize_generator(a[0], hbar);
  const OneVarOp K = factorize_generator(a[1], hbar);
  const OneVarOp P = factorize_generator(a[2], hbar);
  f.hilbert_generators = {H, K, P};
  f.hilbert_relations.push_back(check_relation("H = -(hbar^2/2m) dx^2", H, xop(0, 2, QComplex(-hbar * hbar / (2 * m)))));
  f.hilbert_relations.push_back(check_relation("K = m x", K, xop(1, 0, QComplex(m))));
  f.hilbert_relations.push_back(check_relation("p = -i hbar dx", P, xop(0, 1, im(-hbar))));
  f.hilbert_relations.push_back(check_relation("[H,K] = -i hbar p", commutator(H, K), P * im(-hbar)));
  f.hilbert_relations.push_back(check_relation("[H,p] = 0", commutator(H, P), OneVarOp{}));
  f.hilbert_relations.push_back(check_relation("[K,p] = i hbar m", commutator(K, P), OneVarOp::scalar(im(hbar * m))));
  f.additive_constants = {"e0", "q0", "p0"};
  return f;
}

namespace {

Eigen::VectorXcd gaussian_state(const GridSpec& g, double x0, double k0) {
  Eigen::VectorXcd psi(g.n);
  const double norm = std::pow(std::numbers::pi, -0.25);
  for (int j = 0; j < g.n; ++j) {
    const double x = g.x(j);
    psi[j] = norm * std::exp(-0.5 * (x - x0) * (x - x0)) * std::polar(1.0, k0 * x);
  }
  return psi;
}

}  // namespace

double galilei_momentum_residual(const GalileiElement& g, const GridSpec& grid) {
  const Eigen::VectorXcd psi = gaussian_state(grid, 0.3, -0.2);
  const Eigen::VectorXcd moved = galilei_hilbert_action(g, psi, grid);
  const PhaseFunction lhs = weyl_wigner(rank_one(moved, moved, grid));
  const PhaseFunction rhs = galilei_action(g, weyl_wigner(rank_one(psi, psi, grid)));
  return (lhs.values - rhs.values).cwiseAbs().maxCoeff();
}

double free_evolution_residual(double t, double m, const GridSpec& grid) {
  const Eigen::VectorXcd psi0 = gaussian_state(grid, 0.0, 0.0);
  Eigen::VectorXcd psit(grid.n);
  const cplx w = 1.0 + cplx(0.0, t / m);
  const double norm = std::pow(std::numbers::pi, -0.25);
  for (int j = 0; j < grid.n; ++j) {
    const double x = grid.x(j);
    psit[j] = norm / std::sqrt(w) * std::exp(-x * x / (2.0 * w));
  }
  const PhaseFunction F = z_map(rank_one(psi0, psi0, grid).entries, grid);
  const Eigen::MatrixXcd K = z_inv(galilei_action({t, 0.0, 0.0, m, 1.0}, F));
  return (K - psit * psit.adjoint()).cwiseAbs().maxCoeff();
}

// --------------------------------------------------------------------- sp(2)

QComplex sp2_expected_casimir(const Sp2Params& params) {
  if (params.kind == Sp2Case::A) return QComplex(make_rational(-3, 16));
  return QComplex(-(params.a * params.a + 1) / 4);
}

Sp2Result sp2_generators(const Sp2Params& params) {
  Sp2Result r;
  r.params = params;
  auto& a = r.alpha;
  const QComplex one_m_ia(Rational(1), -params.a);
  if (params.kind == Sp2Case::A) {
    a[0] = dop(0, 1, 0, 1, im(1, 2)) + dop(1, 0, 1, 0, im(-1, 2));
    a[1] = dop(1, 0, 0, 1, im(1, 2)) + dop(0, 1, 1, 0, im(1, 2));
    a[2] = dop(1, 0, 0, 1, im(1, 2)) + dop(0, 1, 1, 0, im(-1, 2));
    r.printed_hilbert = {xop(1, 1, im(-1, 2)) + xop(0, 0, im(-1, 2)),
                         xop(2, 0, make_rational(1, 4)) + xop(0, 2, make_rational(1, 4)),
                         xop(2, 0, make_rational(1, 4)) - xop(0, 2, make_rational(1, 4))};
  } else {
    const DiffOp common = dop(0, 2, 0, 1, im(-1, 2)) + dop(1, 1, 1, 0, im(1)) +
                          dop(0, 0, 1, 0, im(-params.a / 2)) + dop(0, 0, 2, 1, im(1, 8));
    a[0] = dop(0, 0, 0, 1, im(1, 2)) + common;
    a[1] = dop(1, 0, 1, 0, im(-1)) + dop(0, 1, 0, 1, im(1));
    a[2] = dop(0, 0, 0, 1, im(-1, 2)) + common;
    const QComplex half(make_rational(1, 2));
    r.printed_hilbert = {(xop(1, 0) + xop(1, 2) + xop(0, 1, one_m_ia)) * half,
                         xop(1, 1, im(-1)) + OneVarOp::scalar(im(-1) * half * one_m_ia),
                         (xop(1, 0) - xop(1, 2) - xop(0, 1, one_m_ia)) * (-half)};
  }

  FactorizationResult& f = r.factorization;
  f.example = params.kind == Sp2Case::A ? "sp2-case-A" : "sp2-case-B";
  f.names = {"A1", "A2", "A3"};
  f.phase_generators = {a[0], a[1], a[2]};
  f.phase_relations = {check_relation("[a1,a2] = -i a3", commutator(a[0], a[1]), a[2] * im(-1)),
                       check_relation("[a2,a3] = i a1", commutator(a[1], a[2]), a[0] * im(1)),
                       check_relation("[a3,a1] = i a2", commutator(a[2], a[0]), a[1] * im(1))};

  // Split leaves each A_i up to a real constant; the relations pin them.
  std::array<OneVarOp, 3> raw;
  for (int i = 0; i < 3; ++i) raw[i] = factorize_generator(a[i]);
  std::array<OneVarOp, 3> A = {commutator(raw[1], raw[2]) * im(-1), commutator(raw[2], raw[0]) * im(-1),
                               commutator(raw[0], raw[1]) * im(1)};
  f.hilbert_generators = {A[0], A[1], A[2]};
  auto hilbert_relations = [](const std::array<OneVarOp, 3>& h) {
    return std::vector<Relation>{
        check_relation("[A1,A2] = -i A3", commutator(h[0], h[1]), h[2] * im(-1)),
        check_relation("[A2,A3] = i A1", commutator(h[1], h[2]), h[0] * im(1)),
        check_relation("[A3,A1] = i A2", commutator(h[2], h[0]), h[1] * im(1))};
  };
  f.hilbert_relations = hilbert_relations(A);
  f.additive_constants = {"c1", "c2", "c3"};

  auto casimir = [](const std::array<OneVarOp, 3>& h) { return h[2] * h[2] - h[0] * h[0] - h[1] * h[1]; };
  const OneVarOp C = casimir(A);
  r.casimir_scalar = C.is_scalar();
  r.casimir = C.scalar_value();
  const OneVarOp Cp = casimir(r.printed_hilbert);
  r.printed_casimir_scalar = Cp.is_scalar();
  r.printed_casimir = Cp.scalar_value();
  r.printed_relations_hold = true;
  for (auto& rel : hilbert_relations(r.printed_hilbert)) r.printed_relations_hold &= rel.holds;
  return r;
}

// ------------------------------------------------------------ time reversal

PhaseFunction time_reversal(const PhaseFunction& F) { return parity(F); }

TimeReversalReport time_reversal_check(const GridSpec& grid, unsigned long seed, int trials) {
  TimeReversalReport rep;
  rep.trials = trials;
  rep.involution_exact = true;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N01;
  const int n = grid.n;
  for (int t = 0; t < trials; ++t) {
    Eigen::MatrixXcd f(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f(i, j) = {N01(rng), N01(rng)};
    const Eigen::MatrixXcd h = (f + f.adjoint()) / 2.0;

    const PhaseFunction Fh = z_map(h, grid);
    rep.hermitian_residual =
        std::max(rep.hermitian_residual, (z_inv(time_reversal(Fh)) - h.conjugate()).cwiseAbs().maxCoeff());

    const PhaseFunction Ff = z_map(f, grid);
    rep.antiunitary_residual = std::max(
        rep.antiunitary_residual, (z_inv(time_reversal(Ff.conj())) - f.conjugate()).cwiseAbs().maxCoeff());
    rep.plain_parity_general = std::max(
        rep.plain_parity_general, (z_inv(time_reversal(Ff)) - f.conjugate()).cwiseAbs().maxCoeff());

    rep.involution_exact &= time_reversal(time_reversal(Ff)).values == Ff.values;
  }
  Eigen::MatrixXcd s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = std::exp(-0.1 * (grid.x(i) * grid.x(i) + grid.x(j) * grid.x(j)) +
                                                   0.05 * grid.x(i) * grid.x(j));
  rep.real_symmetric_fixed = (z_inv(time_reversal(z_map(s, grid))) - s).cwiseAbs().maxCoeff() < 1e-12;
  return rep;
}

}  // namespace phasespace
