#pragma once

#include <array>
#include <string>
#include <vector>

#include "phasespace/liftgen.hpp"
#include "phasespace/wigner.hpp"

namespace phasespace {

/// One commutation relation checked exactly: lhs == rhs.
struct Relation {
  std::string name;
  bool holds = false;
  std::string defect;  // printed lhs - rhs when it fails
};

/// Hilbert-space side of a factorized phase-space representation.  The
/// cocycle phase and every additive constant are fixed to 0.
struct FactorizationResult {
  std::string example;
  std::vector<std::string> names;
  std::vector<DiffOp> phase_generators;
  std::vector<OneVarOp> hilbert_generators;  // in x and dx
  std::vector<Relation> phase_relations;
  std::vector<Relation> hilbert_relations;
  double cocycle_phase = 0.0;
  std::vector<std::string> additive_constants;  // names of the constants set to 0
  bool all_hold() const;
  std::vector<std::string> pretty() const;
};

Relation check_relation(const std::string& name, const DiffOp& lhs, const DiffOp& rhs);
Relation check_relation(const std::string& name, const OneVarOp& lhs, const OneVarOp& rhs);

/// Hilbert operator for a lifted generator: the split of hbar Z^dagger alpha Z.
/// Throws std::domain_error when alpha fails the split test.
OneVarOp factorize_generator(const DiffOp& alpha, const Rational& hbar = 1);

// ----------------------------------------------------------- Heisenberg-Weyl

struct HWElement {
  double a1 = 0.0, a2 = 0.0;
  double hbar = 1.0;
  HWElement operator*(const HWElement& o) const { return {a1 + o.a1, a2 + o.a2, hbar}; }
};

/// F(q + a1, p - a2) as a cyclic index shift; a1, a2 must be multiples of the
/// q and p spacings.
PhaseFunction hw_action(const HWElement& g, const PhaseFunction& F);
/// e^{i a2 x / hbar} u(x + a1), zero outside the grid; a1 a multiple of dx.
Eigen::VectorXcd hw_hilbert_action(const HWElement& g, const Eigen::VectorXcd& u, const GridSpec& grid);
/// omega in U(a)U(b) = e^{i omega} U(ab):  a1 b2 / hbar
double hw_cocycle(const HWElement& a, const HWElement& b);

std::array<DiffOp, 2> hw_phase_generators();
FactorizationResult hw_factorize(const Rational& hbar);

struct TowerLevel {
  int n = 0;
  DiffOp beta;
  PolySymbol symbol;    // read back from beta
  OneVarOp b_hat;       // x^n / n!
  bool readoff_ok = false;
  bool closure_ok = false;   // [-i dq, beta_n] = -i beta_{n-1}
  bool bracket_ok = false;   // same bracket through moyal_symbolic
};

/// beta_n = (2/n!) sum_{m <= n, n-m odd} (i/2)^{n-m} C(n,m) q^m dp^{n-m}
DiffOp tower_beta(int n);
std::vector<TowerLevel> gen_heisenberg_tower(int N);

// ------------------------------------------------------------------- Galilei

struct GalileiElement {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;
  double m = 1.0;
  double hbar = 1.0;
  GalileiElement operator*(const GalileiElement& o) const {
    return {a1 + o.a1, a2 + o.a2, a3 + o.a3 + o.a2 * a1, m, hbar};
  }
};

/// Product rule that galilei_action actually composes with: the a1 b2 term
/// enters with the opposite sign to operator*.  Flipping a3 -> -a3 maps one
/// law onto the other.
GalileiElement galilei_action_product(const GalileiElement& a, const GalileiElement& b);

/// F(q - (a1/m) p - a2 a1 - a3, p + m a2).  Off-lattice translations use
/// band-limited resampling; whole-step translations are index shifts.
PhaseFunction galilei_action(const GalileiElement& g, const PhaseFunction& F);
/// Momentum-space ray action on a position-space state (hbar = 1):
/// u(r) -> e^{-i (a1/2m) r^2} e^{-i (a2 a1 + a3) r} u(r + m a2).
Eigen::VectorXcd galilei_hilbert_action(const GalileiElement& g, const Eigen::VectorXcd& psi,
                                        const GridSpec& grid);

std::array<DiffOp, 3> galilei_phase_generators(const Rational& m);
FactorizationResult galilei_factorize(const Rational& m, const Rational& hbar);

/// max |W(U psi) - Pi(g) W(psi)| over the grid for a displaced Gaussian psi.
double galilei_momentum_residual(const GalileiElement& g, const GridSpec& grid);
/// max |Z^dagger Pi(g(t,0,0)) Z K0 - psi_t psi_t^dagger| for the free Gaussian.
double free_evolution_residual(double t, double m, const GridSpec& grid);

// --------------------------------------------------------------------- sp(2)

enum class Sp2Case { A, B };

struct Sp2Params {
  Sp2Case kind = Sp2Case::A;
  Rational a = 0;  // Case B only
};

struct Sp2Result {
  Sp2Params params;
  std::array<DiffOp, 3> alpha;            // as tabulated
  FactorizationResult factorization;      // constants fixed by the relations
  std::array<OneVarOp, 3> printed_hilbert;
  bool printed_relations_hold = false;
  QComplex casimir;
  bool casimir_scalar = false;
  QComplex printed_casimir;
  bool printed_casimir_scalar = false;
};

Sp2Result sp2_generators(const Sp2Params& params);
/// -(a^2 + 1)/4 for Case B, -3/16 for Case A
QComplex sp2_expected_casimir(const Sp2Params& params);

// ------------------------------------------------------------ time reversal

struct TimeReversalReport {
  int trials = 0;
  double hermitian_residual = 0.0;    // max |Z^dag P Z f - conj f|, hermitian f
  double antiunitary_residual = 0.0;  // max |Z^dag P(conj Z f) - conj f|, any f
  double plain_parity_general = 0.0;  // Z^dag P Z f vs conj f for non-hermitian f
  bool involution_exact = false;      // P(P F) == F bit for bit
  bool real_symmetric_fixed = false;
};

/// (Pi(g) F)(q,p) = F(q,-p)
PhaseFunction time_reversal(const PhaseFunction& F);
TimeReversalReport time_reversal_check(const GridSpec& grid, unsigned long seed, int trials = 20);

}  // namespace phasespace
