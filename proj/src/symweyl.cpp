#include "phasespace/symweyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "phasespace/symbol_text.hpp"

namespace phasespace {

// ---------------------------------------------------------------- PolySymbol

PolySymbol PolySymbol::constant(const QComplex& c) { return monomial(0, 0, c); }

PolySymbol PolySymbol::monomial(int m, int n, const QComplex& c) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative exponent");
  PolySymbol s;
  s.add(m, n, c);
  return s;
}

void PolySymbol::add(int m, int n, const QComplex& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace({m, n}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QComplex PolySymbol::coeff(int m, int n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? QComplex() : it->second;
}

bool PolySymbol::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](auto& t) { return t.second.is_real(); });
}

int PolySymbol::total_degree() const {
  int d = -1;
  for (auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

PolySymbol PolySymbol::derivative(int dq, int dp) const {
  PolySymbol out;
  for (auto& [k, c] : terms_) {
    const auto [m, n] = k;
    if (m < dq || n < dp) continue;
    const Rational f = factorial(m) / factorial(m - dq) * factorial(n) / factorial(n - dp);
    out.add(m - dq, n - dp, c * QComplex(f));
  }
  return out;
}

PolySymbol PolySymbol::conj() const {
  PolySymbol out;
  for (auto& [k, c] : terms_) out.add(k.first, k.second, c.conj());
  return out;
}

PolySymbol PolySymbol::without_constant() const {
  PolySymbol out = *this;
  out.terms_.erase({0, 0});
  return out;
}

std::complex<double> PolySymbol::evaluate(double q, double p) const {
  std::complex<double> acc = 0.0;
  for (auto& [k, c] : terms_) acc += c.to_complex() * std::pow(q, k.first) * std::pow(p, k.second);
  return acc;
}

PolySymbol& PolySymbol::operator+=(const PolySymbol& o) {
  for (auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

PolySymbol& PolySymbol::operator-=(const PolySymbol& o) {
  for (auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

PolySymbol& PolySymbol::operator*=(const QComplex& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

PolySymbol operator*(const PolySymbol& a, const PolySymbol& b) {
  PolySymbol out;
  for (auto& [ka, ca] : a.terms_)
    for (auto& [kb, cb] : b.terms_) out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::word(const std::string& w, const QComplex& c) {
  for (char ch : w)
    if (ch != 'q' && ch != 'p') throw std::invalid_argument("NCPoly words use only 'q' and 'p'");
  NCPoly x;
  x.add(w, c);
  return x;
}

void NCPoly::add(const std::string& w, const QComplex& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QComplex NCPoly::coeff(const std::string& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QComplex() : it->second;
}

int NCPoly::degree() const {
  int d = -1;
  for (auto& [w, c] : terms_) d = std::max(d, int(w.size()));
  return d;
}

bool NCPoly::is_normal_ordered() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](auto& t) { return t.first.find("pq") == std::string::npos; });
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const QComplex& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (auto& [wa, ca] : a.terms_)
    for (auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
  return out;
}

std::string normal_word(int a, int b) { return std::string(a, 'q') + std::string(b, 'p'); }

namespace {

using NormalMap = std::map<std::pair<int, int>, QComplex>;

void accumulate(NormalMap& m, int a, int b, const QComplex& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.try_emplace({a, b}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// q^a p^b * letter, using p^b q = q p^b - i b p^{b-1}
NormalMap right_multiply(const NormalMap& in, char letter) {
  NormalMap out;
  for (auto& [k, c] : in) {
    const auto [a, b] = k;
    if (letter == 'p') {
      accumulate(out, a, b + 1, c);
    } else {
      accumulate(out, a + 1, b, c);
      if (b > 0) accumulate(out, a, b - 1, c * QComplex(Rational(0), Rational(-b)));
    }
  }
  return out;
}

NormalMap normal_form(const NCPoly& x) {
  NormalMap total;
  for (auto& [w, c] : x.terms()) {
    NormalMap cur;
    cur[{0, 0}] = c;
    for (char ch : w) cur = right_multiply(cur, ch);
    for (auto& [k, v] : cur) accumulate(total, k.first, k.second, v);
  }
  return total;
}

}  // namespace

NCPoly nc_normalize(const NCPoly& x) {
  NCPoly out;
  for (auto& [k, c] : normal_form(x)) out.add(normal_word(k.first, k.second), c);
  return out;
}

PolySymbol weyl_symbol(const NCPoly& x) {
  PolySymbol out;
  const QComplex half_i(Rational(0), make_rational(1, 2));
  for (auto& [k, c] : normal_form(x)) {
    const auto [a, b] = k;
    QComplex pw = 1;
    for (int j = 0; j <= std::min(a, b); ++j) {
      out.add(a - j, b - j, c * pw * QComplex(factorial(j) * binomial(a, j) * binomial(b, j)));
      pw *= half_i;
    }
  }
  return out;
}

NCPoly weyl_quantize(const PolySymbol& A) {
  NCPoly out;
  const QComplex mhalf_i(Rational(0), make_rational(-1, 2));
  for (auto& [k, c] : A.terms()) {
    const auto [m, n] = k;
    QComplex pw = 1;
    for (int j = 0; j <= std::min(m, n); ++j) {
      out.add(normal_word(m - j, n - j),
              c * pw * QComplex(factorial(j) * binomial(m, j) * binomial(n, j)));
      pw *= mhalf_i;
    }
  }
  return out;
}

NCPoly weyl_quantize_symmetrized(const PolySymbol& A) {
  NCPoly raw;
  for (auto& [k, c] : A.terms()) {
    const auto [m, n] = k;
    const Rational scale = pow_rational(Rational(2), -m);
    for (int r = 0; r <= m; ++r)
      raw.add(std::string(m - r, 'q') + std::string(n, 'p') + std::string(r, 'q'),
              c * QComplex(scale * binomial(m, r)));
  }
  return nc_normalize(raw);
}

PolySymbol janus_power(const PolySymbol& A, const PolySymbol& B, int k) {
  PolySymbol out;
  const Rational scale = pow_rational(Rational(2), -k);
  for (int j = 0; j <= k; ++j) {
    const PolySymbol dA = A.derivative(j, k - j);
    if (dA.is_zero()) continue;
    const PolySymbol dB = B.derivative(k - j, j);
    if (dB.is_zero()) continue;
    Rational c = scale * binomial(k, j);
    if ((k - j) % 2) c = -c;
    out += (dA * dB) * QComplex(c);
  }
  return out;
}

namespace {
int series_order(const PolySymbol& A, const PolySymbol& B) {
  return std::max(0, std::min(A.total_degree(), B.total_degree()));
}
}  // namespace

PolySymbol star_symbolic_left(const PolySymbol& A, const PolySymbol& B) {
  PolySymbol out;
  for (int k = 0; k <= series_order(A, B); ++k)
    out += janus_power(A, B, k) * (QComplex::ipow(k) / QComplex(factorial(k)));
  return out;
}

PolySymbol star_symbolic_right(const PolySymbol& A, const PolySymbol& B) {
  PolySymbol out;
  for (int k = 0; k <= series_order(A, B); ++k)
    out += janus_power(B, A, k) * (QComplex::ipow(-k) / QComplex(factorial(k)));
  return out;
}

PolySymbol star_symbolic(const PolySymbol& A, const PolySymbol& B) {
  PolySymbol l = star_symbolic_left(A, B);
  if (l != star_symbolic_right(A, B))
    throw std::logic_error("left and right J-series disagree for " + to_string(A) + " * " +
                           to_string(B));
  return l;
}

PolySymbol moyal_symbolic(const PolySymbol& A, const PolySymbol& B) {
  PolySymbol out;
  for (int k = 1; k <= series_order(A, B); k += 2) {
    Rational c = Rational(2) / factorial(k);
    if (((k - 1) / 2) % 2) c = -c;
    out += janus_power(A, B, k) * QComplex(c);
  }
  return out;
}

PolySymbol swap_symbol(const PolySymbol& A) {
  PolySymbol out;
  for (auto& [k, c] : A.terms()) {
    const auto [m, n] = k;  // q^m p^n -> p^m (-q)^n
    out.add(n, m, (n % 2) ? -c : c);
  }
  return out;
}

NCPoly swap_operator(const NCPoly& x) {
  NCPoly out;
  for (auto& [w, c] : x.terms()) {
    std::string s = w;
    int sign = 1;
    for (char& ch : s) {
      if (ch == 'q') {
        ch = 'p';
      } else {
        ch = 'q';
        sign = -sign;
      }
    }
    out.add(s, sign < 0 ? -c : c);
  }
  return out;
}

std::string to_string(const NCPoly& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (auto& [w, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    std::string word;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!word.empty()) word += '*';
      word += w[i] == 'q' ? "Q" : "P";
      if (j - i > 1) word += "^" + std::to_string(j - i);
      i = j;
    }
    const std::string cs = to_string(c);
    if (word.empty())
      out += cs;
    else if (c == QComplex(1))
      out += word;
    else
      out += cs + "*" + word;
  }
  return out;
}

}  // namespace phasespace
