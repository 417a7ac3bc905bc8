#include "phasespace/liftgen.hpp"

#include <algorithm>
#include <stdexcept>

#include "phasespace/symbol_text.hpp"

namespace phasespace {

namespace {

// (x^a d^b)(x^c d^e) = sum_k C(b,k) c!/(c-k)! x^{a+c-k} d^{b+e-k}
struct Piece {
  int pow, der;
  Rational coef;
};

std::vector<Piece> compose_one(int a, int b, int c, int e) {
  std::vector<Piece> out;
  for (int k = 0; k <= std::min(b, c); ++k)
    out.push_back({a + c - k, b + e - k, binomial(b, k) * factorial(c) / factorial(c - k)});
  return out;
}

// (-d)^b x^a renormalized
std::vector<Piece> adjoint_one(int a, int b) {
  std::vector<Piece> out;
  const Rational sign = (b % 2) ? -1 : 1;
  for (int k = 0; k <= std::min(a, b); ++k)
    out.push_back({a - k, b - k, sign * binomial(b, k) * factorial(a) / factorial(a - k)});
  return out;
}

template <int V, class Key, class Fn>
void cartesian(const std::array<std::vector<Piece>, V>& per, Fn&& emit) {
  std::array<std::size_t, V> idx{};
  for (;;) {
    Key k{};
    Rational c = 1;
    for (int v = 0; v < V; ++v) {
      const Piece& pc = per[v][idx[v]];
      k[2 * v] = pc.pow;
      k[2 * v + 1] = pc.der;
      c *= pc.coef;
    }
    emit(k, c);
    int v = 0;
    while (v < V && ++idx[v] == per[v].size()) idx[v++] = 0;
    if (v == V) return;
  }
}

}  // namespace

template <int V, class N>
void WeylOp<V, N>::add(const Key& k, const QComplex& c) {
  if (c.is_zero()) return;
  for (int v : k)
    if (v < 0) throw std::invalid_argument("negative exponent in operator term");
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <int V, class N>
QComplex WeylOp<V, N>::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? QComplex() : it->second;
}

template <int V, class N>
WeylOp<V, N> WeylOp<V, N>::conj() const {
  WeylOp o;
  for (auto& [k, c] : terms_) o.add(k, c.conj());
  return o;
}

template <int V, class N>
WeylOp<V, N> WeylOp<V, N>::adjoint() const {
  WeylOp o;
  for (auto& [k, c] : terms_) {
    std::array<std::vector<Piece>, V> per;
    for (int v = 0; v < V; ++v) per[v] = adjoint_one(k[2 * v], k[2 * v + 1]);
    const QComplex cc = c.conj();
    cartesian<V, Key>(per, [&](const Key& key, const Rational& r) { o.add(key, cc * QComplex(r)); });
  }
  return o;
}

template <int V, class N>
bool WeylOp<V, N>::is_pure_imaginary() const {
  return std::all_of(terms_.begin(), terms_.end(), [](auto& t) { return t.second.is_imaginary(); });
}

template <int V, class N>
WeylOp<V, N>& WeylOp<V, N>::operator+=(const WeylOp& o) {
  for (auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

template <int V, class N>
WeylOp<V, N>& WeylOp<V, N>::operator-=(const WeylOp& o) {
  for (auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

template <int V, class N>
WeylOp<V, N>& WeylOp<V, N>::operator*=(const QComplex& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

template <int V, class N>
WeylOp<V, N> WeylOp<V, N>::compose(const WeylOp& a, const WeylOp& b) {
  WeylOp o;
  for (auto& [ka, ca] : a.terms_)
    for (auto& [kb, cb] : b.terms_) {
      std::array<std::vector<Piece>, V> per;
      for (int v = 0; v < V; ++v)
        per[v] = compose_one(ka[2 * v], ka[2 * v + 1], kb[2 * v], kb[2 * v + 1]);
      const QComplex c = ca * cb;
      cartesian<V, Key>(per, [&](const Key& key, const Rational& r) { o.add(key, c * QComplex(r)); });
    }
  return o;
}

template <int V, class N>
std::string WeylOp<V, N>::str() const {
  // multiplication factors first, then derivatives
  std::vector<std::pair<QComplex, std::string>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Key& k = it->first;
    std::string mono;
    auto put = [&](const std::string& f, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += f;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    for (int v = 0; v < V; ++v) put(N::v[v], k[2 * v]);
    for (int v = 0; v < V; ++v) put(std::string("d") + N::v[v], k[2 * v + 1]);
    parts.emplace_back(it->second, mono);
  }
  return format_sum(parts);
}

template class WeylOp<2, PhaseNames>;
template class WeylOp<2, XYNames>;
template class WeylOp<1, XNames>;

std::string to_string(const DiffOp& a) { return a.str(); }
std::string to_string(const TwoVarOp& a) { return a.str(); }
std::string to_string(const OneVarOp& a) { return a.str(); }

DiffOp dop(int a, int b, int c, int d, const QComplex& coef) {
  return DiffOp::term({a, c, b, d}, coef);
}

DiffOp diffop_compose(const DiffOp& x, const DiffOp& y) { return x * y; }
DiffOp diffop_commutator(const DiffOp& x, const DiffOp& y) { return commutator(x, y); }

namespace {

// f(q,p) d_q^c d_p^d as a DiffOp
DiffOp times_derivative(const PolySymbol& f, int c, int d) {
  DiffOp o;
  for (auto& [k, v] : f.terms()) o += dop(k.first, k.second, c, d, v);
  return o;
}

DiffOp xi_series(const PolySymbol& A, int max_order) {
  DiffOp out;
  const int top = std::min(max_order, std::max(0, A.total_degree()));
  for (int k = 1; k <= top; k += 2) {
    // i * 2 (-1)^{(k-1)/2} / k! * 2^{-k}
    Rational c = Rational(2) / factorial(k) * pow_rational(Rational(2), -k);
    if (((k - 1) / 2) % 2) c = -c;
    const QComplex pref(Rational(0), c);
    for (int j = 0; j <= k; ++j) {
      const PolySymbol dA = A.derivative(j, k - j);
      if (dA.is_zero()) continue;
      Rational b = binomial(k, j);
      if ((k - j) % 2) b = -b;
      out += times_derivative(dA, k - j, j) * (pref * QComplex(b));
    }
  }
  return out;
}

}  // namespace

DiffOp xi_lift(const PolySymbol& A) {
  if (!A.is_real()) throw std::invalid_argument("xi_lift: observable must be real, got " + to_string(A));
  return xi_series(A, std::max(0, A.total_degree()));
}

DiffOp xi_lift_truncated(const PolySymbol& A, int max_order) {
  if (!A.is_real()) throw std::invalid_argument("xi_lift: observable must be real, got " + to_string(A));
  return xi_series(A, max_order);
}

bool is_generator_form(const DiffOp& alpha) {
  return alpha.is_pure_imaginary() && alpha.adjoint() == alpha;
}

TwoVarOp z_conjugate(const DiffOp& alpha, const Rational& hbar) {
  if (sgn(hbar) <= 0) throw std::invalid_argument("hbar must be positive");
  const Rational half = make_rational(1, 2);
  const TwoVarOp Q = xyop(1, 0, 0, 0, half) + xyop(0, 0, 1, 0, half);
  const TwoVarOp P = xyop(0, 1, 0, 0, QComplex(0, -hbar * half)) + xyop(0, 0, 0, 1, QComplex(0, hbar * half));
  const TwoVarOp Dq = xyop(0, 1, 0, 0) + xyop(0, 0, 0, 1);
  const TwoVarOp Dp = xyop(1, 0, 0, 0, QComplex(0, -1 / hbar)) + xyop(0, 0, 1, 0, QComplex(0, 1 / hbar));

  std::map<std::pair<int, int>, TwoVarOp> cache;  // (which, power)
  const TwoVarOp* base[4] = {&Q, &Dq, &P, &Dp};
  auto power = [&](int which, int e) -> const TwoVarOp& {
    auto it = cache.find({which, e});
    if (it != cache.end()) return it->second;
    TwoVarOp r = TwoVarOp::scalar(1);
    for (int i = 0; i < e; ++i) r = r * *base[which];
    return cache.emplace(std::make_pair(which, e), std::move(r)).first->second;
  };

  TwoVarOp out;
  for (auto& [k, c] : alpha.terms()) {
    // key (q pow, dq ord, p pow, dp ord); operator order q^a p^b dq^c dp^d
    TwoVarOp t = power(0, k[0]) * power(2, k[2]) * power(1, k[1]) * power(3, k[3]);
    out += t * c;
  }
  return out;
}

SplitResult split_test(const TwoVarOp& t) {
  SplitResult r;
  TwoVarOp cross;
  OneVarOp X, Y;
  QComplex c00;
  for (auto& [k, c] : t.terms()) {
    const bool xs = k[0] || k[1], ys = k[2] || k[3];
    if (xs && ys)
      cross.add(k, c);
    else if (xs)
      X.add({k[0], k[1]}, c);
    else if (ys)
      Y.add({k[2], k[3]}, c);
    else
      c00 = c;
  }
  if (!cross.is_zero()) {
    r.witness = cross;
    r.reason = "cross terms couple x and y";
    return r;
  }
  const OneVarOp expectY = X.conj() * QComplex(-1);
  if (expectY != Y) {
    const OneVarOp diff = Y - expectY;
    for (auto& [k, c] : diff.terms()) r.witness.add({0, 0, k[0], k[1]}, c);
    r.reason = "y part is not minus the conjugate of the x part";
    return r;
  }
  if (!c00.is_imaginary()) {
    r.witness.add({0, 0, 0, 0}, c00);
    r.reason = "constant term has a real part";
    return r;
  }
  // t's constant is A0 - conj(A0) = 2i Im A0; the real part of A0 is the free gauge
  OneVarOp A = X + OneVarOp::scalar(c00 * QComplex(make_rational(1, 2)));
  if (A.adjoint() != A) {
    r.witness = t;
    r.reason = "split operator is not hermitian";
    return r;
  }
  r.accepted = true;
  r.a_hat = A;
  return r;
}

NCPoly to_ncpoly(const OneVarOp& a) {
  NCPoly out;
  for (auto& [k, c] : a.terms()) out.add(normal_word(k[0], k[1]), c * QComplex::ipow(k[1]));
  return out;
}

OneVarOp from_ncpoly(const NCPoly& x) {
  OneVarOp out;
  const NCPoly normal = nc_normalize(x);
  for (auto& [w, c] : normal.terms()) {
    const int a = int(std::count(w.begin(), w.end(), 'q'));
    const int b = int(w.size()) - a;
    out.add({a, b}, c * QComplex::ipow(-b));
  }
  return out;
}

std::optional<PolySymbol> read_off_generator(const DiffOp& alpha) {
  const SplitResult s = split_test(z_conjugate(alpha));
  if (!s.accepted) return std::nullopt;
  PolySymbol A = weyl_symbol(to_ncpoly(s.a_hat)).without_constant();
  if (!A.is_real()) return std::nullopt;
  if (xi_lift(A) != alpha) return std::nullopt;
  return A;
}

DiffOp xi_monomial(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("xi_monomial: negative degree");
  const QComplex hi(Rational(0), make_rational(1, 2));
  const DiffOp Xp = dop(1, 0, 0, 0) + dop(0, 0, 0, 1, hi);
  const DiffOp Xm = dop(1, 0, 0, 0) - dop(0, 0, 0, 1, hi);
  const DiffOp Ym = dop(0, 1, 0, 0) - dop(0, 0, 1, 0, hi);
  const DiffOp Yp = dop(0, 1, 0, 0) + dop(0, 0, 1, 0, hi);
  auto pw = [](const DiffOp& b, int e) {
    DiffOp r = DiffOp::scalar(1);
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
  };
  DiffOp out;
  const Rational scale = pow_rational(Rational(2), -m);
  const DiffOp Ymn = pw(Ym, n), Ypn = pw(Yp, n);
  for (int r = 0; r <= m; ++r) {
    const QComplex c(scale * binomial(m, r));
    out += (pw(Xp, m - r) * Ymn * pw(Xp, r) - pw(Xm, m - r) * Ypn * pw(Xm, r)) * c;
  }
  return out;
}

PolySymbol apply(const DiffOp& alpha, const PolySymbol& f) {
  PolySymbol out;
  for (auto& [k, c] : alpha.terms()) {
    const PolySymbol df = f.derivative(k[1], k[3]);
    out += PolySymbol::monomial(k[0], k[2], c) * df;
  }
  return out;
}

}  // namespace phasespace
