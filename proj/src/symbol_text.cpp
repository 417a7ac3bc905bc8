#include "phasespace/symbol_text.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace phasespace {

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view t) : text_(t) {}

  PolySymbol run() {
    PolySymbol v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& m) const { throw ParseError(m, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_atom(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'q' || c == 'p' ||
           c == '(';
  }

  PolySymbol expr() {
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = text_[pos_++] == '-';
    PolySymbol v = term();
    if (neg) v = -v;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      PolySymbol t = term();
      if (c == '+')
        v += t;
      else
        v -= t;
    }
    return v;
  }

  PolySymbol term() {
    PolySymbol v = power();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * power();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        PolySymbol d = power();
        if (d.total_degree() != 0) {
          pos_ = at;
          fail("division by a non-constant or zero expression");
        }
        v *= QComplex(1) / d.coeff(0, 0);
      } else if (starts_atom(c)) {
        v = v * power();
      } else {
        break;
      }
    }
    return v;
  }

  PolySymbol power() {
    PolySymbol base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (e > 64) fail("exponent too large");
    PolySymbol out = PolySymbol::constant(1);
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
  }

  PolySymbol atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return PolySymbol::constant(QComplex(Rational(std::string(text_.substr(start, pos_ - start)))));
    }
    switch (c) {
      case 'i': ++pos_; return PolySymbol::constant(QComplex::i());
      case 'q': ++pos_; return PolySymbol::q();
      case 'p': ++pos_; return PolySymbol::p();
      case '(': {
        ++pos_;
        PolySymbol v = expr();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        return v;
      }
      case '\0': fail("unexpected end of input");
      default: fail("unexpected character '" + std::string(1, c) + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string magnitude(const Rational& r) {
  if (r.get_den() == 1) return r.get_str();
  return "(" + r.get_str() + ")";
}

std::string monomial_text(int m, int n) {
  std::string s;
  auto put = [&](char v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  put('q', m);
  put('p', n);
  return s;
}

}  // namespace

PolySymbol parse_symbol(std::string_view text) { return Parser(text).run(); }

std::string format_sum(const std::vector<std::pair<QComplex, std::string>>& terms) {
  std::string out;
  for (auto& [c, mono] : terms) {
    if (c.is_zero()) continue;
    bool neg = false;
    std::string coef;
    if (c.is_real()) {
      neg = sgn(c.re()) < 0;
      const Rational a = abs(c.re());
      coef = (a == 1 && !mono.empty()) ? "" : magnitude(a);
    } else if (c.is_imaginary()) {
      neg = sgn(c.im()) < 0;
      const Rational a = abs(c.im());
      coef = (a == 1 ? "" : magnitude(a)) + "i";
    } else {
      coef = "(" + c.re().get_str() + (sgn(c.im()) < 0 ? " - " : " + ") +
             magnitude(abs(c.im())) + "i)";
    }
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += coef;
    if (!mono.empty()) out += (coef.empty() ? "" : "*") + mono;
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const PolySymbol& A) {
  std::vector<std::pair<PolySymbol::Key, QComplex>> terms(A.terms().begin(), A.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](auto& a, auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::vector<std::pair<QComplex, std::string>> parts;
  for (auto& [k, c] : terms) parts.emplace_back(c, monomial_text(k.first, k.second));
  return format_sum(parts);
}

}  // namespace phasespace
