// SPDX-License-Identifier: Apache-2.0

#include "scg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "scg/error.hpp"

namespace scg {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::linear_root(long root) { return IntPolynomial{-root, 1}; }

IntPolynomial IntPolynomial::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Integer IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + Rational(*it);
  v.canonicalize();
  return v;
}

int IntPolynomial::sign_at(const Rational& x) const {
  // Homogenized Horner: sum c_i a^i b^(d-i) has the sign of p(a/b) for b > 0.
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer v = 0;
  Integer bp = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    v = v * a + *it * bp;
    bp *= b;
  }
  return sgn(v);
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const Integer& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  for (Integer& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (Integer& x : r.coeffs_) x = -x;
  return r;
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const Integer& c : coeffs_) out.push_back(c.get_str());
  if (out.empty()) out.push_back("0");
  return out;
}

IntPolynomial IntPolynomial::from_strings(const std::vector<std::string>& coefficients) {
  std::vector<Integer> v;
  v.reserve(coefficients.size());
  for (const std::string& s : coefficients) {
    Integer c;
    if (s.empty() || c.set_str(s, 10) != 0)
      fail(ErrorKind::Parse, "malformed integer coefficient '" + s + "'");
    v.push_back(std::move(c));
  }
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidArgument, "pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const int delta = a.degree() - b.degree() + 1;
  const Integer& lb = b.leading();
  IntPolynomial r = a;
  int steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    IntPolynomial shifted = b * IntPolynomial::monomial(r.leading(), r.degree() - b.degree());
    r *= lb;
    r -= shifted;
    ++steps;
  }
  for (int i = steps; i < delta; ++i) r *= lb;
  return r;
}

namespace {

/// Rational long division; returns {quotient, remainder}.
std::pair<std::vector<Rational>, std::vector<Rational>> divide_rational(const IntPolynomial& a,
                                                                        const IntPolynomial& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidArgument, "division by the zero polynomial");
  std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const Rational lb(b.leading());
  std::vector<Rational> q(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), 0);
  for (int d = a.degree(); d >= db; --d) {
    Rational factor = r[static_cast<std::size_t>(d)] / lb;
    q[static_cast<std::size_t>(d - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(d - db + j)] -= factor * Rational(b.coefficients()[static_cast<std::size_t>(j)]);
  }
  r.resize(static_cast<std::size_t>(std::max(0, db)));
  return {q, r};
}

IntPolynomial primitive_from_rationals(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const Rational& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const Rational& c : v) {
    Rational scaled = c * Rational(l);
    scaled.canonicalize();
    out.push_back(scaled.get_num());
  }
  return IntPolynomial(std::move(out)).primitive_part();
}

}  // namespace

IntPolynomial exact_quotient_primitive(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divide_rational(a, b);
  for (const Rational& c : r)
    if (c != 0) fail(ErrorKind::InvalidArgument, "polynomial division is not exact");
  return primitive_from_rationals(q);
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  return pseudo_remainder(a, b).is_zero();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  return exact_quotient_primitive(p, gcd(p, p.derivative()));
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  // g_0 = p, g_{i+1} = gcd(g_i, g_i'); h_i = g_{i-1} / g_i collects the factors of
  // multiplicity >= i, and h_i / h_{i+1} those of multiplicity exactly i.
  std::vector<IntPolynomial> h;
  IntPolynomial g = p.primitive_part();
  while (g.degree() > 0) {
    IntPolynomial next = gcd(g, g.derivative());
    h.push_back(exact_quotient_primitive(g, next));
    g = std::move(next);
  }
  std::vector<IntPolynomial> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i + 1 < h.size()) out.push_back(exact_quotient_primitive(h[i], h[i + 1]));
    else out.push_back(h[i]);
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() { fail(ErrorKind::Parse, "malformed rational '" + text + "'"); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0)
      bad();
    if (den == 0) bad();
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  Integer mantissa = 0;
  long scale = 0;
  bool digits = false, dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      digits = true;
      if (dot) --scale;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) bad();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') bad();
    try {
      std::size_t used = 0;
      long e = std::stol(text.substr(i + 1), &used);
      if (used != text.size() - i - 1) bad();
      scale += e;
    } catch (const std::exception&) {
      bad();
    }
  }
  if (scale > 10000 || scale < -10000) bad();
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale < 0 ? Rational(mantissa, ten_pow) : Rational(mantissa * ten_pow);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer num = abs(q.get_num()) * scale;
  Integer t;
  mpz_tdiv_q(t.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  std::string s = t.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
  std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  if (q < 0) out.insert(0, "-");
  return out;
}

}  // namespace scg
