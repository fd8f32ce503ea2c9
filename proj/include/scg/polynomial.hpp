// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace scg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order. The zero polynomial has no coefficients
/// and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Integer& c);
  /// x - root
  static IntPolynomial linear_root(long root);
  static IntPolynomial monomial(const Integer& c, int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const Integer& leading() const;
  Integer coefficient(int i) const;
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;
  /// Sign of p(x) computed without forming the rational value.
  int sign_at(const Rational& x) const;

  IntPolynomial derivative() const;
  IntPolynomial pow(unsigned exponent) const;

  Integer content() const;
  /// p / content(p), normalized to a positive leading coefficient.
  IntPolynomial primitive_part() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Integer& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial a) { return a *= c; }
  IntPolynomial operator-() const;

  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Coefficients as decimal strings, ascending.
  std::vector<std::string> coefficient_strings() const;
  static IntPolynomial from_strings(const std::vector<std::string>& coefficients);
  /// Human-readable form in the variable x, e.g. "x^3 - 3*x + 2".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b. Requires b nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient a / b over the rationals; throws if b does not divide a exactly.
/// The result is scaled to a primitive integer polynomial with positive
/// leading coefficient (roots are all that matter to callers).
IntPolynomial exact_quotient_primitive(const IntPolynomial& a, const IntPolynomial& b);

/// True when b divides a in Q[x].
bool divides(const IntPolynomial& b, const IntPolynomial& a);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Yun decomposition: factors[i] is the primitive product of the irreducible
/// factors of multiplicity i+1 (possibly constant 1).
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

/// Parses decimal ("1e-12", "0.25") or fraction ("1/1024") text exactly.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
/// Truncated decimal expansion with the given number of fractional digits.
std::string to_decimal(const Rational& q, int digits);

}  // namespace scg
