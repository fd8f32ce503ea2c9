// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "scg/graph.hpp"
#include "scg/polynomial.hpp"

namespace scg {

/// Sturm sequence of the square-free part of a polynomial. Variation counts
/// drop zeros, so count(a, b) is the number of distinct roots in (a, b].
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  int variations(const Rational& x) const;
  int variations_at_positive_infinity() const;
  int variations_at_negative_infinity() const;

  int count(const Rational& a, const Rational& b) const;
  /// Distinct roots in (a, +inf).
  int count_above(const Rational& a) const;
  /// Distinct real roots overall.
  int count_all() const;

  const IntPolynomial& squarefree() const { return chain_.front(); }
  const std::vector<IntPolynomial>& chain() const { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Number of distinct real roots of p in (a, b]. Requires a < b, p nonzero.
int sturm_root_count(const IntPolynomial& p, const Rational& a, const Rational& b);

/// Integer B with every real root of p in (-B, B).
Integer root_bound(const IntPolynomial& p);

/// An exactly bracketed real root: the polynomial has exactly one distinct
/// root in (lo, hi]. For largest-root intervals there is also none above hi.
class RootInterval {
 public:
  RootInterval(std::shared_ptr<const SturmSequence> sturm, IntPolynomial poly, Rational lo,
               Rational hi);

  /// Rebuilds an interval from stored data and certifies it brackets the
  /// largest real root; throws Error(Numeric) otherwise.
  static RootInterval verified_largest(const IntPolynomial& poly, const Rational& lo,
                                       const Rational& hi);

  const IntPolynomial& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  const SturmSequence& sturm() const { return *sturm_; }

  /// Halves the interval, keeping the root inside.
  void bisect();
  void refine(const Rational& width);
  bool contains(const Rational& x) const { return lo_ < x && x <= hi_; }

 private:
  std::shared_ptr<const SturmSequence> sturm_;
  IntPolynomial poly_;
  Rational lo_, hi_;
};

/// Largest real root of p, to width <= `width`. Throws when p has no real root.
RootInterval largest_root(const IntPolynomial& p, const Rational& width);

/// Every real root with multiplicity, descending by midpoint; each interval
/// has width <= `width`.
std::vector<RootInterval> all_roots(const IntPolynomial& p, const Rational& width);

/// Index (largest eigenvalue) of a signed complete graph. The initial bracket
/// is (-n, n].
RootInterval index(const SignedCompleteGraph& g, const Rational& width);

enum class Comparison { Less, Equal, Greater };

const char* to_string(Comparison c) noexcept;

/// Exact trichotomy on the bracketed roots. Refines copies of the intervals
/// until they separate; once both are narrower than 2^-64 a common root in
/// the overlap (checked through the gcd) decides equality.
Comparison compare_roots(const RootInterval& a, const RootInterval& b);

Comparison compare_indices(const SignedCompleteGraph& a, const SignedCompleteGraph& b);

/// Default width used for reported index intervals: 2^-40.
Rational report_width();

}  // namespace scg
