// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "scg/graph.hpp"
#include "scg/polynomial.hpp"

namespace scg {

/// Square integer matrix, row-major.
struct IntMatrix {
  int size = 0;
  std::vector<Integer> entries;

  IntMatrix() = default;
  IntMatrix(int n, std::span<const int> values);
  explicit IntMatrix(int n) : size(n), entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  Integer& at(int i, int j) { return entries[static_cast<std::size_t>(i * size + j)]; }
  const Integer& at(int i, int j) const { return entries[static_cast<std::size_t>(i * size + j)]; }
};

/// Fraction-free (Bareiss) determinant. Uses 128-bit arithmetic when the
/// Hadamard bound proves it cannot overflow, arbitrary precision otherwise.
Integer determinant(const IntMatrix& m);

/// det(xI - A) by evaluation at x = 0..n and exact interpolation.
IntPolynomial char_poly_interpolated(const IntMatrix& a);

/// det(xI - A) by the Faddeev-LeVerrier recurrence (exact integer division).
IntPolynomial char_poly_leverrier(const IntMatrix& a);

/// Exact interpolation through (0, values[0]), ..., (d, values[d]) with
/// rational coefficients; callers decide whether they must be integral.
std::vector<Rational> interpolate_consecutive(std::span<const Rational> values);

/// Characteristic polynomial phi(Gamma, x) of the signed adjacency matrix.
IntPolynomial char_poly(const SignedCompleteGraph& g);

/// Same polynomial through the independent recurrence, for cross-checks.
IntPolynomial char_poly_cross_check(const SignedCompleteGraph& g);

}  // namespace scg
