// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "scg/polynomial.hpp"

namespace scg::formulas {

// Closed-form characteristic polynomials of (K_n, H^-) for the named negative
// subgraphs, and the difference identities between them. Every evaluator
// computes u = n - k itself and refuses parameters outside its validity range
// with Error(Precondition).

/// H = K_{1,k}; 1 <= k <= n-1. For n < 3 the polynomial is computed directly.
IntPolynomial star_charpoly(int n, int k);

/// H = Q_1 (C_4 plus k-4 pendants at one cycle vertex); 4 <= k <= n, n >= 5.
IntPolynomial q1_charpoly(int n, int k);

/// The k = n branch of q1, written through (K_n, K_{1,3}^-); n >= 5.
IntPolynomial q1_charpoly_full_order(int n);

/// H = Q(s,t); s, t >= 1, k = s+t+4 <= n, n >= 7.
IntPolynomial qst_charpoly(int n, int k, int s, int t);

/// The k = n branch of qst in its degree-7 printed form; n = s+t+4 >= 7.
IntPolynomial qst_charpoly_full_order(int n, int s, int t);

/// The k = n branch of qst through the 6-block quotient; n = s+t+4 >= 6.
IntPolynomial qst_charpoly_full_order_sextic(int n, int s, int t);

/// H = U_1 (triangle plus k-3 pendants at one vertex); 3 <= k <= n, n >= 5.
IntPolynomial u1_charpoly(int n, int k);

/// q1_charpoly - qst_charpoly, and its closed product form.
IntPolynomial diff_qst_vs_q1(int n, int k, int s, int t);
IntPolynomial diff_qst_vs_q1_product(int n, int k, int s, int t);

/// u1_charpoly - q1_charpoly, and its closed product form; n >= 5, 4 <= k <= n.
IntPolynomial diff_u1_vs_q1(int n, int k);
IntPolynomial diff_u1_vs_q1_product(int n, int k);

/// star_charpoly - u1_charpoly, and its closed product form; n >= 5, 3 <= k <= n-1.
IntPolynomial diff_star_vs_u1(int n, int k);
IntPolynomial diff_star_vs_u1_product(int n, int k);
/// The k = 3 specialization -16 (x+1)^(n-4) (x-n+4).
IntPolynomial diff_star_vs_u1_triangle(int n);

}  // namespace scg::formulas
