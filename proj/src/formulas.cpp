// SPDX-License-Identifier: Apache-2.0

#include "scg/formulas.hpp"

#include <algorithm>

#include "scg/charpoly.hpp"
#include "scg/error.hpp"
#include "scg/families.hpp"

namespace scg::formulas {

namespace {

void require(bool ok, const char* formula, const std::string& what) {
  if (!ok) fail(ErrorKind::Precondition, std::string(formula) + ": " + what);
}

/// (x + 1)^e
IntPolynomial plus_one_pow(int e) { return IntPolynomial{1, 1}.pow(static_cast<unsigned>(e)); }

/// Polynomial from coefficients listed from the leading term down.
IntPolynomial descending(std::initializer_list<long> coeffs) {
  std::vector<Integer> v(coeffs.begin(), coeffs.end());
  std::reverse(v.begin(), v.end());
  return IntPolynomial(std::move(v));
}

void check_qst(int n, int k, int s, int t, const char* name) {
  require(s >= 1 && t >= 1, name, "needs s, t >= 1");
  require(k == s + t + 4, name, "needs k = s + t + 4");
  require(k <= n, name, "needs k <= n");
  require(n >= 7, name, "needs n >= 7");
}

}  // namespace

IntPolynomial star_charpoly(int n, int k) {
  require(k >= 1 && k <= n - 1, "star", "needs 1 <= k <= n-1");
  if (n < 3) return char_poly(build_signed_complete(n, build_family(FamilySpec::star(k))));
  const long N = n, K = k;
  return plus_one_pow(n - 3) * descending({1, 3 - N, 3 - 2 * N, 4 * K * (N - K - 1) + 1 - N});
}

IntPolynomial q1_charpoly(int n, int k) {
  require(k >= 4 && k <= n, "q1", "needs 4 <= k <= n");
  require(n >= 5, "q1", "needs n >= 5");
  const long N = n, K = k, U = n - k;
  return plus_one_pow(n - 5) * descending({1, 5 - N, 10 - 4 * N, 12 * K - 6 * N + 4 * K * U - 38,
                                           24 * K - 4 * N + 8 * K * U - 91,
                                           127 * N - 116 * K - 28 * K * U - 47});
}

IntPolynomial q1_charpoly_full_order(int n) {
  require(n >= 5, "q1 (k = n)", "needs n >= 5");
  const long N = n;
  return plus_one_pow(n - 3) * descending({1, 3 - N, 3 - 2 * N, 11 * N - 47});
}

IntPolynomial qst_charpoly(int n, int k, int s, int t) {
  check_qst(n, k, s, t, "qst");
  const long N = n, K = k, U = n - k, ST = static_cast<long>(s) * t;
  return plus_one_pow(n - 7) *
         descending({1, 7 - N, 21 - 6 * N, 12 * K - 15 * N + 4 * K * U + 8 * ST - 13,
                     48 * K - 20 * N + 16 * K * U + 32 * ST - 157,
                     113 * N - 56 * K - 8 * K * U - 16 * ST * (U - 1) - 267,
                     250 * N - 208 * K - 48 * K * U - 32 * ST * (U + 1) - 185,
                     127 * N - 116 * K - 28 * K * U + 24 * ST * (2 * U - 1) - 47});
}

IntPolynomial qst_charpoly_full_order(int n, int s, int t) {
  check_qst(n, n, s, t, "qst (k = n)");
  const long N = n, ST = static_cast<long>(s) * t;
  return plus_one_pow(n - 7) * descending({1, 7 - N, 21 - 6 * N, -3 * N + 8 * ST - 13, 28 * N + 32 * ST - 157,
                                           57 * N + 16 * ST - 267, 42 * N - 32 * ST - 185,
                                           11 * N - 24 * ST - 47});
}

IntPolynomial qst_charpoly_full_order_sextic(int n, int s, int t) {
  require(s >= 1 && t >= 1, "qst (k = n, sextic)", "needs s, t >= 1");
  require(n == s + t + 4, "qst (k = n, sextic)", "needs n = s + t + 4");
  const long N = n, ST = static_cast<long>(s) * t;
  return plus_one_pow(n - 6) * descending({1, 6 - N, 15 - 5 * N, 2 * N + 8 * ST - 28, 26 * N + 24 * ST - 129,
                                           31 * N - 8 * ST - 138, 11 * N - 24 * ST - 47});
}

IntPolynomial u1_charpoly(int n, int k) {
  require(k >= 3 && k <= n, "u1", "needs 3 <= k <= n");
  require(n >= 5, "u1", "needs n >= 5");
  const long N = n, K = k, U = n - k;
  return plus_one_pow(n - 5) * IntPolynomial{-1, 1} *
         descending({1, 6 - N, 16 - 5 * N, 4 * K - 11 * N + 4 * K * U + 18, 28 * K - 31 * N + 12 * K * U + 7});
}

IntPolynomial diff_qst_vs_q1(int n, int k, int s, int t) {
  check_qst(n, k, s, t, "diff-qst");
  return q1_charpoly(n, k) - qst_charpoly(n, k, s, t);
}

IntPolynomial diff_qst_vs_q1_product(int n, int k, int s, int t) {
  check_qst(n, k, s, t, "diff-qst");
  const long N = n, K = k;
  return Integer(-8L * s * t) * plus_one_pow(n - 7) *
         descending({1, 4, -2 * (N - K - 1), -4 * (N - K + 1), 3 * (2 * N - 2 * K - 1)});
}

IntPolynomial diff_u1_vs_q1(int n, int k) {
  require(n >= 5 && k >= 4 && k <= n, "diff-u1", "needs n >= 5 and 4 <= k <= n");
  return u1_charpoly(n, k) - q1_charpoly(n, k);
}

IntPolynomial diff_u1_vs_q1_product(int n, int k) {
  require(n >= 5 && k >= 4 && k <= n, "diff-u1", "needs n >= 5 and 4 <= k <= n");
  const long N = n, K = k;
  return Integer(-8) * plus_one_pow(n - 5) *
         descending({K - 5, 2 * (N - 5), 12 * N - 11 * K - 2 * K * (N - K) - 5});
}

IntPolynomial diff_star_vs_u1(int n, int k) {
  require(n >= 5 && k >= 3 && k <= n - 1, "diff-star", "needs n >= 5 and 3 <= k <= n-1");
  return star_charpoly(n, k) - u1_charpoly(n, k);
}

IntPolynomial diff_star_vs_u1_product(int n, int k) {
  require(n >= 5 && k >= 3 && k <= n - 1, "diff-star", "needs n >= 5 and 3 <= k <= n-1");
  const long N = n, K = k;
  return Integer(-8) * plus_one_pow(n - 5) *
         descending({K - 1, -2 * (N - 2 * K + 1), 4 * N - 3 * K - 2 * K * (N - K) - 1});
}

IntPolynomial diff_star_vs_u1_triangle(int n) {
  require(n >= 4, "diff-star (k = 3)", "needs n >= 4");
  return Integer(-16) * plus_one_pow(n - 4) * IntPolynomial{4L - n, 1};
}

}  // namespace scg::formulas
