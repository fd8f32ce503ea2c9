// SPDX-License-Identifier: Apache-2.0

#include "scg/charpoly.hpp"

#include <cmath>
#include <type_traits>

#include "scg/error.hpp"

namespace scg {

IntMatrix::IntMatrix(int n, std::span<const int> values) : IntMatrix(n) {
  if (values.size() != entries.size()) fail(ErrorKind::InvalidArgument, "matrix size mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) entries[i] = values[i];
}

namespace {

using Wide = __int128;

template <typename T>
T exact_div(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, Integer>) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  } else {
    return a / b;
  }
}

template <typename T>
T bareiss(std::vector<T> m, int n) {
  auto at = [&](int i, int j) -> T& { return m[static_cast<std::size_t>(i * n + j)]; };
  T previous = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (at(r, k) != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        T num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        at(i, j) = exact_div<T>(num, previous);
      }
    previous = at(k, k);
  }
  T d = n == 0 ? T(1) : at(n - 1, n - 1);
  return sign < 0 ? T(-d) : d;
}

/// log2 of the Hadamard bound on every minor of m.
double hadamard_log2(const IntMatrix& m) {
  double total = 0.0;
  for (int i = 0; i < m.size; ++i) {
    double norm2 = 0.0;
    for (int j = 0; j < m.size; ++j) {
      double v = m.at(i, j).get_d();
      norm2 += v * v;
    }
    total += 0.5 * std::log2(std::max(norm2, 1.0));
  }
  return total;
}

bool fits_in_long(const IntMatrix& m) {
  for (const Integer& e : m.entries)
    if (!e.fits_slong_p()) return false;
  return true;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  const int n = m.size;
  if (n == 0) return 1;
  // Bareiss intermediates are minors; the update multiplies two of them.
  if (fits_in_long(m) && hadamard_log2(m) < 60.0) {
    std::vector<Wide> w(m.entries.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = m.entries[i].get_si();
    Wide d = bareiss<Wide>(std::move(w), n);
    // |d| < 2^60 so it fits in a long.
    return Integer(static_cast<long>(d));
  }
  return bareiss<Integer>(m.entries, n);
}

std::vector<Rational> interpolate_consecutive(std::span<const Rational> values) {
  const int d = static_cast<int>(values.size()) - 1;
  if (d < 0) return {};
  // Newton forward differences: f(x) = sum_j delta_j * C(x, j).
  std::vector<Rational> diff(values.begin(), values.end());
  std::vector<Rational> delta;
  delta.reserve(values.size());
  for (int j = 0; j <= d; ++j) {
    delta.push_back(diff[0]);
    for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i)
      diff[static_cast<std::size_t>(i)] = diff[static_cast<std::size_t>(i) + 1] - diff[static_cast<std::size_t>(i)];
    diff.pop_back();
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, 0);
  std::vector<Rational> falling{1};  // x(x-1)...(x-j+1), ascending coefficients
  Rational factorial = 1;
  for (int j = 0; j <= d; ++j) {
    if (j > 0) {
      factorial *= j;
      std::vector<Rational> next(falling.size() + 1, 0);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * (j - 1);
      }
      falling = std::move(next);
    }
    if (delta[static_cast<std::size_t>(j)] == 0) continue;
    Rational scale = delta[static_cast<std::size_t>(j)] / factorial;
    for (std::size_t i = 0; i < falling.size(); ++i) coeffs[i] += scale * falling[i];
  }
  for (Rational& c : coeffs) c.canonicalize();
  return coeffs;
}

IntPolynomial char_poly_interpolated(const IntMatrix& a) {
  const int n = a.size;
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(n) + 1);
  IntMatrix shifted(n);
  for (int x = 0; x <= n; ++x) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) shifted.at(i, j) = (i == j ? Integer(x) : Integer(0)) - a.at(i, j);
    values.emplace_back(determinant(shifted));
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(values.size());
  for (const Rational& c : interpolate_consecutive(values)) {
    if (c.get_den() != 1)
      fail(ErrorKind::Numeric, "characteristic polynomial interpolation produced a non-integer coefficient");
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly_leverrier(const IntMatrix& a) {
  const int n = a.size;
  // M_1 = I, c_{n-1} = -tr(A); M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix m(n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix next(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Integer s = 0;
        for (int l = 0; l < n; ++l) s += a.at(i, l) * m.at(l, j);
        if (i == j) s += c[static_cast<std::size_t>(n - k + 1)];
        next.at(i, j) = s;
      }
    m = std::move(next);
    Integer trace = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) trace += a.at(i, l) * m.at(l, i);
    if (trace % k != 0) fail(ErrorKind::Numeric, "Faddeev-LeVerrier trace not divisible");
    c[static_cast<std::size_t>(n - k)] = -(trace / k);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly(const SignedCompleteGraph& g) {
  return char_poly_interpolated(IntMatrix(g.order(), g.adjacency()));
}

IntPolynomial char_poly_cross_check(const SignedCompleteGraph& g) {
  return char_poly_leverrier(IntMatrix(g.order(), g.adjacency()));
}

}  // namespace scg
