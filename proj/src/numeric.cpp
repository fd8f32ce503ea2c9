// SPDX-License-Identifier: Apache-2.0

#include "scg/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scg/error.hpp"

namespace scg {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[static_cast<std::size_t>(i * n + j)] * a[static_cast<std::size_t>(i * n + j)];
  return std::sqrt(s);
}

}  // namespace

FloatSpectrum symmetric_eigen(const std::vector<double>& matrix, int n, const JacobiOptions& options) {
  if (n < 1 || matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    fail(ErrorKind::InvalidArgument, "symmetric_eigen: bad matrix dimensions");
  std::vector<double> a = matrix;
  std::vector<double> v(a.size(), 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + i)] = 1.0;
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i * n + j)]; };

  int sweep = 0;
  while (off_diagonal_norm(a, n) >= options.off_diagonal_tolerance) {
    if (sweep++ >= options.max_sweeps)
      fail(ErrorKind::Numeric, "Jacobi eigensolver did not converge in " +
                                   std::to_string(options.max_sweeps) + " sweeps");
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return A(x, x) > A(y, y); });

  FloatSpectrum out;
  out.size = n;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors.resize(a.size());
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.eigenvalues[static_cast<std::size_t>(k)] = A(src, src);
    for (int i = 0; i < n; ++i) out.eigenvectors[static_cast<std::size_t>(i * n + k)] = V(i, src);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      double ax = 0.0;
      for (int j = 0; j < n; ++j) ax += matrix[static_cast<std::size_t>(i * n + j)] * out.vector_entry(j, k);
      out.residual = std::max(out.residual, std::abs(ax - out.eigenvalues[static_cast<std::size_t>(k)] * out.vector_entry(i, k)));
    }
  return out;
}

FloatSpectrum numeric_spectrum(const SignedCompleteGraph& g) {
  std::vector<int> adj = g.adjacency();
  return symmetric_eigen(std::vector<double>(adj.begin(), adj.end()), g.order());
}

}  // namespace scg
