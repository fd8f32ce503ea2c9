// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "scg/graph.hpp"

namespace scg {

/// Floating-point eigendecomposition of a symmetric matrix. Only used for
/// eigenvector-dependent checks; theorem decisions never read these values.
struct FloatSpectrum {
  int size = 0;
  std::vector<double> eigenvalues;   // descending
  std::vector<double> eigenvectors;  // column k is the unit eigenvector of eigenvalues[k], row-major n x n
  double residual = 0.0;             // max over pairs of |A x - lambda x|_inf

  double vector_entry(int vertex, int k) const {
    return eigenvectors[static_cast<std::size_t>(vertex * size + k)];
  }
};

struct JacobiOptions {
  double off_diagonal_tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Cyclic Jacobi rotations. Throws Error(Numeric) when the off-diagonal
/// Frobenius norm is still above tolerance after max_sweeps.
FloatSpectrum symmetric_eigen(const std::vector<double>& matrix, int n,
                              const JacobiOptions& options = {});

FloatSpectrum numeric_spectrum(const SignedCompleteGraph& g);

}  // namespace scg
