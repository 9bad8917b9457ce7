#pragma once

#include <vector>

#include "polytf/weights.hpp"

namespace polytf {

/// Symmetric Jacobi matrix of a degree window [m, n]: diagonal a_m..a_n,
/// off-diagonal b_{m+1}..b_n, dimension n-m+1.  The off-diagonal entries are
/// strictly positive, so all eigenvalues are simple.
struct JacobiMatrix {
  int m = 0;
  int n = 0;
  std::vector<double> diag;     // a_m .. a_n
  std::vector<double> offdiag;  // b_{m+1} .. b_n
  int dim() const { return n - m + 1; }
};

JacobiMatrix build_jacobi(const RecurrenceSource& source, int m, int n);

/// Full spectral decomposition of a symmetric tridiagonal matrix.
/// Eigenvalues ascend strictly; eigenvectors are orthonormal, stored
/// column-major with the first nonzero component of each column positive.
struct EigenDecomposition {
  int dim = 0;
  std::vector<double> eigenvalues;
  std::vector<double> vectors;  // column-major dim x dim
  double vec(int i, int k) const {
    return vectors[static_cast<size_t>(k) * dim + i];
  }
};

/// Implicit-shift QL with eigenvector accumulation.  tol controls the
/// off-diagonal deflation threshold relative to the local diagonal scale
/// (floored at machine epsilon).  Throws NumericalError if any eigenvalue
/// fails to converge within 50 iterations.
EigenDecomposition eigendecompose(const JacobiMatrix& J, double tol = 1e-12);

}  // namespace polytf
