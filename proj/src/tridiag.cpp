#include "polytf/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "polytf/kernels.hpp"

namespace polytf {

JacobiMatrix build_jacobi(const RecurrenceSource& source, int m, int n) {
  if (m < 0) throw WindowError("window start must be >= 0");
  if (m > n) throw WindowError("window requires m <= n");
  JacobiMatrix J;
  J.m = m;
  J.n = n;
  J.diag.reserve(static_cast<size_t>(n - m) + 1);
  J.offdiag.reserve(static_cast<size_t>(n - m));
  for (int l = m; l <= n; ++l) J.diag.push_back(source.a(l));
  for (int l = m + 1; l <= n; ++l) {
    const double b = source.b(l);
    if (!(b > 0.0)) throw ParameterError("off-diagonal entries must be > 0");
    J.offdiag.push_back(b);
  }
  return J;
}

// Symmetric tridiagonal QL with implicit shifts, the classical tql2/tqli
// scheme (Bowdler, Martin, Reinsch, Wilkinson; EISPACK lineage).  d holds the
// diagonal on entry and the eigenvalues on exit; e holds the off-diagonal
// (e[i] couples rows i and i+1) and is destroyed.  The accumulated plane
// rotations are applied to the column-major matrix v, input as identity, so
// column k returns the normalized eigenvector of d[k].
static void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                        std::vector<double>& v, int n, double eps) {
  constexpr int kMaxIter = 50;
  e.resize(static_cast<size_t>(n), 0.0);  // one scratch slot past the end
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxIter)
          throw NumericalError(
              "tridiagonal QL failed to converge: eigenvalue " +
              std::to_string(l) + " of " + std::to_string(n) +
              ", residual off-diagonal " + std::to_string(e[l]));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          kernels::rot(v.data() + static_cast<size_t>(i) * n,
                       v.data() + static_cast<size_t>(i + 1) * n,
                       static_cast<size_t>(n), c, s);
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

EigenDecomposition eigendecompose(const JacobiMatrix& J, double tol) {
  const int n = J.dim();
  EigenDecomposition E;
  E.dim = n;
  E.eigenvalues = J.diag;
  E.vectors.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    E.vectors[static_cast<size_t>(i) * n + i] = 1.0;
  if (n == 1) return E;

  std::vector<double> e = J.offdiag;
  // deflate two orders below the promised residual bound tol * ||J||
  const double eps =
      std::max(0.01 * tol, std::numeric_limits<double>::epsilon());
  ql_implicit(E.eigenvalues, e, E.vectors, n, eps);

  // ascending eigenvalue order
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return E.eigenvalues[i] < E.eigenvalues[j];
  });
  std::vector<double> d_sorted(static_cast<size_t>(n));
  std::vector<double> v_sorted(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    d_sorted[k] = E.eigenvalues[order[k]];
    std::copy_n(E.vectors.begin() + static_cast<size_t>(order[k]) * n, n,
                v_sorted.begin() + static_cast<size_t>(k) * n);
  }
  E.eigenvalues = std::move(d_sorted);
  E.vectors = std::move(v_sorted);

  // sign convention: first nonzero component of each column positive
  for (int k = 0; k < n; ++k) {
    double* col = E.vectors.data() + static_cast<size_t>(k) * n;
    for (int i = 0; i < n; ++i) {
      if (col[i] != 0.0) {
        if (col[i] < 0.0)
          for (int j = 0; j < n; ++j) col[j] = -col[j];
        break;
      }
    }
  }
  return E;
}

}  // namespace polytf
