#pragma once

#include <span>
#include <vector>

#include "polytf/function_rep.hpp"
#include "polytf/tridiag.hpp"
#include "polytf/weights.hpp"

namespace polytf {

/// Orthonormal eigenbasis {psi_{n,k}^m} of the windowed multiplication
/// operator on the span of p_m..p_n.  Eigenvalues x_{n,k}^m ascend with
/// k = 1 smallest; column k-1 of the coefficient matrix expands psi_k in
/// p_m..p_n.  kappa_k is the normalizing constant, i.e. the reciprocal norm
/// of the recurrence vector (1, p_1(x_k,m), ..., p_{n-m}(x_k,m)) for m >= 1
/// and of (p_0(x_k), ..., p_n(x_k)) for m = 0.
struct SlepianBasis {
  RecurrenceSource source;
  int m = 0;
  int n = 0;
  std::vector<double> eigenvalues;
  std::vector<double> coeffs;  // column-major dim x dim
  std::vector<double> kappa;
  std::vector<double> p_last;  // p_{n-m}(x_k, m); p_n(x_k) when m = 0

  int dim() const { return n - m + 1; }
  /// Component i (0-based, coefficient of p_{m+i}) of psi_k (k 1-based).
  double coeff(int i, int k) const {
    return coeffs[static_cast<size_t>(k - 1) * dim() + i];
  }
  const double* column(int k) const {
    return coeffs.data() + static_cast<size_t>(k - 1) * dim();
  }
  double x_min() const { return eigenvalues.front(); }
  double x_max() const { return eigenvalues.back(); }
};

SlepianBasis slepian_basis(const RecurrenceSource& source, int m, int n,
                           double tol = 1e-12);

/// psi_{n,k}^m(x) through the coefficient expansion (k is 1-based).
double eval_psi_series(const SlepianBasis& basis, int k, double x);
std::vector<double> eval_psi_series_batch(const SlepianBasis& basis, int k,
                                          std::span<const double> xs);

/// psi_{n,k}^m(x) through the Christoffel-Darboux-type closed form
///   kappa (b_{n+1} p_{n+1}(x) p_{n-m}(x_k,m) + b_m p_{m-1}(x)) / (x - x_k)
/// (second numerator term absent for m = 0).  Switches to the series form
/// inside |x - x_k| < 1e-6 (1 + |x_k|) where the quotient loses accuracy.
double eval_psi_explicit(const SlepianBasis& basis, int k, double x);

/// Coefficient representation of psi_k over the base source.
FunctionRep psi_as_function(const SlepianBasis& basis, int k);

}  // namespace polytf
