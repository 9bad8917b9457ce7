#pragma once

#include <span>
#include <vector>

#include "polytf/function_rep.hpp"
#include "polytf/spectral.hpp"

namespace polytf {

/// Mean value epsilon(f) = integral of x |f|^2 w, computed exactly as the
/// tridiagonal quadratic form c^T J c over the coefficient span.
/// Requires ||f|| = 1 within 1e-10.
double epsilon(const FunctionRep& f);

/// Variance integral of (x - epsilon)^2 |f|^2 w, computed exactly as
///   ||J c||^2 + b_{m0}^2 c_{m0}^2 [m0 >= 1] + b_{D+1}^2 c_D^2 - epsilon^2
/// over the coefficient span [m0, D].  Requires ||f|| = 1 within 1e-10.
double variance(const FunctionRep& f);

/// Energy fraction sum_{m<=l<=n} |c_l|^2 inside the degree window.
double window_mass(const FunctionRep& f, int m, int n);

struct LocalizationReport {
  double epsilon = 0.0;
  double variance = 0.0;
  double window_mass = 0.0;
};

LocalizationReport localization_report(const FunctionRep& f, int m, int n);

/// Closed-form variance of psi_{n,k}^m:
///   (b_{n+1}^2 p_{n-m}(x_k,m)^2 + b_m^2) / sum_l p_l(x_k,m)^2   (m >= 1)
///   b_{n+1}^2 p_n(x_k)^2 / sum_l p_l(x_k)^2                     (m = 0)
double psi_variance_closed(const SlepianBasis& basis, int k);

enum class KSelector { All, Mid, Extremes };

struct VarianceRow {
  int n = 0;
  int k = 0;
  double x = 0.0;
  double var = 0.0;
};

/// Variance of the window eigenfunctions across increasing n, for decay
/// studies.  KSelector::Mid keeps the middle k only; Extremes keeps the
/// smallest- and largest-eigenvalue rows.
std::vector<VarianceRow> variance_decay_sweep(const RecurrenceSource& source,
                                              int m,
                                              std::span<const int> n_list,
                                              KSelector selector);

}  // namespace polytf
