#pragma once

#include <vector>

#include "polytf/function_rep.hpp"
#include "polytf/quadrature.hpp"
#include "polytf/spectral.hpp"

namespace polytf {

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
};

/// Reinterpret f (supported on degrees >= m) against the m-shifted source:
/// the isometry carrying p_l to p_{l-m}(.,m).  Coefficients are unchanged,
/// so the norm is preserved exactly.
FunctionRep shift_to_associated(const FunctionRep& f, int m);

struct ConcentrationResult {
  double epsilon_m = 0.0;      // smallest concentration level for A
  double error_estimate = 0.0; // quadrature error bound when approximate
  bool approximate = false;
};

/// Smallest eps_m with  integral over [-1,1]\A of |S_m f|^2 w_m
/// <= eps_m^2 ||f||^2, i.e. the complement energy of the shifted function
/// against the associated measure.
ConcentrationResult concentration(const FunctionRep& f, Interval A, int m);

struct BoundCheck {
  enum class Kind { EndpointLeft, EndpointRight, MeanCentered } kind;
  double value = 0.0;
  bool satisfied = false;
};

struct ReconstructionReport {
  std::vector<int> selected;  // 1-based k with x_k in A, ascending
  double residual = 0.0;      // || f - sum_selected <f,psi_k> psi_k ||
  std::vector<BoundCheck> bounds;
  double eps = 0.0;
  double var = 0.0;
};

/// Partial reconstruction of f over the eigenfunctions whose eigenvalue lies
/// in A (closed, endpoint tolerance 1e-12), with the residual computed
/// exactly in coefficient space.  When A matches [-1,-1+a], [1-a,1], or
/// [eps(f)-a, eps(f)+a] within [-1,1], the corresponding localization bound
/// (1+eps)/a, (1-eps)/a, or var/a^2 on the squared residual is reported.
ReconstructionReport reconstruct_on_interval(const FunctionRep& f,
                                             const SlepianBasis& basis,
                                             Interval A);

/// Fraction #{k : x_{n,k}^m in A} / (n - m) for A = [cos(alpha), cos(beta)].
double node_count_fraction(const SlepianBasis& basis, Interval A);

}  // namespace polytf
