#pragma once

#include <span>
#include <vector>

#include "polytf/function_rep.hpp"
#include "polytf/weights.hpp"

namespace polytf {

/// Gauss rule: nodes ascending in (-1,1), weights positive, exact for
/// polynomials of degree <= 2N-1 against the tagged measure.  shift = 0 is
/// the base measure w (weight sum = integral of w); shift = m >= 1 is the
/// associated measure of the m-shifted recurrence, normalized to mass 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exactness_degree = 0;
  int shift = 0;
  double total_mass = 0.0;
};

/// Golub-Welsch construction from the N x N Jacobi matrix of the (possibly
/// shifted) source: nodes are its eigenvalues, weight_k is the measure mass
/// times the squared first eigenvector component.
QuadratureRule gauss_rule(const RecurrenceSource& source, int N,
                          int shift_m = 0);

/// sum_i w_i values_i
double integrate(const QuadratureRule& rule, std::span<const double> values);

/// Coefficient-space (Parseval) inner product; throws on source mismatch.
double inner_product(const FunctionRep& f, const FunctionRep& g);

/// Cross-check path: the same inner product evaluated by a Gauss rule of
/// exact degree.
double inner_product_quadrature(const FunctionRep& f, const FunctionRep& g);

struct SubIntervalIntegral {
  double value = 0.0;
  double error_estimate = 0.0;
  bool approximate = false;  // node-classification fallback was used
};

/// Integral of |sum_j coeffs_j q_j|^2 over [-1,1] \ [lo,hi] against the
/// measure of source.shifted(m), where q_j are that measure's orthonormal
/// polynomials.  Chebyshev families use the closed-form density through the
/// substitution x = cos t; other families fall back to classifying the nodes
/// of a large Gauss rule, with the difference against a doubled rule
/// reported as the error estimate.
SubIntervalIntegral integrate_outside(const RecurrenceSource& source, int m,
                                      std::span<const double> coeffs,
                                      int coeff_base, double lo, double hi);

}  // namespace polytf
